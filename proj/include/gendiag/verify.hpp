#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gendiag/construct.hpp"
#include "gendiag/matrix.hpp"
#include "gendiag/order.hpp"

namespace gendiag {

inline constexpr int kMaxPosetDegree = 7;
inline constexpr int kMaxAuditDegree = 5;

struct PosetReport {
  int n = 0;
  int class_count = 0;
  std::vector<EquivClassRep> reps;                 // sorted canonically
  std::vector<std::pair<int, int>> relation;       // (lower, upper) class indices, strict
  std::vector<std::string> axiom_failures;
  std::vector<std::string> bruhat_containment_failures;

  bool ok() const { return axiom_failures.empty() && bruhat_containment_failures.empty(); }
};

/// Enumerates S_n, builds the full class order, and checks the partial-order
/// and equivalence axioms, class-order well-definedness, and the containment
/// of the cycle order in Bruhat order.  Triple-based axiom checks are run for
/// n <= 6.
PosetReport exhaustive_poset(int n);

struct TrialReport {
  Permutation sigma, tau;
  Setting setting = Setting::complex_abs;
  int trials = 0;
  RelationVerdict verdict;
  long violations = 0;
  double max_slack_used = 0.0;
  bool saw_nonreal_product = false;  // relevant for undefined verdicts

  bool ok() const;
};

/// Samples Gram matrices (complex for the complex settings, real otherwise)
/// and counts violations of the classify verdict.
TrialReport monte_carlo_pair(const Permutation& sigma, const Permutation& tau, Setting setting,
                             int trials, std::uint64_t seed);

struct ViolationWitness {
  ComplexMatrix a, a_prime;  // real symmetric PD
  double a_sigma = 0.0, a_tau = 0.0;
  double ap_sigma = 0.0, ap_tau = 0.0;
  std::pair<int, int> chosen_pq{0, 0};  // 0-based, for the A direction
  double epsilon_used = 0.0;

  bool strict() const {
    return 0.0 < a_sigma && a_sigma < a_tau && 0.0 < ap_tau && ap_tau < ap_sigma;
  }
};

/// For an incomparable pair, realizes both strict separations
/// 0 < A_sigma < A_tau and 0 < A'_tau < A'_sigma with epsilon-Gram matrices.
ViolationWitness find_violation(const Permutation& sigma, const Permutation& tau);

struct GapWitness {
  ComplexMatrix a;
  double a_sigma = 0.0, a_tau = 0.0;
  std::pair<int, int> chosen_pq{0, 0};
  double epsilon_used = 0.0;
};

/// Builds a PD matrix with 0 < A_sigma < A_tau strictly.  Requires sigma to
/// own a cycle that is neither a cycle of tau nor the inverse of one, which
/// holds whenever [sigma] is not below-or-equal [tau] in the class order.
GapWitness make_sigma_smaller(const Permutation& sigma, const Permutation& tau);

struct AuditReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  long pairs_total = 0;
  long monte_carlo_pairs = 0;
  long witness_pairs = 0;
  long strict_gap_pairs = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Exercises every ordered pair in S_n x S_n against the absolute-value
/// classification: comparisons are Monte-Carlo checked, incomparable pairs
/// must produce both violation witnesses, and strict comparisons must admit
/// a matrix with strictly different magnitudes.
AuditReport full_theorem_audit(int n, int trials, std::uint64_t seed);

/// All n! permutations in lexicographic order of their one-line words.
std::vector<Permutation> enumerate_symmetric_group(int n);

}  // namespace gendiag
