#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gendiag/perm.hpp"

namespace gendiag {

/// Cycle inclusion order: tau <= sigma iff every cycle of tau of length >= 2
/// is a cycle of sigma.  Fixed points are ignored.
bool cycle_leq(const Permutation& tau, const Permutation& sigma);

/// Cycle-reversal equivalence: each cycle of one is equal to, or the inverse
/// of, a cycle of the other, bijectively.
bool cycle_equiv(const Permutation& a, const Permutation& b);

/// Canonical representative of a cycle-reversal equivalence class.  Each
/// cycle of length >= 3 is replaced by the lexicographically smaller of its
/// canonical rotation and its inverse's canonical rotation.
struct EquivClassRep {
  int degree = 0;
  std::vector<Cycle> canonical_cycles;  // sorted; includes fixed points

  bool operator==(const EquivClassRep&) const = default;
  auto operator<=>(const EquivClassRep&) const = default;
};

EquivClassRep canonicalize_class(const Permutation& p);

/// All 2^m members of the class, m = number of cycles of length >= 3.
std::vector<Permutation> class_members(const EquivClassRep& rep);

/// Class label in cycle notation ("id" for the identity class).
std::string format_class(const EquivClassRep& rep);

struct ClassLeqResult {
  bool holds = false;
  std::optional<std::pair<Permutation, Permutation>> witness;  // (tau', sigma')
};

/// [tau] <= [sigma] in the class order: some tau' in [tau] and sigma' in
/// [sigma] satisfy cycle_leq(tau', sigma').
ClassLeqResult class_leq(const Permutation& tau, const Permutation& sigma);

/// Strong Bruhat order, decided by the rank dominance criterion:
/// tau <= sigma iff #{k <= i : tau(k) >= j} <= #{k <= i : sigma(k) >= j}
/// for all i, j.
bool bruhat_leq(const Permutation& tau, const Permutation& sigma);

enum class Setting { complex_abs, complex_plain, real_plain };

enum class Relation { always_equal, sigma_leq_tau, tau_leq_sigma, incomparable, undefined };

struct RelationVerdict {
  Relation relation = Relation::incomparable;
  /// For comparison verdicts: a pair (tau', sigma') with cycle_leq(tau', sigma')
  /// certifying the winning direction.
  std::optional<std::pair<Permutation, Permutation>> witness;
};

/// Decides the universal order relation between the sigma- and tau-diagonals
/// over the setting's matrix class:
///  - complex_abs:  |X_sigma| vs |X_tau| over complex PSD matrices,
///  - complex_plain: X_sigma vs X_tau over complex PSD (defined only when
///    both permutations are involutions),
///  - real_plain:   X_sigma vs X_tau over real symmetric PSD.
RelationVerdict classify(const Permutation& sigma, const Permutation& tau, Setting setting);

}  // namespace gendiag
