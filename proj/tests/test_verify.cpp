#include "doctest.h"

#include <algorithm>

#include "gendiag/verify.hpp"
#include "test_oracles.hpp"

using namespace gendiag;

TEST_CASE("exhaustive poset reports") {
  SUBCASE("class counts match the pairwise-grouping oracle") {
    const int expected[] = {1, 1, 2, 5, 17};
    for (int n = 0; n <= 4; ++n) {
      const auto report = exhaustive_poset(n);
      CHECK(report.class_count == oracle::naive_class_count(n));
      CHECK(report.class_count == expected[n]);
    }
  }
  SUBCASE("all axioms hold up to n = 5") {
    for (int n = 0; n <= 5; ++n) {
      const auto report = exhaustive_poset(n);
      CHECK(report.axiom_failures.empty());
      CHECK(report.bruhat_containment_failures.empty());
      CHECK(report.ok());
    }
  }
  SUBCASE("class relation matches the brute-force oracle at n = 4") {
    const auto report = exhaustive_poset(4);
    const auto perms = oracle::all_perms(4);
    for (const Permutation& t : perms)
      for (const Permutation& s : perms) {
        const auto rt = canonicalize_class(t);
        const auto rs = canonicalize_class(s);
        const int a = std::lower_bound(report.reps.begin(), report.reps.end(), rt) -
                      report.reps.begin();
        const int b = std::lower_bound(report.reps.begin(), report.reps.end(), rs) -
                      report.reps.begin();
        const bool related =
            a == b || std::find(report.relation.begin(), report.relation.end(),
                                std::make_pair(a, b)) != report.relation.end();
        CHECK(related == oracle::naive_class_leq(t, s));
      }
  }
  CHECK_THROWS_AS(exhaustive_poset(8), error);
  CHECK_THROWS_AS(exhaustive_poset(-1), error);
}

TEST_CASE("monte carlo pair checks") {
  SUBCASE("comparable pair has no violations") {
    const auto r = monte_carlo_pair(parse_cycles("(1 3 2)(4 5)", 5), parse_cycles("(1 3 2)", 5),
                                    Setting::complex_abs, 1000, 11);
    CHECK(r.verdict.relation == Relation::sigma_leq_tau);
    CHECK(r.violations == 0);
    CHECK(r.ok());
  }
  SUBCASE("equivalent pair stays within the equality slack") {
    const auto r = monte_carlo_pair(parse_cycles("(1 2 3)", 3), parse_cycles("(3 2 1)", 3),
                                    Setting::complex_abs, 1000, 12);
    CHECK(r.verdict.relation == Relation::always_equal);
    CHECK(r.violations == 0);
    CHECK(r.max_slack_used <= kDefaultLogSlack);
  }
  SUBCASE("identical permutations are trivially fine in every setting") {
    for (auto s : {Setting::complex_abs, Setting::complex_plain, Setting::real_plain}) {
      const auto r = monte_carlo_pair(parse_cycles("(1 2)", 4), parse_cycles("(1 2)", 4), s, 200, 13);
      CHECK(r.ok());
    }
  }
  SUBCASE("undefined verdicts are confirmed by a non-real sample") {
    const auto r = monte_carlo_pair(parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3),
                                    Setting::complex_plain, 50, 14);
    CHECK(r.verdict.relation == Relation::undefined);
    CHECK(r.saw_nonreal_product);
    CHECK(r.ok());
  }
  SUBCASE("plain real comparisons hold") {
    const auto r = monte_carlo_pair(parse_cycles("(1 2)(3 4 5)", 5), parse_cycles("(1 2)", 5),
                                    Setting::real_plain, 500, 15);
    CHECK(r.verdict.relation == Relation::sigma_leq_tau);
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(monte_carlo_pair(Permutation::identity(2), Permutation::identity(3),
                                   Setting::complex_abs, 10, 0),
                  error);
}

TEST_CASE("violation witnesses for incomparable pairs") {
  SUBCASE("3-cycles sharing two letters") {
    const auto w = find_violation(parse_cycles("(1 2 3)", 4), parse_cycles("(1 2 4)", 4));
    CHECK(w.strict());
    CHECK(w.epsilon_used > 0.0);
    CHECK(certify(w.a).verdict == PsdVerdict::pd);
    CHECK(certify(w.a_prime).verdict == PsdVerdict::pd);
    // the chosen entry is a factor of the sigma diagonal but not of tau's
    const Permutation sigma = parse_cycles("(1 2 3)", 4);
    const Permutation tau = parse_cycles("(1 2 4)", 4);
    auto [p, q] = w.chosen_pq;
    CHECK((sigma(p) == q || sigma(q) == p));
    CHECK(tau(p) != q);
    CHECK(tau(q) != p);
  }
  SUBCASE("distinct transpositions") {
    const auto w = find_violation(parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3));
    CHECK(w.strict());
    CHECK(w.chosen_pq == std::make_pair(0, 1));
  }
  SUBCASE("swapping the arguments swaps the directions") {
    const auto w = find_violation(parse_cycles("(1 3)", 3), parse_cycles("(1 2)", 3));
    CHECK(w.strict());
  }
  SUBCASE("comparable pairs are rejected") {
    CHECK_THROWS_AS(find_violation(parse_cycles("(1 2)", 3), Permutation::identity(3)), error);
    CHECK_THROWS_AS(find_violation(parse_cycles("(1 2 3)", 3), parse_cycles("(3 2 1)", 3)), error);
  }
}

TEST_CASE("full theorem audit at small degrees") {
  const auto r2 = full_theorem_audit(2, 100, 42);
  CHECK(r2.pairs_total == 4);
  CHECK(r2.ok());

  const auto r3 = full_theorem_audit(3, 50, 42);
  CHECK(r3.pairs_total == 36);
  CHECK(r3.ok());
  CHECK(r3.witness_pairs > 0);

  CHECK_THROWS_AS(full_theorem_audit(9, 10, 42), error);
}
