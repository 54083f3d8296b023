#include "gendiag/order.hpp"

#include <algorithm>

namespace gendiag {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail(errc::degree_mismatch, "permutations have different degrees");
}

}  // namespace

bool cycle_leq(const Permutation& tau, const Permutation& sigma) {
  require_same_degree(tau, sigma);
  const auto ct = decompose(tau).all_cycles(2);
  const auto cs = decompose(sigma).all_cycles(2);
  // both sorted
  return std::includes(cs.begin(), cs.end(), ct.begin(), ct.end());
}

bool cycle_equiv(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b);
  return canonicalize_class(a) == canonicalize_class(b);
}

EquivClassRep canonicalize_class(const Permutation& p) {
  EquivClassRep rep;
  rep.degree = p.degree();
  for (Cycle c : decompose(p).all_cycles(1)) {
    if (c.length() >= 3) {
      Cycle r = c.reversed();
      if (r < c) c = std::move(r);
    }
    rep.canonical_cycles.push_back(std::move(c));
  }
  std::sort(rep.canonical_cycles.begin(), rep.canonical_cycles.end());
  return rep;
}

std::vector<Permutation> class_members(const EquivClassRep& rep) {
  std::vector<int> flippable;
  for (size_t i = 0; i < rep.canonical_cycles.size(); ++i)
    if (rep.canonical_cycles[i].length() >= 3) flippable.push_back(static_cast<int>(i));

  std::vector<Permutation> out;
  const size_t m = flippable.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    CycleDecomposition d;
    d.degree = rep.degree;
    d.by_length.assign(static_cast<size_t>(rep.degree) + 1, {});
    for (size_t i = 0; i < rep.canonical_cycles.size(); ++i) {
      Cycle c = rep.canonical_cycles[i];
      auto pos = std::find(flippable.begin(), flippable.end(), static_cast<int>(i));
      if (pos != flippable.end() && (mask >> (pos - flippable.begin())) & 1) c = c.reversed();
      d.by_length[c.length()].push_back(std::move(c));
    }
    out.push_back(recompose(d));
  }
  return out;
}

std::string format_class(const EquivClassRep& rep) {
  std::string out;
  for (const Cycle& c : rep.canonical_cycles)
    if (c.length() >= 2) out += format_cycle(c);
  return out.empty() ? "id" : out;
}

ClassLeqResult class_leq(const Permutation& tau, const Permutation& sigma) {
  require_same_degree(tau, sigma);
  const auto taus = class_members(canonicalize_class(tau));
  const auto sigmas = class_members(canonicalize_class(sigma));
  for (const Permutation& t : taus)
    for (const Permutation& s : sigmas)
      if (cycle_leq(t, s)) return {true, std::make_pair(t, s)};
  return {false, std::nullopt};
}

bool bruhat_leq(const Permutation& tau, const Permutation& sigma) {
  require_same_degree(tau, sigma);
  const int n = tau.degree();
  // cnt[j] accumulates #{k <= i : p(k) >= j} as i advances.
  std::vector<int> ct(n, 0), cs(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= tau(i); ++j) ++ct[j];
    for (int j = 0; j <= sigma(i); ++j) ++cs[j];
    for (int j = 0; j < n; ++j)
      if (ct[j] > cs[j]) return false;
  }
  return true;
}

RelationVerdict classify(const Permutation& sigma, const Permutation& tau, Setting setting) {
  require_same_degree(sigma, tau);
  const bool equiv = cycle_equiv(sigma, tau);

  switch (setting) {
    case Setting::complex_abs: {
      if (equiv) return {Relation::always_equal, std::nullopt};
      if (auto r = class_leq(tau, sigma); r.holds) return {Relation::sigma_leq_tau, r.witness};
      if (auto r = class_leq(sigma, tau); r.holds) return {Relation::tau_leq_sigma, r.witness};
      return {Relation::incomparable, std::nullopt};
    }
    case Setting::complex_plain: {
      if (!sigma.is_involution() || !tau.is_involution())
        return {Relation::undefined, std::nullopt};
      if (equiv) return {Relation::always_equal, std::nullopt};
      if (cycle_leq(tau, sigma)) return {Relation::sigma_leq_tau, std::make_pair(tau, sigma)};
      if (cycle_leq(sigma, tau)) return {Relation::tau_leq_sigma, std::make_pair(sigma, tau)};
      return {Relation::incomparable, std::nullopt};
    }
    case Setting::real_plain: {
      if (equiv) return {Relation::always_equal, std::nullopt};
      if (tau.is_involution() && cycle_leq(tau, sigma))
        return {Relation::sigma_leq_tau, std::make_pair(tau, sigma)};
      if (sigma.is_involution() && cycle_leq(sigma, tau))
        return {Relation::tau_leq_sigma, std::make_pair(sigma, tau)};
      return {Relation::incomparable, std::nullopt};
    }
  }
  fail(errc::malformed_input, "unknown setting");
}

}  // namespace gendiag
