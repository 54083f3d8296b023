#include "gendiag/construct.hpp"

#include <cmath>
#include <vector>

#include "gendiag/rng.hpp"

namespace gendiag {

namespace {

constexpr int kPdRetryLimit = 64;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<cxd> draw_factor(int n, Field field, std::uint64_t stream) {
  SplitMix64 g(stream);
  std::vector<cxd> b(static_cast<size_t>(n) * n);
  for (auto& v : b) {
    if (field == Field::real) {
      v = cxd{g.next_normal(), 0.0};
    } else {
      const double re = g.next_normal();
      const double im = g.next_normal();
      v = cxd{re * kInvSqrt2, im * kInvSqrt2};
    }
  }
  return b;
}

ComplexMatrix gram_of(int n, const std::vector<cxd>& b) {
  std::vector<cxd> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cxd acc{0.0, 0.0};
      for (int k = 0; k < n; ++k)
        acc += b[static_cast<size_t>(i) * n + k] * std::conj(b[static_cast<size_t>(j) * n + k]);
      if (i == j) acc = cxd{acc.real(), 0.0};
      a[static_cast<size_t>(i) * n + j] = acc;
      a[static_cast<size_t>(j) * n + i] = std::conj(acc);
    }
  }
  return ComplexMatrix(n, std::move(a));
}

}  // namespace

ComplexMatrix random_gram(const GeneratorSpec& spec) {
  if (spec.n < 0) fail(errc::malformed_input, "negative dimension");
  for (int attempt = 0; attempt < kPdRetryLimit; ++attempt) {
    const std::uint64_t stream = derive_stream(spec.seed, static_cast<std::uint64_t>(attempt));
    ComplexMatrix a = gram_of(spec.n, draw_factor(spec.n, spec.field, stream));
    if (spec.kind == GramKind::psd) return a;
    if (certify(a).verdict == PsdVerdict::pd) return a;
  }
  fail(errc::generation_failed, "could not draw a PD Gram matrix; check the RNG seed handling");
}

ComplexMatrix epsilon_gram(const CounterexampleSpec& spec) {
  if (spec.n < 2) fail(errc::malformed_input, "counterexample dimension must be >= 2");
  if (spec.p == spec.q || spec.p < 0 || spec.q < 0 || spec.p >= spec.n || spec.q >= spec.n)
    fail(errc::out_of_range, "indices p, q must be distinct and within the dimension");
  if (!(spec.epsilon > 0.0 && spec.epsilon < 1.0))
    fail(errc::malformed_input, "epsilon must lie in (0, 1)");

  const int n = spec.n;
  const double half = spec.epsilon / 2.0;
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    v[k][k] += 1.0;
    if (k == spec.p) {
      v[k][spec.q] += half;
    } else if (k == spec.q) {
      v[k][spec.p] += half;
    } else {
      v[k][spec.p] += 1.0;
      v[k][spec.q] += 1.0;
    }
  }
  std::vector<cxd> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += v[i][k] * v[j][k];
      a[static_cast<size_t>(i) * n + j] = cxd{acc, 0.0};
    }
  return ComplexMatrix(n, std::move(a));
}

}  // namespace gendiag
