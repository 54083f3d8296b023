#pragma once

#include <cstdint>

#include "gendiag/matrix.hpp"

namespace gendiag {

enum class Field { real, complex_entries };
enum class GramKind { psd, pd };

struct GeneratorSpec {
  int n = 0;
  std::uint64_t seed = 0;
  Field field = Field::complex_entries;
  GramKind kind = GramKind::psd;
};

inline constexpr double kDefaultEpsilon = 1e-3;

/// B * B^T or B * B^* for a standard-normal factor B; deterministic per seed.
/// For GramKind::pd the factor is redrawn (bounded retries) until the result
/// certifies PD.
ComplexMatrix random_gram(const GeneratorSpec& spec);

/// Gram matrix of the rows
///   v_p = e_p + (eps/2) e_q,
///   v_q = e_q + (eps/2) e_p,
///   v_k = e_k + e_p + e_q   otherwise,
/// giving a positive definite real matrix whose (p, q) entry equals eps
/// exactly while every other entry exceeds 1.
struct CounterexampleSpec {
  int n = 0;
  int p = 0;  // 0-based, distinct
  int q = 0;
  double epsilon = kDefaultEpsilon;  // in (0, 1)
};

ComplexMatrix epsilon_gram(const CounterexampleSpec& spec);

}  // namespace gendiag
