#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gendiag/perm.hpp"

namespace gendiag {

using cxd = std::complex<double>;

/// Dense n x n complex matrix, immutable after construction.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Row-major entries; rejects non-finite values.
  ComplexMatrix(int n, std::vector<cxd> entries);

  static ComplexMatrix identity(int n);

  int dim() const { return n_; }
  cxd operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<cxd>& entries() const { return a_; }

  /// Largest entry magnitude, or 1 for the all-zero (or empty) matrix.
  double scale() const;

  bool operator==(const ComplexMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<cxd> a_;
};

enum class PsdVerdict { pd, psd, not_psd, not_hermitian };

struct PsdCertificate {
  double hermitian_defect = 0.0;  // max |x_ij - conj(x_ji)|
  double min_eigenvalue = 0.0;    // of the Hermitian part
  PsdVerdict verdict = PsdVerdict::not_psd;

  bool is_psd() const { return verdict == PsdVerdict::pd || verdict == PsdVerdict::psd; }
};

inline constexpr double kDefaultCertTol = 1e-10;
inline constexpr double kDefaultLogSlack = 1e-9;

PsdCertificate certify(const ComplexMatrix& x, double tol = kDefaultCertTol);

/// A generalized diagonal product in log-magnitude form.
struct DiagonalValue {
  double log_magnitude = 0.0;     // -inf when some factor is exactly zero
  std::optional<cxd> phase;       // unit modulus; unset when the magnitude is zero
  bool is_real = false;
  std::optional<int> sign;        // +1 / -1 when is_real and nonzero

  bool is_zero() const;
  double magnitude() const;
  /// Signed value sign * exp(log_magnitude); only when is_real.
  std::optional<double> real_value() const;
};

/// The product over k of x_{k, sigma(k)}, accumulated in the log domain.
DiagonalValue generalized_diagonal(const ComplexMatrix& x, const Permutation& sigma);

/// |x_ij|^2 <= x_ii * x_jj (+ slack) for all pairs; requires a PSD certificate.
bool hadamard_pair_check(const ComplexMatrix& x, const PsdCertificate& cert,
                         double slack = kDefaultLogSlack);

/// |prod x_{c_i, c_{i+1}}| <= prod |x_{c_i, c_i}| (+ log-domain slack).
bool cycle_factor_check(const ComplexMatrix& x, const PsdCertificate& cert, const Cycle& c,
                        double slack = kDefaultLogSlack);

/// Text format: first line n, then n rows of n entries; an entry is a real
/// literal or "a+bi" / "a-bi".
ComplexMatrix read_matrix(const std::string& text);
std::string write_matrix(const ComplexMatrix& x);

}  // namespace gendiag
