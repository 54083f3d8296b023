#include "gendiag/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace gendiag {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRealPhaseTol = 1e-12;

}  // namespace

ComplexMatrix::ComplexMatrix(int n, std::vector<cxd> entries) : n_(n), a_(std::move(entries)) {
  if (n < 0 || a_.size() != static_cast<size_t>(n) * n)
    fail(errc::malformed_input, "matrix entry count does not match dimension");
  for (const cxd& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(errc::malformed_input, "non-finite matrix entry");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  std::vector<cxd> a(static_cast<size_t>(n) * n, cxd{0.0, 0.0});
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = 1.0;
  return ComplexMatrix(n, std::move(a));
}

double ComplexMatrix::scale() const {
  double s = 0.0;
  for (const cxd& v : a_) s = std::max(s, std::abs(v));
  return s > 0.0 ? s : 1.0;
}

PsdCertificate certify(const ComplexMatrix& x, double tol) {
  const int n = x.dim();
  PsdCertificate cert;
  if (n == 0) {
    cert.min_eigenvalue = kInf;
    cert.verdict = PsdVerdict::pd;
    return cert;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cert.hermitian_defect = std::max(cert.hermitian_defect, std::abs(x(i, j) - std::conj(x(j, i))));

  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = x(i, j);
  Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  cert.min_eigenvalue = es.eigenvalues().minCoeff();

  const double s = x.scale();
  if (cert.hermitian_defect > tol * s)
    cert.verdict = PsdVerdict::not_hermitian;
  else if (cert.min_eigenvalue > tol * s)
    cert.verdict = PsdVerdict::pd;
  else if (cert.min_eigenvalue >= -tol * s)
    cert.verdict = PsdVerdict::psd;
  else
    cert.verdict = PsdVerdict::not_psd;
  return cert;
}

bool DiagonalValue::is_zero() const { return log_magnitude == -kInf; }

double DiagonalValue::magnitude() const { return is_zero() ? 0.0 : std::exp(log_magnitude); }

std::optional<double> DiagonalValue::real_value() const {
  if (!is_real) return std::nullopt;
  if (is_zero()) return 0.0;
  return static_cast<double>(*sign) * std::exp(log_magnitude);
}

DiagonalValue generalized_diagonal(const ComplexMatrix& x, const Permutation& sigma) {
  if (x.dim() != sigma.degree()) fail(errc::degree_mismatch, "matrix dimension != permutation degree");
  DiagonalValue v;
  cxd phase{1.0, 0.0};
  for (int k = 0; k < x.dim(); ++k) {
    const cxd f = x(k, sigma(k));
    const double m = std::abs(f);
    if (m == 0.0) {
      v.log_magnitude = -kInf;
      v.phase.reset();
      v.is_real = true;
      v.sign.reset();
      return v;
    }
    v.log_magnitude += std::log(m);
    phase *= f / m;
  }
  phase /= std::abs(phase);
  v.phase = phase;
  v.is_real = std::abs(phase.imag()) <= kRealPhaseTol;
  if (v.is_real) v.sign = phase.real() > 0.0 ? 1 : -1;
  return v;
}

bool hadamard_pair_check(const ComplexMatrix& x, const PsdCertificate& cert, double slack) {
  if (!cert.is_psd()) fail(errc::not_certified, "matrix lacks a PSD certificate");
  const int n = x.dim();
  const double s = x.scale();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double lhs = std::norm(x(i, j));
      const double rhs = x(i, i).real() * x(j, j).real();
      if (lhs > rhs + slack * s * s) return false;
    }
  return true;
}

bool cycle_factor_check(const ComplexMatrix& x, const PsdCertificate& cert, const Cycle& c,
                        double slack) {
  if (!cert.is_psd()) fail(errc::not_certified, "matrix lacks a PSD certificate");
  const int n = x.dim();
  const int l = c.length();
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < l; ++i) {
    const int a = c.elements[i];
    const int b = c.elements[(i + 1) % l];
    if (a < 0 || a >= n) fail(errc::out_of_range, "cycle element out of matrix range");
    const double off = std::abs(x(a, b));
    const double diag = std::abs(x(a, a));
    if (off == 0.0) lhs = -kInf;
    if (lhs != -kInf) lhs += std::log(off);
    if (diag == 0.0) rhs = -kInf;
    if (rhs != -kInf) rhs += std::log(diag);
  }
  if (lhs == -kInf) return true;
  if (rhs == -kInf) return false;
  return lhs <= rhs + slack;
}

namespace {

cxd parse_entry(const std::string& tok) {
  auto parse_real = [](const std::string& s) -> double {
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      fail(errc::malformed_input, "bad matrix entry: '" + s + "'");
    }
    if (pos != s.size()) fail(errc::malformed_input, "bad matrix entry: '" + s + "'");
    return v;
  };
  if (tok.empty()) fail(errc::malformed_input, "empty matrix entry");
  if (tok.back() != 'i') return cxd{parse_real(tok), 0.0};

  const std::string body = tok.substr(0, tok.size() - 1);
  // split at the last +/- that is not an exponent sign
  size_t split = std::string::npos;
  for (size_t k = 1; k < body.size(); ++k) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') split = k;
  }
  if (split == std::string::npos) return cxd{0.0, parse_real(body)};  // pure imaginary "bi"
  const double re = parse_real(body.substr(0, split));
  std::string im_part = body.substr(split);
  if (im_part == "+" || im_part == "-") im_part += '1';
  return cxd{re, parse_real(im_part)};
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ComplexMatrix read_matrix(const std::string& text) {
  std::istringstream in(text);
  long long n = -1;
  if (!(in >> n) || n < 0) fail(errc::malformed_input, "missing or bad dimension line");
  std::vector<cxd> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  std::string tok;
  for (long long k = 0; k < n * n; ++k) {
    if (!(in >> tok)) fail(errc::malformed_input, "too few matrix entries");
    entries.push_back(parse_entry(tok));
  }
  if (in >> tok) fail(errc::malformed_input, "trailing content after matrix entries");
  return ComplexMatrix(static_cast<int>(n), std::move(entries));
}

std::string write_matrix(const ComplexMatrix& x) {
  std::string out = std::to_string(x.dim());
  out += '\n';
  for (int i = 0; i < x.dim(); ++i) {
    for (int j = 0; j < x.dim(); ++j) {
      if (j) out += ' ';
      const cxd v = x(i, j);
      if (v.imag() == 0.0) {
        out += format_real(v.real());
      } else {
        out += format_real(v.real());
        if (v.imag() >= 0.0) out += '+';
        out += format_real(v.imag());
        out += 'i';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace gendiag
