#include "gendiag.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gendiag/construct.hpp"
#include "gendiag/hasse.hpp"
#include "gendiag/matrix.hpp"
#include "gendiag/order.hpp"
#include "gendiag/perm.hpp"
#include "gendiag/report.hpp"
#include "gendiag/verify.hpp"

using namespace gendiag;

struct gd_perm {
  Permutation rep;
};

struct gd_matrix {
  ComplexMatrix rep;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gd_status map_code(errc code) {
  switch (code) {
    case errc::malformed_input: return GD_MALFORMED_INPUT;
    case errc::not_a_bijection: return GD_NOT_A_BIJECTION;
    case errc::repeated_element: return GD_REPEATED_ELEMENT;
    case errc::out_of_range: return GD_OUT_OF_RANGE;
    case errc::degree_mismatch: return GD_DEGREE_MISMATCH;
    case errc::degree_too_large: return GD_DEGREE_TOO_LARGE;
    case errc::not_certified: return GD_NOT_CERTIFIED;
    case errc::not_incomparable: return GD_NOT_INCOMPARABLE;
    case errc::case_search_failed: return GD_CASE_SEARCH_FAILED;
    case errc::generation_failed: return GD_GENERATION_FAILED;
  }
  return GD_INTERNAL_ERROR;
}

template <typename Fn>
gd_status guarded(Fn&& fn) {
  try {
    fn();
    return GD_OK;
  } catch (const error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GD_INTERNAL_ERROR;
  }
}

gd_status invalid(const char* what) {
  g_last_error = what;
  return GD_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* gd_last_error(void) { return g_last_error.c_str(); }

void gd_string_free(char* s) { std::free(s); }

gd_status gd_perm_parse_one_line(const char* text, gd_perm** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new gd_perm{parse_one_line(text)}; });
}

gd_status gd_perm_parse_cycles(const char* text, int n, gd_perm** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new gd_perm{parse_cycles(text, n)}; });
}

void gd_perm_free(gd_perm* p) { delete p; }

int gd_perm_degree(const gd_perm* p) { return p ? p->rep.degree() : -1; }

gd_status gd_perm_format_cycles(const gd_perm* p, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] { *out = copy_string(format_cycles(p->rep)); });
}

gd_status gd_perm_format_one_line(const gd_perm* p, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] { *out = copy_string(format_one_line(p->rep)); });
}

gd_status gd_perm_is_involution(const gd_perm* p, int* out) {
  if (!p || !out) return invalid("null argument");
  *out = p->rep.is_involution() ? 1 : 0;
  return GD_OK;
}

gd_status gd_classify(const gd_perm* sigma, const gd_perm* tau, gd_setting setting,
                      gd_relation* verdict, char** witness_tau, char** witness_sigma) {
  if (!sigma || !tau || !verdict) return invalid("null argument");
  if (witness_tau) *witness_tau = nullptr;
  if (witness_sigma) *witness_sigma = nullptr;
  return guarded([&] {
    const RelationVerdict v =
        classify(sigma->rep, tau->rep, static_cast<Setting>(static_cast<int>(setting)));
    *verdict = static_cast<gd_relation>(static_cast<int>(v.relation));
    if (v.witness) {
      if (witness_tau) *witness_tau = copy_string(format_cycles(v.witness->first));
      if (witness_sigma) *witness_sigma = copy_string(format_cycles(v.witness->second));
    }
  });
}

gd_status gd_cycle_leq(const gd_perm* tau, const gd_perm* sigma, int* out) {
  if (!tau || !sigma || !out) return invalid("null argument");
  return guarded([&] { *out = cycle_leq(tau->rep, sigma->rep) ? 1 : 0; });
}

gd_status gd_cycle_equiv(const gd_perm* a, const gd_perm* b, int* out) {
  if (!a || !b || !out) return invalid("null argument");
  return guarded([&] { *out = cycle_equiv(a->rep, b->rep) ? 1 : 0; });
}

gd_status gd_bruhat_leq(const gd_perm* tau, const gd_perm* sigma, int* out) {
  if (!tau || !sigma || !out) return invalid("null argument");
  return guarded([&] { *out = bruhat_leq(tau->rep, sigma->rep) ? 1 : 0; });
}

gd_status gd_matrix_parse(const char* text, gd_matrix** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] { *out = new gd_matrix{read_matrix(text)}; });
}

gd_status gd_matrix_format(const gd_matrix* m, char** out) {
  if (!m || !out) return invalid("null argument");
  return guarded([&] { *out = copy_string(write_matrix(m->rep)); });
}

void gd_matrix_free(gd_matrix* m) { delete m; }

int gd_matrix_dim(const gd_matrix* m) { return m ? m->rep.dim() : -1; }

gd_status gd_matrix_random_gram(int n, uint64_t seed, gd_field field, gd_gram_kind kind,
                                gd_matrix** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    GeneratorSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.field = field == GD_FIELD_REAL ? Field::real : Field::complex_entries;
    spec.kind = kind == GD_GRAM_PD ? GramKind::pd : GramKind::psd;
    *out = new gd_matrix{random_gram(spec)};
  });
}

gd_status gd_matrix_epsilon_gram(int n, int p, int q, double epsilon, gd_matrix** out) {
  if (!out) return invalid("null argument");
  return guarded([&] { *out = new gd_matrix{epsilon_gram({n, p - 1, q - 1, epsilon})}; });
}

gd_status gd_matrix_certify(const gd_matrix* m, double tol, gd_psd_certificate* out) {
  if (!m || !out) return invalid("null argument");
  return guarded([&] {
    const PsdCertificate cert = certify(m->rep, tol > 0.0 ? tol : kDefaultCertTol);
    out->hermitian_defect = cert.hermitian_defect;
    out->min_eigenvalue = cert.min_eigenvalue;
    out->verdict = static_cast<gd_psd_verdict>(static_cast<int>(cert.verdict));
  });
}

gd_status gd_generalized_diagonal(const gd_matrix* m, const gd_perm* sigma, gd_diag_value* out) {
  if (!m || !sigma || !out) return invalid("null argument");
  return guarded([&] {
    const DiagonalValue v = generalized_diagonal(m->rep, sigma->rep);
    out->log_magnitude = v.log_magnitude;
    out->has_phase = v.phase.has_value() ? 1 : 0;
    out->phase_re = v.phase ? v.phase->real() : 0.0;
    out->phase_im = v.phase ? v.phase->imag() : 0.0;
    out->is_real = v.is_real ? 1 : 0;
    out->sign = v.sign.value_or(0);
  });
}

gd_status gd_verify_poset(int n, char** json_report, int* failure_count) {
  if (!json_report || !failure_count) return invalid("null argument");
  return guarded([&] {
    const PosetReport report = exhaustive_poset(n);
    *json_report = copy_string(poset_report_json(report));
    *failure_count = static_cast<int>(report.axiom_failures.size() +
                                      report.bruhat_containment_failures.size());
  });
}

gd_status gd_verify_audit(int n, int trials, uint64_t seed, char** json_report,
                          int* failure_count) {
  if (!json_report || !failure_count) return invalid("null argument");
  if (trials < 1) return invalid("trials must be >= 1");
  return guarded([&] {
    const AuditReport report = full_theorem_audit(n, trials, seed);
    *json_report = copy_string(audit_report_json(report));
    *failure_count = static_cast<int>(report.failures.size());
  });
}

gd_status gd_hasse_dot(int n, int on_classes, char** dot) {
  if (!dot) return invalid("null argument");
  return guarded([&] {
    const HasseGraph g = on_classes ? class_hasse(n) : perm_hasse(n);
    *dot = copy_string(to_dot(g, on_classes ? "class_order" : "cycle_order"));
  });
}

}  // extern "C"
