// Command-line front end; talks to the library exclusively through the
// C API in gendiag.h.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gendiag.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitVerifyFailed = 4;

int exit_code_for(gd_status s) {
  switch (s) {
    case GD_OK:
      return 0;
    case GD_DEGREE_MISMATCH:
      return kExitMismatch;
    case GD_MALFORMED_INPUT:
    case GD_NOT_A_BIJECTION:
    case GD_REPEATED_ELEMENT:
    case GD_OUT_OF_RANGE:
    case GD_DEGREE_TOO_LARGE:
    case GD_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitVerifyFailed;
  }
}

int report_error(gd_status s) {
  std::cerr << "error: " << gd_last_error() << "\n";
  return exit_code_for(s);
}

bool looks_like_cycles(const std::string& text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '(';
  return true;  // empty text: identity in cycle form
}

int max_element_in(const std::string& text) {
  int best = 0, cur = 0;
  bool in_num = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = cur * 10 + (c - '0');
      in_num = true;
    } else {
      if (in_num) best = std::max(best, cur);
      cur = 0;
      in_num = false;
    }
  }
  if (in_num) best = std::max(best, cur);
  return best;
}

gd_status parse_perm(const std::string& text, int n, gd_perm** out) {
  if (looks_like_cycles(text)) return gd_perm_parse_cycles(text.c_str(), n, out);
  return gd_perm_parse_one_line(text.c_str(), out);
}

struct PermHolder {
  gd_perm* p = nullptr;
  ~PermHolder() { gd_perm_free(p); }
};

struct MatrixHolder {
  gd_matrix* m = nullptr;
  ~MatrixHolder() { gd_matrix_free(m); }
};

struct StringHolder {
  char* s = nullptr;
  ~StringHolder() { gd_string_free(s); }
};

int run_classify(const std::string& sigma_text, const std::string& tau_text,
                 const std::string& setting_name, int n_flag) {
  int n = n_flag;
  if (n <= 0) n = std::max(max_element_in(sigma_text), max_element_in(tau_text));

  PermHolder sigma, tau;
  if (gd_status s = parse_perm(sigma_text, n, &sigma.p); s != GD_OK) return report_error(s);
  if (gd_status s = parse_perm(tau_text, n, &tau.p); s != GD_OK) return report_error(s);

  gd_setting setting = GD_SETTING_COMPLEX_ABS;
  if (setting_name == "abs")
    setting = GD_SETTING_COMPLEX_ABS;
  else if (setting_name == "complex")
    setting = GD_SETTING_COMPLEX_PLAIN;
  else if (setting_name == "real")
    setting = GD_SETTING_REAL_PLAIN;
  else {
    std::cerr << "error: unknown setting '" << setting_name << "'\n";
    return kExitUsage;
  }

  gd_relation verdict;
  StringHolder wt, ws;
  if (gd_status s = gd_classify(sigma.p, tau.p, setting, &verdict, &wt.s, &ws.s); s != GD_OK)
    return report_error(s);

  StringHolder sigma_label, tau_label;
  gd_perm_format_cycles(sigma.p, &sigma_label.s);
  gd_perm_format_cycles(tau.p, &tau_label.s);
  const bool abs_setting = setting == GD_SETTING_COMPLEX_ABS;
  const std::string ls = abs_setting ? "|X_sigma|" : "X_sigma";
  const std::string lt = abs_setting ? "|X_tau|" : "X_tau";
  std::cout << "sigma: " << sigma_label.s << "\n"
            << "tau:   " << tau_label.s << "\n";
  switch (verdict) {
    case GD_ALWAYS_EQUAL:
      std::cout << "verdict: " << ls << " = " << lt << " for every matrix in the class\n";
      break;
    case GD_SIGMA_LEQ_TAU:
      std::cout << "verdict: " << ls << " <= " << lt << " for every matrix in the class\n";
      break;
    case GD_TAU_LEQ_SIGMA:
      std::cout << "verdict: " << lt << " <= " << ls << " for every matrix in the class\n";
      break;
    case GD_INCOMPARABLE:
      std::cout << "verdict: incomparable (each direction fails on some matrix)\n";
      break;
    case GD_UNDEFINED:
      std::cout << "verdict: undefined (some products are not real)\n";
      break;
  }
  if (wt.s && ws.s)
    std::cout << "witness: " << wt.s << " lies cycle-wise inside " << ws.s << "\n";

  int tb = 0, bt = 0;
  gd_bruhat_leq(tau.p, sigma.p, &tb);
  gd_bruhat_leq(sigma.p, tau.p, &bt);
  std::cout << "bruhat: tau <= sigma: " << (tb ? "yes" : "no")
            << "; sigma <= tau: " << (bt ? "yes" : "no") << "\n";
  return 0;
}

int run_diag(const std::string& matrix_path, const std::string& sigma_text) {
  std::ifstream in(matrix_path);
  if (!in) {
    std::cerr << "error: cannot open '" << matrix_path << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  MatrixHolder m;
  if (gd_status s = gd_matrix_parse(buf.str().c_str(), &m.m); s != GD_OK) return report_error(s);

  PermHolder sigma;
  if (gd_status s = parse_perm(sigma_text, gd_matrix_dim(m.m), &sigma.p); s != GD_OK)
    return report_error(s);

  gd_diag_value v;
  if (gd_status s = gd_generalized_diagonal(m.m, sigma.p, &v); s != GD_OK) return report_error(s);

  if (std::isinf(v.log_magnitude) && v.log_magnitude < 0) {
    std::cout << "magnitude: 0\nlog magnitude: -inf\n";
  } else {
    std::printf("magnitude: %.17g\nlog magnitude: %.17g\n", std::exp(v.log_magnitude),
                v.log_magnitude);
  }
  if (v.is_real && v.sign != 0)
    std::cout << "sign: " << (v.sign > 0 ? "+1" : "-1") << "\n";
  else if (v.has_phase)
    std::printf("phase: %.17g%+.17gi\n", v.phase_re, v.phase_im);
  return 0;
}

int run_gen(bool psd, bool pd, bool counterexample, bool real_field, int n, std::uint64_t seed,
            int p, int q, double epsilon) {
  const int kinds = int(psd) + int(pd) + int(counterexample);
  if (kinds != 1) {
    std::cerr << "error: choose exactly one of --psd, --pd, --counterexample\n";
    return kExitUsage;
  }
  MatrixHolder m;
  gd_status s;
  if (counterexample) {
    s = gd_matrix_epsilon_gram(n, p, q, epsilon, &m.m);
  } else {
    s = gd_matrix_random_gram(n, seed, real_field ? GD_FIELD_REAL : GD_FIELD_COMPLEX,
                              pd ? GD_GRAM_PD : GD_GRAM_PSD, &m.m);
  }
  if (s != GD_OK) return report_error(s);
  StringHolder text;
  if ((s = gd_matrix_format(m.m, &text.s)) != GD_OK) return report_error(s);
  std::cout << text.s;
  return 0;
}

int run_verify(bool poset, bool audit, int n, int trials, std::uint64_t seed) {
  if (int(poset) + int(audit) != 1) {
    std::cerr << "error: choose exactly one of --poset, --audit\n";
    return kExitUsage;
  }
  StringHolder report;
  int failures = 0;
  gd_status s = poset ? gd_verify_poset(n, &report.s, &failures)
                      : gd_verify_audit(n, trials, seed, &report.s, &failures);
  if (s != GD_OK) return report_error(s);
  std::cout << report.s;
  return failures == 0 ? 0 : kExitVerifyFailed;
}

int run_hasse(int n, bool on_perms) {
  StringHolder dot;
  if (gd_status s = gd_hasse_dot(n, on_perms ? 0 : 1, &dot.s); s != GD_OK)
    return report_error(s);
  std::cout << dot.s;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order relations between generalized diagonal products of PSD matrices"};
  app.require_subcommand(1);

  // classify
  std::string sigma_text, tau_text, setting_name = "abs";
  int classify_n = 0;
  auto* classify = app.add_subcommand("classify", "decide the universal order of two diagonals");
  classify->add_option("sigma", sigma_text, "permutation (cycle or one-line form)")->required();
  classify->add_option("tau", tau_text, "permutation (cycle or one-line form)")->required();
  classify->add_option("--setting", setting_name, "abs | complex | real (default abs)");
  classify->add_option("--n", classify_n, "degree (default: largest element mentioned)");

  // diag
  std::string matrix_path, diag_sigma;
  auto* diag = app.add_subcommand("diag", "evaluate a generalized diagonal of a matrix file");
  diag->add_option("matrix", matrix_path, "matrix file")->required();
  diag->add_option("sigma", diag_sigma, "permutation")->required();

  // gen
  bool gen_psd = false, gen_pd = false, gen_counter = false, gen_real = false,
       gen_complex = false;
  int gen_n = 0, gen_p = 1, gen_q = 2;
  std::uint64_t gen_seed = 0;
  double gen_epsilon = 1e-3;
  auto* gen = app.add_subcommand("gen", "emit a matrix in the canonical file format");
  gen->add_flag("--psd", gen_psd, "random PSD Gram matrix");
  gen->add_flag("--pd", gen_pd, "random PD Gram matrix");
  gen->add_flag("--counterexample", gen_counter, "epsilon-entry PD Gram matrix");
  gen->add_flag("--real", gen_real, "real entries (random kinds)");
  gen->add_flag("--complex", gen_complex, "complex entries (default)");
  gen->add_option("--n", gen_n, "dimension")->required();
  gen->add_option("--seed", gen_seed, "RNG seed (random kinds)");
  gen->add_option("--p", gen_p, "first index (counterexample, 1-based)");
  gen->add_option("--q", gen_q, "second index (counterexample, 1-based)");
  gen->add_option("--epsilon", gen_epsilon, "entry value in (0,1) (counterexample)");

  // verify
  bool verify_poset = false, verify_audit = false;
  int verify_n = 0, verify_trials = 100;
  std::uint64_t verify_seed = 42;
  auto* verify = app.add_subcommand("verify", "run an exhaustive or randomized verification");
  verify->add_flag("--poset", verify_poset, "poset axioms + Bruhat containment");
  verify->add_flag("--audit", verify_audit, "full theorem audit over S_n x S_n");
  verify->add_option("--n", verify_n, "degree")->required();
  verify->add_option("--trials", verify_trials, "Monte Carlo trials per pair (audit)");
  verify->add_option("--seed", verify_seed, "RNG seed (audit)");

  // hasse
  int hasse_n = 0;
  bool hasse_classes = false, hasse_perms = false;
  auto* hasse = app.add_subcommand("hasse", "emit the covering relation as a DOT digraph");
  hasse->add_option("--n", hasse_n, "degree")->required();
  hasse->add_flag("--classes", hasse_classes, "class order (default)");
  hasse->add_flag("--perms", hasse_perms, "cycle order on permutations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (classify->parsed()) return run_classify(sigma_text, tau_text, setting_name, classify_n);
  if (diag->parsed()) return run_diag(matrix_path, diag_sigma);
  if (gen->parsed())
    return run_gen(gen_psd, gen_pd, gen_counter, gen_real && !gen_complex, gen_n, gen_seed, gen_p,
                   gen_q, gen_epsilon);
  if (verify->parsed()) return run_verify(verify_poset, verify_audit, verify_n, verify_trials,
                                          verify_seed);
  if (hasse->parsed()) return run_hasse(hasse_n, hasse_perms);
  return kExitUsage;
}
