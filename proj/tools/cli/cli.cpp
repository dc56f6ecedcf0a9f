#include "cli.hpp"

#include <atomic>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "renvol/errors.hpp"
#include "renvol/exact_core.hpp"
#include "renvol/expansion.hpp"
#include "renvol/fit.hpp"
#include "renvol/localization.hpp"
#include "renvol/profile.hpp"
#include "renvol/series.hpp"
#include "renvol/term_report.hpp"

namespace renvol::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kSchema = "renvol-manifest/1";
constexpr long kPrecisionFloor = 64;

long default_precision() {
  if (const char* env = std::getenv("RENVOL_PRECISION_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 256;
}

std::size_t digits_for(long precision) {
  return static_cast<std::size_t>(static_cast<double>(precision) * 0.30103) + 1;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json j_pi(const PiValue& v) {
  return {{"coeff", v.coeff().str()}, {"pi_power", v.pi_power()}, {"display", v.str()}};
}

json j_dec(const BigFloat& x, long precision) {
  return {{"decimal", x.str(digits_for(precision))}, {"precision_bits", precision}};
}

struct CommonOpts {
  unsigned n = 0;
  std::string beta = "0";
  std::string volL = "1";
  long precision = default_precision();
  unsigned order = 3;
  std::string manifest_path;
  bool no_manifest = false;
};

void add_model_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "complex dimension of the base");
  cmd->add_option("--beta", o.beta, "Einstein constant as an exact rational p/q");
  cmd->add_option("--volL", o.volL, "polarization volume Vol(L) as an exact rational");
}

void add_run_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--precision", o.precision, "working precision in bits (floor 64)");
  cmd->add_option("--manifest", o.manifest_path, "run manifest path (JSON)");
  cmd->add_flag("--no-manifest", o.no_manifest, "skip writing the run manifest");
}

ModelParams to_params(const CommonOpts& o) {
  ModelParams p{o.n, Rational::from_string(o.beta), Rational::from_string(o.volL)};
  p.validate();
  return p;
}

void check_precision(long precision) {
  if (precision < kPrecisionFloor) {
    throw std::invalid_argument("precision below the floor of 64 bits");
  }
}

void write_manifest(const CommonOpts& o, const std::string& command, const json& parameters,
                    const json& results) {
  if (o.no_manifest) return;
  json m;
  m["schema"] = kSchema;
  m["tool"] = "renvol";
  m["version"] = kVersion;
  m["command"] = command;
  m["timestamp"] = iso_timestamp();
  m["precision_bits"] = o.precision;
  m["parameters"] = parameters;
  m["results"] = results;
  std::string path = o.manifest_path;
  if (path.empty()) {
    std::string stem = command;
    for (auto& ch : stem) {
      if (ch == '-') ch = '_';
    }
    path = "renvol_" + stem + "_manifest.json";
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open manifest path: " + path);
  out << m.dump(2) << '\n';
}

json model_parameters(const ModelParams& p, const CommonOpts& o) {
  return {{"n", p.n}, {"beta", p.beta.str()}, {"volL", p.volL.str()},
          {"series_order", o.order}};
}

void warn_if_no_metric(const ModelParams& p) {
  if (!p.ke_exists()) {
    std::cout << "note: beta >= 1, no complete Kahler-Einstein metric exists; "
                 "values are formal\n";
  }
}

// ---------------------------------------------------------------- formula

int cmd_formula(const CommonOpts& o) {
  const ModelParams p = to_params(o);
  warn_if_no_metric(p);
  const PiValue v = eval_renvol_formula(p);
  const BigFloat dec = v.to_bigfloat(o.precision);
  std::cout << "renormalized volume = " << v.str() << "\n";
  std::cout << "                    ~ " << dec.str(digits_for(o.precision)) << "\n";
  json results{{"renormalized_volume", j_pi(v)}, {"decimal", j_dec(dec, o.precision)}};
  write_manifest(o, "formula", model_parameters(p, o), results);
  return kExitOk;
}

int cmd_qprime(const CommonOpts& o) {
  const ModelParams p = to_params(o);
  const PiValue v = eval_total_qprime(p);
  const BigFloat dec = v.to_bigfloat(o.precision);
  std::cout << "total Q-prime curvature = " << v.str() << "\n";
  std::cout << "                        ~ " << dec.str(digits_for(o.precision)) << "\n";
  json results{{"total_qprime", j_pi(v)}, {"decimal", j_dec(dec, o.precision)}};
  write_manifest(o, "qprime", model_parameters(p, o), results);
  return kExitOk;
}

int cmd_chern(const CommonOpts& o, const std::string& chern_number) {
  const ModelParams p = to_params(o);
  json results;
  const Rational tube = eval_chern_integral_tube(p);
  std::cout << "tube Chern integral = " << tube.str() << "\n";
  results["tube_integral"] = tube.str();
  if (!chern_number.empty()) {
    const Rational nn = Rational::from_string(chern_number);
    const Rational gen = eval_chern_integral_general(p.n, p.beta, nn);
    std::cout << "general divisor integral (chern number " << nn.str() << ") = " << gen.str()
              << "\n";
    results["general_integral"] = gen.str();
    results["chern_number_N"] = nn.str();
  }
  json params = model_parameters(p, o);
  write_manifest(o, "chern", params, results);
  return kExitOk;
}

int cmd_decompose(const CommonOpts& o) {
  const ModelParams p = to_params(o);
  const PiValue total = eval_renvol_formula(p);
  const PiValue qp = eval_total_qprime(p);
  const Rational chern = eval_chern_integral_tube(p);
  const PiValue residual = check_decomposition(p);
  std::cout << "renormalized volume   = " << total.str() << "\n";
  std::cout << "total Q-prime         = " << qp.str() << "\n";
  std::cout << "tube Chern integral   = " << chern.str() << "\n";
  std::cout << "decomposition residual = " << residual.str() << "\n";
  json results{{"renormalized_volume", j_pi(total)},
               {"total_qprime", j_pi(qp)},
               {"tube_chern_integral", chern.str()},
               {"residual", j_pi(residual)}};
  write_manifest(o, "decompose", model_parameters(p, o), results);
  if (!residual.is_zero()) {
    throw invariant_violation("decomposition residual is nonzero: " + residual.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------- profile

int cmd_profile(const CommonOpts& o, unsigned samples) {
  const ModelParams p = to_params(o);
  const Profile prof = build_profile(p.n, p.beta);
  std::cout << "tau0 = " << prof.tau0.str() << "\n";
  std::cout << "capC = " << prof.capC.str() << "\n";
  const Rational v0 = profile_V(prof, prof.tau0);
  std::cout << "V(tau0) = " << v0.str() << "\n";
  json spots = json::array();
  for (const Rational& tau :
       {prof.tau0 + Rational{1}, prof.tau0 + Rational{1, 3}, Rational{10}}) {
    const Rational r = profile_ode_residual(prof, tau);
    spots.push_back({{"tau", tau.str()}, {"residual", r.str()}});
    std::cout << "ode residual at tau = " << tau.str() << ": " << r.str() << "\n";
  }
  const PositivityScan scan = positivity_scan(prof, samples);
  std::cout << "positivity scan (" << samples << " samples): "
            << (scan.positive ? "positive" : ("fails at tau = " + scan.witness->str())) << "\n";
  const auto tail = asymptotic_tail(prof, p.n + 4);
  json tail_json = json::array();
  std::cout << "gauge tail:";
  for (std::size_t k = 0; k < tail.size(); ++k) {
    std::cout << " a" << (k + 1) << " = " << tail[k].str();
    tail_json.push_back(tail[k].str());
  }
  std::cout << "\n";
  json results{{"tau0", prof.tau0.str()},
               {"capC", prof.capC.str()},
               {"V_at_tau0", v0.str()},
               {"ode_residuals", spots},
               {"positivity", scan.positive},
               {"gauge_tail", tail_json}};
  if (!scan.positive) results["positivity_witness"] = scan.witness->str();
  write_manifest(o, "profile", model_parameters(p, o), results);
  if (!scan.positive) {
    throw invariant_violation("profile positivity scan failed at tau = " + scan.witness->str());
  }
  return kExitOk;
}

int cmd_expand(const CommonOpts& o) {
  const ModelParams p = to_params(o);
  const Expansion e = expansion_exact(p, o.order);
  std::cout << "scale = " << e.scale.str() << "\n";
  std::cout << "Vol/scale =";
  json laurent;
  for (const auto& [exponent, coeff] : e.laurent) {
    std::cout << " (" << coeff.str() << ")*eps^" << exponent << " +";
    laurent[std::to_string(exponent)] = coeff.str();
  }
  std::cout << " (" << e.constant.str() << ")";
  json tail = json::array();
  for (std::size_t k = 0; k < e.positive_tail.size(); ++k) {
    std::cout << " + (" << e.positive_tail[k].str() << ")*eps^" << (k + 1);
    tail.push_back(e.positive_tail[k].str());
  }
  std::cout << " + O(eps^" << (e.positive_tail.size() + 1) << ")\n";
  const PiValue renvol = renormalized_volume_from_expansion(e);
  const BigFloat dec = renvol.to_bigfloat(o.precision);
  std::cout << "renormalized volume = " << renvol.str() << " ~ "
            << dec.str(digits_for(o.precision)) << "\n";
  json results{{"scale", j_pi(e.scale)},
               {"laurent", laurent},
               {"constant", e.constant.str()},
               {"positive_tail", tail},
               {"remainder_coeff", e.remainder_coeff.str()},
               {"renormalized_volume", j_pi(renvol)},
               {"decimal", j_dec(dec, o.precision)},
               {"volume_convention", "Vol = integral of omega^(n+1) without 1/(n+1)!"}};
  write_manifest(o, "expand", model_parameters(p, o), results);
  return kExitOk;
}

// ---------------------------------------------------------------- numeric

int cmd_renvol_fit(const CommonOpts& o, const std::string& eps_hi, const std::string& eps_lo,
                   unsigned points, bool with_log) {
  const ModelParams p = to_params(o);
  const Profile prof = build_profile(p.n, p.beta);
  const mpfr_prec_t prec = o.precision;
  const BigFloat hi = BigFloat::parse(eps_hi, prec);
  const BigFloat lo = BigFloat::parse(eps_lo, prec);
  if (!(lo.sign() > 0) || !(hi > lo)) {
    throw std::invalid_argument("need 0 < --eps-lo < --eps-hi");
  }
  if (points < p.n + 4) throw std::invalid_argument("need at least n + 4 grid points");

  std::vector<FitSample> samples;
  const BigFloat lhi = hi.log();
  const BigFloat llo = lo.log();
  for (unsigned i = 0; i < points; ++i) {
    const BigFloat f = BigFloat::of(static_cast<long>(i), prec) /
                       BigFloat::of(static_cast<long>(points) - 1, prec);
    const BigFloat eps = (lhi + (llo - lhi) * f).exp();
    samples.push_back({eps, vol_of_eps_numeric(p, prof, eps, prec)});
  }
  const FitResult fit = fit_expansion(samples, p.n, prec, with_log);

  const Expansion e = expansion_exact(p, o.order);
  const PiValue exact = renormalized_volume_from_expansion(e);
  const BigFloat exact_dec = exact.to_bigfloat(o.precision);
  const BigFloat fitted = fit.coefficient_of(0);
  const BigFloat err = (fitted - exact_dec).abs();

  std::cout << "fitted eps^0 coefficient  = " << fitted.str(digits_for(prec)) << "\n";
  std::cout << "exact renormalized volume = " << exact.str() << " ~ "
            << exact_dec.str(digits_for(prec)) << "\n";
  std::cout << "absolute difference       = " << err.str(6) << "\n";
  std::cout << "fit residual norm = " << fit.residual_norm.str(6)
            << ", condition estimate = " << fit.condition.str(6) << "\n";
  json coeffs;
  for (std::size_t i = 0; i < fit.exponents.size(); ++i) {
    coeffs[std::to_string(fit.exponents[i])] = j_dec(fit.coefficients[i], o.precision);
  }
  json results{{"fitted_coefficients", coeffs},
               {"residual_norm", j_dec(fit.residual_norm, o.precision)},
               {"condition_estimate", j_dec(fit.condition, o.precision)},
               {"exact_renormalized_volume", j_pi(exact)},
               {"absolute_difference", j_dec(err, o.precision)},
               {"grid", {{"eps_hi", eps_hi}, {"eps_lo", eps_lo}, {"points", points}}}};
  if (fit.log_coefficient) {
    std::cout << "log eps coefficient = " << fit.log_coefficient->str(6) << "\n";
    results["log_coefficient"] = j_dec(*fit.log_coefficient, o.precision);
  }
  write_manifest(o, "renvol-fit", model_parameters(p, o), results);
  return kExitOk;
}

std::vector<Cutoff> parse_windows(const std::string& spec) {
  std::vector<Cutoff> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto c1 = item.find(':');
    const auto c2 = item.rfind(':');
    if (c1 == std::string::npos || c2 == c1) {
      throw std::invalid_argument("window must be t1:t2:degree, got \"" + item + "\"");
    }
    const Rational t1 = Rational::from_string(item.substr(0, c1));
    const Rational t2 = Rational::from_string(item.substr(c1 + 1, c2 - c1 - 1));
    const unsigned long degree = std::stoul(item.substr(c2 + 1));
    out.push_back(build_cutoff(t1, t2, static_cast<unsigned>(degree)));
  }
  if (out.empty()) throw std::invalid_argument("no cutoff windows given");
  return out;
}

int cmd_localize(const CommonOpts& o, const std::string& windows) {
  const ModelParams p = to_params(o);
  const std::vector<Cutoff> cutoffs = parse_windows(windows);
  const Rational exact = eval_chern_integral_tube(p);
  const AlphaRecord alpha = make_alpha_record(p.beta);
  std::cout << "2*pi*alpha = " << alpha.two_pi_alpha.str()
            << ", canonical factor = " << alpha.canonical_factor.str() << "\n";
  std::cout << "exact tube Chern integral = " << exact.str() << "\n";
  json values = json::array();
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    const BigFloat v = localized_integral(p, cutoffs[i], o.precision);
    std::cout << "cutoff " << (i + 1) << " [" << cutoffs[i].t1.str() << ", "
              << cutoffs[i].t2.str() << "] degree " << cutoffs[i].degree << ": "
              << v.str(digits_for(o.precision)) << "\n";
    values.push_back({{"t1", cutoffs[i].t1.str()},
                      {"t2", cutoffs[i].t2.str()},
                      {"degree", cutoffs[i].degree},
                      {"value", j_dec(v, o.precision)}});
  }
  json results{{"alpha_two_pi", alpha.two_pi_alpha.str()},
               {"canonical_factor", alpha.canonical_factor.str()},
               {"exact_tube_integral", exact.str()},
               {"cutoff_values", values}};
  if (cutoffs.size() >= 2) {
    const IndependenceReport rep = cutoff_independence(p, cutoffs, o.precision);
    std::cout << "max pairwise deviation = " << rep.max_deviation.str(6)
              << " (tolerance " << rep.tolerance.str(6) << ")\n";
    results["max_deviation"] = j_dec(rep.max_deviation, o.precision);
    results["deviation_tolerance"] = j_dec(rep.tolerance, o.precision);
    results["within_tolerance"] = rep.within;
    write_manifest(o, "localize", model_parameters(p, o), results);
    if (!rep.within) {
      throw invariant_violation("cutoff independence violated: deviation " +
                                rep.max_deviation.str(6));
    }
  } else {
    write_manifest(o, "localize", model_parameters(p, o), results);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- audit

struct AuditTally {
  json suites = json::array();
  int failures = 0;

  void record(const std::string& name, bool pass, const std::string& detail) {
    std::cout << "AUDIT " << name << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    suites.push_back({{"suite", name}, {"pass", pass}, {"detail", detail}});
    if (!pass) ++failures;
  }

  void info(const std::string& name, const std::string& detail) {
    std::cout << "AUDIT " << name << ": RATIO " << detail << "\n";
    suites.push_back({{"suite", name}, {"ratio", detail}});
  }
};

std::vector<Rational> audit_betas() {
  return {Rational{-3}, Rational{-1}, Rational{-1, 2}, Rational{0},
          Rational{1, 3}, Rational{1, 2}, Rational{9, 10}};
}

void audit_decomposition(AuditTally& t, unsigned nmax) {
  bool ok = true;
  std::string detail;
  for (unsigned n = 0; n <= nmax && ok; ++n) {
    for (const auto& beta : audit_betas()) {
      for (long volL : {1L, 2L, 7L}) {
        const PiValue r = check_decomposition({n, beta, Rational{volL}});
        if (!r.is_zero()) {
          ok = false;
          detail = "residual " + r.str() + " at n=" + std::to_string(n) + " beta=" + beta.str();
          break;
        }
      }
      if (!ok) break;
    }
  }
  t.record("decomposition-identity", ok, detail);
}

void audit_reversion(AuditTally& t, unsigned nmax) {
  bool ok = true;
  std::string detail;
  for (unsigned n = 0; n <= nmax && ok; ++n) {
    for (const auto& beta : audit_betas()) {
      const Profile prof = build_profile(n, beta);
      const auto tail = asymptotic_tail(prof, n + 4);
      const Rational via_reversion = constant_term_reversion(tail, n + 1);
      const Rational via_residue = constant_term_residue(tail[n], n + 1);
      const Rational expected =
          (-(beta / Rational{static_cast<long>(n) + 1})).pow(static_cast<long>(n) + 1);
      if (!(via_reversion == via_residue) || !(via_reversion == expected)) {
        ok = false;
        detail = "mismatch at n=" + std::to_string(n) + " beta=" + beta.str();
        break;
      }
    }
  }
  t.record("reversion-vs-residue", ok, detail);
}

void audit_capc_independence(AuditTally& t) {
  bool ok = true;
  std::string detail;
  for (unsigned n : {1u, 2u, 3u}) {
    const Profile prof = build_profile(n, Rational{1, 2});
    auto tail = asymptotic_tail(prof, n + 4);
    const Rational before = constant_term_reversion(tail, n + 1);
    tail[n + 1] += Rational{5, 7};  // a_{n+2}: first slot capC reaches
    const Rational after = constant_term_reversion(tail, n + 1);
    if (!(before == after)) {
      ok = false;
      detail = "eps^0 shifted at n=" + std::to_string(n);
      break;
    }
  }
  t.record("capC-independence", ok, detail);
}

void audit_n0_closed_form(AuditTally& t) {
  bool ok = true;
  std::string detail;
  for (const auto& beta : {Rational{0}, Rational{1, 2}, Rational{-1}}) {
    const ModelParams p{0, beta, Rational{1}};
    const Expansion e = expansion_exact(p, 2);
    const Rational expected = -beta - (Rational{1} - beta) / Rational{2};
    const PiValue v = renormalized_volume_from_expansion(e);
    const PiValue formula = eval_renvol_formula(p);
    const TermReport rep = compare_conventions(p);
    const bool ratios_one = rep.cap_ratio == Rational{1} &&
                            (!rep.boundary_ratio || *rep.boundary_ratio == Rational{1});
    if (!(e.constant == expected) || !(v == formula) || !ratios_one) {
      ok = false;
      detail = "beta=" + beta.str();
      break;
    }
  }
  t.record("n0-closed-form", ok, detail);
}

void audit_numeric_vs_exact(AuditTally& t, long precision) {
  bool ok = true;
  std::string detail;
  const BigFloat tol = BigFloat::parse("1e-6", precision);
  for (unsigned n : {0u, 1u, 2u}) {
    for (const auto& beta : {Rational{0}, Rational{1, 2}, Rational{-1}}) {
      const ModelParams p{n, beta, Rational{1}};
      const Profile prof = build_profile(n, beta);
      std::vector<FitSample> samples;
      for (const auto& eps : default_eps_grid(precision)) {
        samples.push_back({eps, vol_of_eps_numeric(p, prof, eps, precision)});
      }
      const FitResult fit = fit_expansion(samples, n, precision);
      const BigFloat exact =
          renormalized_volume_from_expansion(expansion_exact(p, 3)).to_bigfloat(precision);
      BigFloat scale = exact.abs();
      if (!(scale > BigFloat::of(1, precision))) scale = BigFloat::of(1, precision);
      if (!((fit.coefficient_of(0) - exact).abs() <= tol * scale)) {
        ok = false;
        detail = "n=" + std::to_string(n) + " beta=" + beta.str();
        break;
      }
    }
    if (!ok) break;
  }
  t.record("numeric-vs-exact", ok, detail);
}

void audit_cutoffs(AuditTally& t, long precision) {
  const ModelParams p{1, Rational{1, 2}, Rational{1}};
  const std::vector<Cutoff> cutoffs = {build_cutoff(Rational{-2}, Rational{-1}, 3),
                                       build_cutoff(Rational{-3}, Rational{-3, 2}, 4),
                                       build_cutoff(Rational{-5, 2}, Rational{-2}, 5)};
  const IndependenceReport rep = cutoff_independence(p, cutoffs, precision);
  const BigFloat exact = BigFloat::of(eval_chern_integral_tube(p), precision);
  bool ok = rep.within;
  for (const auto& v : rep.values) {
    if (!((v - exact).abs() <= BigFloat::parse("1e-8", precision) * exact.abs())) ok = false;
  }
  t.record("cutoff-independence", ok,
           ok ? "" : ("max deviation " + rep.max_deviation.str(6)));
}

void audit_term_ratios(AuditTally& t, unsigned nmax) {
  bool ok = true;
  std::string detail;
  for (unsigned n = 0; n <= nmax; ++n) {
    std::optional<Rational> boundary;
    for (const auto& beta : {Rational{-2}, Rational{-1, 2}, Rational{1, 3}}) {
      for (long volL : {1L, 7L}) {
        const TermReport rep = compare_conventions({n, beta, Rational{volL}});
        if (!(rep.cap_ratio == Rational{1})) {
          ok = false;
          detail = "cap ratio " + rep.cap_ratio.str() + " at n=" + std::to_string(n);
        }
        if (rep.boundary_ratio) {
          if (boundary && !(*boundary == *rep.boundary_ratio)) {
            ok = false;
            detail = "boundary ratio varies with beta/volL at n=" + std::to_string(n);
          }
          boundary = rep.boundary_ratio;
        }
      }
    }
    if (boundary) {
      t.info("term-ratio-n" + std::to_string(n),
             "boundary term computed/printed = " + boundary->str());
    }
  }
  t.record("term-ratio-structure", ok, detail);
}

int cmd_audit(const CommonOpts& o, unsigned nmax) {
  AuditTally t;
  audit_decomposition(t, nmax);
  audit_reversion(t, nmax);
  audit_capc_independence(t);
  audit_n0_closed_form(t);
  audit_numeric_vs_exact(t, o.precision);
  audit_cutoffs(t, o.precision);
  audit_term_ratios(t, nmax);
  json results{{"suites", t.suites}, {"failures", t.failures}};
  json params{{"nmax", nmax}};
  write_manifest(o, "audit", params, results);
  if (t.failures > 0) {
    throw invariant_violation(std::to_string(t.failures) + " audit suite(s) failed");
  }
  std::cout << "all audit suites passed\n";
  return kExitOk;
}

// ---------------------------------------------------------------- grid

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto from = item.find_first_not_of(" \t");
    const auto to = item.find_last_not_of(" \t");
    if (from == std::string::npos) continue;
    out.push_back(Rational::from_string(item.substr(from, to - from + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty rational list: \"" + csv + "\"");
  return out;
}

int cmd_grid(const CommonOpts& o, unsigned nmax, const std::string& betas_csv,
             const std::string& volls_csv, const std::string& csv_path, unsigned threads) {
  const std::vector<Rational> betas = parse_rational_list(betas_csv);
  const std::vector<Rational> volls = parse_rational_list(volls_csv);
  struct Point {
    ModelParams p;
  };
  std::vector<Point> points;
  for (unsigned n = 0; n <= nmax; ++n) {
    for (const auto& beta : betas) {
      for (const auto& volL : volls) {
        points.push_back({{n, beta, volL}});
      }
    }
  }
  std::vector<std::string> rows(points.size());
  std::atomic<std::size_t> next{0};
  const long precision = o.precision;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      const ModelParams& p = points[i].p;
      const PiValue v = eval_renvol_formula(p);
      const TermReport rep = compare_conventions(p);
      std::string ratios = "cap=" + rep.cap_ratio.str() + ";boundary=" +
                           (rep.boundary_ratio ? rep.boundary_ratio->str() : "none");
      std::ostringstream row;
      row << p.n << ", " << p.beta.str() << ", " << p.volL.str() << ", " << v.coeff().str()
          << ", " << v.pi_power() << ", " << v.to_bigfloat(precision).str(digits_for(precision))
          << ", " << ratios;
      rows[i] = row.str();
    }
  };
  if (threads == 0) threads = 1;
  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ofstream csv(csv_path);
  if (!csv) throw std::invalid_argument("cannot open CSV path: " + csv_path);
  csv << "n, beta, volL, V_exact_coeff, V_exact_pipow, V_decimal, ratios\n";
  for (const auto& row : rows) csv << row << "\n";
  std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
  json results{{"rows", rows.size()}, {"csv", csv_path}};
  json params{{"nmax", nmax}, {"betas", betas_csv}, {"volLs", volls_csv}, {"threads", threads}};
  write_manifest(o, "grid", params, results);
  return kExitOk;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
  CLI::App app{"renormalized-volume laboratory for tube domains"};
  app.require_subcommand(1);
  CommonOpts o;

  auto* formula = app.add_subcommand("formula", "closed-formula renormalized volume");
  add_model_flags(formula, o);
  add_run_flags(formula, o);

  auto* qprime = app.add_subcommand("qprime", "total Q-prime curvature of the boundary");
  add_model_flags(qprime, o);
  add_run_flags(qprime, o);

  std::string chern_number;
  auto* chern = app.add_subcommand("chern", "localized Chern-number integral (exact)");
  add_model_flags(chern, o);
  add_run_flags(chern, o);
  chern->add_option("--chern-number", chern_number,
                    "normal-bundle Chern number for a general divisor");

  auto* decompose = app.add_subcommand("decompose", "Q-prime + Chern decomposition residual");
  add_model_flags(decompose, o);
  add_run_flags(decompose, o);

  unsigned samples = 200;
  auto* profile = app.add_subcommand("profile", "momentum profile data and checks");
  add_model_flags(profile, o);
  add_run_flags(profile, o);
  profile->add_option("--samples", samples, "positivity scan sample count");

  auto* expand = app.add_subcommand("expand", "exact eps-expansion of the tube volume");
  add_model_flags(expand, o);
  add_run_flags(expand, o);
  expand->add_option("--order", o.order, "positive eps-powers to keep");

  std::string eps_hi = "1e-2";
  std::string eps_lo = "1e-7";
  unsigned points = 12;
  bool with_log = false;
  auto* fit = app.add_subcommand("renvol-fit", "numeric pipeline: level sets + least squares");
  add_model_flags(fit, o);
  add_run_flags(fit, o);
  fit->add_option("--order", o.order, "series order for the exact comparison");
  fit->add_option("--eps-hi", eps_hi, "largest eps in the sampling grid");
  fit->add_option("--eps-lo", eps_lo, "smallest eps in the sampling grid");
  fit->add_option("--points", points, "number of grid points");
  fit->add_flag("--with-log", with_log, "add a log(eps) basis column");

  std::string windows = "-2:-1:3,-3:-3/2:4,-5/2:-2:5";
  auto* localize = app.add_subcommand("localize", "cutoff-localized Chern integral (numeric)");
  add_model_flags(localize, o);
  add_run_flags(localize, o);
  localize->add_option("--windows", windows, "cutoff windows t1:t2:degree, comma separated");

  unsigned nmax_audit = 6;
  auto* audit = app.add_subcommand("audit", "full cross-check suite");
  add_run_flags(audit, o);
  audit->add_option("--nmax", nmax_audit, "largest base dimension to audit");

  unsigned nmax_grid = 3;
  std::string betas_csv = "-1,-1/2,0,1/3,1/2";
  std::string volls_csv = "1";
  std::string csv_path = "renvol_grid.csv";
  unsigned threads = std::thread::hardware_concurrency();
  auto* grid = app.add_subcommand("grid", "sweep an (n, beta, volL) lattice to CSV");
  add_run_flags(grid, o);
  grid->add_option("--nmax", nmax_grid, "largest base dimension");
  grid->add_option("--betas", betas_csv, "comma-separated exact rationals");
  grid->add_option("--volLs", volls_csv, "comma-separated exact rationals");
  grid->add_option("--csv", csv_path, "output CSV path");
  grid->add_option("--threads", threads, "worker thread count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    check_precision(o.precision);
    if (formula->parsed()) return cmd_formula(o);
    if (qprime->parsed()) return cmd_qprime(o);
    if (chern->parsed()) return cmd_chern(o, chern_number);
    if (decompose->parsed()) return cmd_decompose(o);
    if (profile->parsed()) return cmd_profile(o, samples);
    if (expand->parsed()) return cmd_expand(o);
    if (fit->parsed()) return cmd_renvol_fit(o, eps_hi, eps_lo, points, with_log);
    if (localize->parsed()) return cmd_localize(o, windows);
    if (audit->parsed()) return cmd_audit(o, nmax_audit);
    if (grid->parsed()) return cmd_grid(o, nmax_grid, betas_csv, volls_csv, csv_path, threads);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const no_complete_metric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace renvol::cli
