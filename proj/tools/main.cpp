// Command-line front end: exact closed forms, asymptotic estimates,
// brute-force verification, composition tallies, and convergence sweeps.
//
// Exit codes: 0 success, 2 usage or validation error, 3 enumeration above
// the brute-force cap, 4 I/O failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "khintchine/asymptotics.hpp"
#include "khintchine/formulas.hpp"
#include "khintchine/log_value.hpp"
#include "khintchine/oracle.hpp"
#include "khintchine/parameters.hpp"
#include "khintchine/version.hpp"

using nlohmann::ordered_json;
using namespace khintchine;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

Format parse_format(const std::string& s) {
  return s == "csv" ? Format::csv : Format::json;
}

// Exact counterparts in the asymptotic subcommand are skipped above this n:
// the closed form needs 2^n as an integer, which stops being cheap.
constexpr long kMaxExactN = 1'000'000;

std::string dbl_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// 12 significant digits; falls back to hand-built scientific notation when
// the value is outside double range.
std::string decimal12_log(const LogValue& lv) {
  if (lv.sign == 0) return "0";
  if (std::fabs(lv.ln_magnitude) < 600.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", lv.sign * std::exp(lv.ln_magnitude));
    return buf;
  }
  const double ln10 = lv.ln_magnitude / 2.3025850929940456840;
  const double e = std::floor(ln10);
  const double mant = std::pow(10.0, ln10 - e);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", mant);
  std::string s(buf);
  const auto pos = s.find('e');
  const long long total = static_cast<long long>(e) + std::stoll(s.substr(pos + 1));
  std::string out = lv.sign < 0 ? "-" : "";
  out += s.substr(0, pos);
  out += "e";
  if (total >= 0) out += "+";
  out += std::to_string(total);
  return out;
}

std::string decimal12(const ExactRational& v) { return decimal12_log(exact_to_log(v)); }

ordered_json log_json(const LogValue& v) {
  return ordered_json{{"sign", v.sign}, {"ln_magnitude", v.ln_magnitude}};
}

void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

// ---- exact ---------------------------------------------------------------

void run_exact(long n, long m, long p, Format fmt, std::ostream& os) {
  const Parameters params(n, m, p);
  struct Row {
    const char* kind;
    std::optional<ExactRational> exact;
    LogValue lv;
  };
  const ExactRational c2p = best_constant_2p_power(params);
  const ExactRational pd = p_dif(params);
  const ExactRational ep = expectation_product(params);
  const ExactRational ps = prob_sum_equals(n, m);
  std::vector<Row> rows;
  rows.push_back({"best_constant_2p_power", c2p, exact_to_log(c2p)});
  rows.push_back({"best_constant", std::nullopt, best_constant(params)});
  rows.push_back({"p_dif", pd, exact_to_log(pd)});
  rows.push_back({"expectation_product", ep, exact_to_log(ep)});
  rows.push_back({"prob_sum_equals", ps, exact_to_log(ps)});

  if (fmt == Format::json) {
    for (const auto& r : rows) {
      ordered_json j{{"kind", r.kind},
                     {"version", kVersion},
                     {"n", n},
                     {"m", m},
                     {"p", p}};
      if (r.exact) j["exact"] = to_string(*r.exact);
      j["decimal"] = r.exact ? decimal12(*r.exact) : decimal12_log(r.lv);
      j["log_value"] = log_json(r.lv);
      os << j.dump() << '\n';
    }
  } else {
    csv_row(os, {"kind", "version", "n", "m", "p", "exact", "decimal", "ln_sign",
                 "ln_magnitude"});
    for (const auto& r : rows)
      csv_row(os, {r.kind, kVersion, std::to_string(n), std::to_string(m),
                   std::to_string(p), r.exact ? to_string(*r.exact) : "",
                   r.exact ? decimal12(*r.exact) : decimal12_log(r.lv),
                   std::to_string(r.lv.sign), dbl_str(r.lv.ln_magnitude)});
  }
}

// ---- asymptotic ----------------------------------------------------------

void run_asymptotic(const std::string& regime, bool has_n, long n, bool has_nn,
                    long little_n, bool has_m, long m, bool has_alpha, double alpha,
                    bool has_beta, double beta, long p, Format fmt, std::ostream& os) {
  auto need = [&](bool has, const char* flag) {
    if (!has)
      throw std::invalid_argument(std::string("asymptotic: ") + flag +
                                  " is required for regime " + regime);
  };

  AsymptoticEstimate est;
  bool have_exact = false;
  long snap_n = 0;
  long snap_m = 0;
  LogValue exact_lv;
  LogValue asym_at_snap;

  if (regime == "balanced_upper") {
    need(has_n, "--n");
    est = balanced_upper_bound(n, p);
    snap_n = n;
    snap_m = 0;
    if (n <= kMaxExactN) {
      exact_lv = exact_to_log(balanced_closed_form(n, p));
      asym_at_snap = est.value;
      have_exact = true;
    }
  } else if (regime == "fixed_m") {
    need(has_n, "--n");
    need(has_m, "--m");
    est = fixed_m_asymptotic(n, m, p);
    snap_n = snap_to_parity(static_cast<double>(n), static_cast<int>(m % 2));
    snap_m = m;
    if (snap_n > m && snap_n <= kMaxExactN) {
      exact_lv = exact_to_log(best_constant_2p_power(Parameters(snap_n, m, p)));
      asym_at_snap = snap_n == n ? est.value : fixed_m_asymptotic(snap_n, m, p).value;
      have_exact = true;
    }
  } else if (regime == "unit_m") {
    need(has_n, "--n");
    est = unit_m_asymptotic(n, p);
    snap_n = snap_to_parity(static_cast<double>(n), 1);
    snap_m = 1;
    if (snap_n <= kMaxExactN) {
      exact_lv = exact_to_log(best_constant_2p_power(Parameters(snap_n, 1, p)));
      asym_at_snap = snap_n == n ? est.value : unit_m_asymptotic(snap_n, p).value;
      have_exact = true;
    }
  } else if (regime == "proportional_alpha" || regime == "proportional_alpha_upper") {
    need(has_nn, "--little-n");
    need(has_alpha, "--alpha");
    const bool upper = regime == "proportional_alpha_upper";
    est = upper ? alpha_upper_bound(little_n, alpha, p)
                : alpha_asymptotic(little_n, alpha, p);
    snap_n = std::llround((alpha + 1.0) * static_cast<double>(little_n));
    snap_m = snap_to_parity((alpha - 1.0) * static_cast<double>(little_n),
                            static_cast<int>(snap_n % 2));
    if (snap_m >= 1 && snap_m < snap_n && snap_n <= kMaxExactN) {
      const long n_eff = (snap_n - snap_m) / 2;
      const double a_eff =
          static_cast<double>(snap_n + snap_m) / static_cast<double>(snap_n - snap_m);
      exact_lv = exact_to_log(best_constant_2p_power(Parameters(snap_n, snap_m, p)));
      asym_at_snap = (upper ? alpha_upper_bound(n_eff, a_eff, p)
                            : alpha_asymptotic(n_eff, a_eff, p))
                         .value;
      have_exact = true;
    }
  } else if (regime == "proportional_beta") {
    need(has_n, "--n");
    need(has_beta, "--beta");
    est = beta_asymptotic(n, beta, p);
    snap_n = n;
    snap_m = snap_to_parity(beta * static_cast<double>(n), static_cast<int>(n % 2));
    if (snap_m >= 1 && snap_m < n && n <= kMaxExactN) {
      exact_lv = exact_to_log(best_constant_2p_power(Parameters(n, snap_m, p)));
      asym_at_snap =
          beta_asymptotic(n, static_cast<double>(snap_m) / static_cast<double>(n), p)
              .value;
      have_exact = true;
    }
  } else {
    throw std::invalid_argument("asymptotic: unknown regime '" + regime + "'");
  }

  const double ratio =
      have_exact ? std::exp(exact_lv.ln_magnitude - asym_at_snap.ln_magnitude) : 0.0;

  if (fmt == Format::json) {
    ordered_json inputs;
    if (has_n) inputs["n"] = n;
    if (has_nn) inputs["little_n"] = little_n;
    if (has_m) inputs["m"] = m;
    if (has_alpha) inputs["alpha"] = alpha;
    if (has_beta) inputs["beta"] = beta;
    inputs["p"] = p;
    ordered_json j{{"kind", "asymptotic"},
                   {"version", kVersion},
                   {"regime", regime},
                   {"inputs", inputs},
                   {"value", log_json(est.value)}};
    if (est.finite_bound) j["finite_bound"] = log_json(*est.finite_bound);
    if (have_exact) {
      j["snapped"] = ordered_json{{"n", snap_n}, {"m", snap_m}};
      j["value_at_snapped"] = log_json(asym_at_snap);
      j["exact"] = log_json(exact_lv);
      j["exact_decimal"] = decimal12_log(exact_lv);
      j["ratio"] = ratio;
    }
    os << j.dump() << '\n';
  } else {
    csv_row(os, {"regime", "version", "n", "little_n", "m", "alpha", "beta", "p",
                 "value_ln", "finite_bound_ln", "snapped_n", "snapped_m", "exact_ln",
                 "exact_decimal", "ratio"});
    csv_row(os, {regime, kVersion, has_n ? std::to_string(n) : "",
                 has_nn ? std::to_string(little_n) : "", has_m ? std::to_string(m) : "",
                 has_alpha ? dbl_str(alpha) : "", has_beta ? dbl_str(beta) : "",
                 std::to_string(p), dbl_str(est.value.ln_magnitude),
                 est.finite_bound ? dbl_str(est.finite_bound->ln_magnitude) : "",
                 have_exact ? std::to_string(snap_n) : "",
                 have_exact ? std::to_string(snap_m) : "",
                 have_exact ? dbl_str(exact_lv.ln_magnitude) : "",
                 have_exact ? decimal12_log(exact_lv) : "",
                 have_exact ? dbl_str(ratio) : ""});
  }
}

// ---- verify --------------------------------------------------------------

void run_verify(long n, long m, long p, unsigned trials, std::uint64_t seed, Format fmt,
                std::ostream& os) {
  const Parameters params(n, m, p);
  const oracle::ProbeReport report =
      oracle::inequality_probe(params, oracle::ProbeStrategy{trials, seed});
  const std::string argmax_label = report.records.empty()
                                       ? ""
                                       : report.records[report.argmax].label;

  if (fmt == Format::json) {
    for (const auto& rec : report.records) {
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : rec.coefficients) coeffs.push_back(to_string(c));
      ordered_json j{{"kind", "probe"},   {"version", kVersion},
                     {"n", n},            {"m", m},
                     {"p", p},            {"seed", seed},
                     {"label", rec.label}};
      j["coefficients"] = coeffs;
      j["moment"] = to_string(rec.moment);
      j["moment_decimal"] = decimal12(rec.moment);
      j["bound"] = to_string(rec.bound);
      j["bound_decimal"] = decimal12(rec.bound);
      j["ratio"] = to_string(rec.ratio);
      j["ratio_decimal"] = decimal12(rec.ratio);
      j["violation"] = rec.ratio > 1;
      os << j.dump() << '\n';
    }
    ordered_json j{{"kind", "probe_summary"},
                   {"version", kVersion},
                   {"n", n},
                   {"m", m},
                   {"p", p},
                   {"seed", seed},
                   {"trials", trials},
                   {"vectors", report.records.size()},
                   {"max_ratio", to_string(report.max_ratio)},
                   {"max_ratio_decimal", decimal12(report.max_ratio)},
                   {"argmax_label", argmax_label},
                   {"violation_count", report.violation_count}};
    os << j.dump() << '\n';
  } else {
    csv_row(os, {"kind", "version", "n", "m", "p", "seed", "trials", "label",
                 "coefficients", "moment", "moment_decimal", "bound", "bound_decimal",
                 "ratio", "ratio_decimal", "violation", "max_ratio",
                 "max_ratio_decimal", "argmax_label", "violation_count"});
    const std::string ns = std::to_string(n);
    const std::string ms = std::to_string(m);
    const std::string ps = std::to_string(p);
    const std::string ss = std::to_string(seed);
    const std::string ts = std::to_string(trials);
    for (const auto& rec : report.records) {
      std::string coeffs;
      for (std::size_t i = 0; i < rec.coefficients.size(); ++i) {
        if (i) coeffs += ' ';
        coeffs += to_string(rec.coefficients[i]);
      }
      csv_row(os, {"probe", kVersion, ns, ms, ps, ss, ts, rec.label, coeffs,
                   to_string(rec.moment), decimal12(rec.moment), to_string(rec.bound),
                   decimal12(rec.bound), to_string(rec.ratio), decimal12(rec.ratio),
                   rec.ratio > 1 ? "true" : "false", "", "", "", ""});
    }
    csv_row(os, {"probe_summary", kVersion, ns, ms, ps, ss, ts, "", "", "", "", "", "",
                 "", "", "", to_string(report.max_ratio), decimal12(report.max_ratio),
                 argmax_label, std::to_string(report.violation_count)});
  }
}

// ---- tally ---------------------------------------------------------------

void run_tally(long n, long m, long p, Format fmt, std::ostream& os) {
  const Parameters params(n, m, p);
  const oracle::CompositionTally tally = oracle::tally_compositions(params);
  const BigCount closed = t_e_minus_t_o(params);
  const BigCount brute = tally.t_even - tally.t_odd;
  const bool match = brute == closed;

  if (fmt == Format::json) {
    ordered_json j{{"kind", "tally"},
                   {"version", kVersion},
                   {"n", n},
                   {"m", m},
                   {"p", p},
                   {"t_even", tally.t_even.get_str()},
                   {"t_odd", tally.t_odd.get_str()},
                   {"total", tally.total.get_str()},
                   {"difference", brute.get_str()},
                   {"closed_form", closed.get_str()},
                   {"match", match}};
    os << j.dump() << '\n';
  } else {
    csv_row(os, {"kind", "version", "n", "m", "p", "t_even", "t_odd", "total",
                 "difference", "closed_form", "match"});
    csv_row(os, {"tally", kVersion, std::to_string(n), std::to_string(m),
                 std::to_string(p), tally.t_even.get_str(), tally.t_odd.get_str(),
                 tally.total.get_str(), brute.get_str(), closed.get_str(),
                 match ? "true" : "false"});
  }
}

// ---- sweep ---------------------------------------------------------------

struct GridSpec {
  std::string var;
  std::vector<double> values;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  std::string body = text;
  if (const auto eq = body.find('='); eq != std::string::npos) {
    g.var = body.substr(0, eq);
    body = body.substr(eq + 1);
    if (g.var.empty())
      throw std::invalid_argument("grid: empty variable name in '" + text + "'");
  } else {
    g.var = "n";
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = body.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(body.substr(start));
      break;
    }
    parts.push_back(body.substr(start, colon - start));
    start = colon + 1;
  }
  auto to_num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (...) {
      throw std::invalid_argument("grid: bad number '" + s + "' in '" + text + "'");
    }
  };
  if (parts.size() == 1) {
    g.values.push_back(to_num(parts[0]));
    return g;
  }
  if (parts.size() != 3)
    throw std::invalid_argument("grid: expected var=start:stop:step, got '" + text + "'");
  const double lo = to_num(parts[0]);
  const double hi = to_num(parts[1]);
  const std::string& step = parts[2];
  if (step.size() < 2 || (step[0] != 'x' && step[0] != '+'))
    throw std::invalid_argument("grid: step must look like x10 or +250, got '" + step +
                                "'");
  const double amount = to_num(step.substr(1));
  if (!(lo > 0) || hi < lo)
    throw std::invalid_argument("grid: need 0 < start <= stop in '" + text + "'");
  const bool geometric = step[0] == 'x';
  if (geometric && !(amount > 1))
    throw std::invalid_argument("grid: multiplicative step must be > 1");
  if (!geometric && !(amount > 0))
    throw std::invalid_argument("grid: additive step must be > 0");
  for (double v = lo; v <= hi * (1.0 + 1e-12); v = geometric ? v * amount : v + amount) {
    g.values.push_back(v);
    if (g.values.size() > 100000)
      throw std::invalid_argument("grid: more than 100000 points");
  }
  return g;
}

void run_sweep(const std::string& regime, const std::string& grid_text, long m,
               double alpha, double beta, long p, unsigned jobs, const std::string& out,
               Format fmt) {
  SweepSpec spec;
  if (regime == "balanced")
    spec.regime = SweepRegime::balanced;
  else if (regime == "fixed_m")
    spec.regime = SweepRegime::fixed_m;
  else if (regime == "unit_m")
    spec.regime = SweepRegime::unit_m;
  else if (regime == "alpha")
    spec.regime = SweepRegime::alpha;
  else if (regime == "beta")
    spec.regime = SweepRegime::beta;
  else if (regime == "full_sum")
    spec.regime = SweepRegime::full_sum;
  else
    throw std::invalid_argument("sweep: unknown regime '" + regime + "'");
  spec.fixed_m = m;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.p = p;

  const GridSpec grid = parse_grid(grid_text);
  const std::vector<ConvergencePoint> rows = convergence_report(spec, grid.values, jobs);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) throw IoError("sweep: cannot open output file '" + out + "'");
    os = &file;
  }

  if (fmt == Format::json) {
    for (const auto& r : rows) {
      ordered_json j{{"kind", "sweep_point"}, {"version", kVersion},
                     {"regime", regime},      {"var", grid.var},
                     {"grid_value", r.grid_value}, {"p", r.p},
                     {"snapped_n", r.n},      {"snapped_m", r.m},
                     {"skipped", r.skipped}};
      if (r.skipped) {
        j["skip_reason"] = r.skip_reason;
      } else {
        j["exact_ln"] = r.exact.ln_magnitude;
        j["asymptotic_ln"] = r.asymptotic.ln_magnitude;
        j["ratio"] = r.ratio;
        j["abs_err"] = std::fabs(r.ratio - 1.0);
        j["improving"] = r.improving;
      }
      *os << j.dump() << '\n';
    }
  } else {
    csv_row(*os, {"regime", "version", "var", "grid_value", "p", "snapped_n",
                  "snapped_m", "skipped", "skip_reason", "exact_ln", "asymptotic_ln",
                  "ratio", "abs_err", "improving"});
    for (const auto& r : rows) {
      if (r.skipped) {
        csv_row(*os, {regime, kVersion, grid.var, dbl_str(r.grid_value),
                      std::to_string(r.p), std::to_string(r.n), std::to_string(r.m),
                      "true", r.skip_reason, "", "", "", "", ""});
      } else {
        csv_row(*os, {regime, kVersion, grid.var, dbl_str(r.grid_value),
                      std::to_string(r.p), std::to_string(r.n), std::to_string(r.m),
                      "false", "", dbl_str(r.exact.ln_magnitude),
                      dbl_str(r.asymptotic.ln_magnitude), dbl_str(r.ratio),
                      dbl_str(std::fabs(r.ratio - 1.0)),
                      r.improving ? "true" : "false"});
      }
    }
  }

  if (file.is_open()) {
    file.flush();
    if (!file) throw IoError("sweep: write failed for '" + out + "'");
    std::cerr << "sweep: " << rows.size() << " rows -> " << out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Best constants in the Khintchine inequality for sign vectors conditioned on "
      "their sum: exact closed forms, asymptotic regimes, and brute-force checks."};
  app.set_version_flag("--version", std::string("khintchine ") + kVersion);
  app.require_subcommand(1);

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "closed-form values at one (n, m, p)");
  long ex_n = 0, ex_m = 0, ex_p = 1;
  std::string ex_format = "json";
  exact_cmd->add_option("--n", ex_n, "number of signs")->required();
  exact_cmd->add_option("--m", ex_m, "conditioned sum")->required();
  exact_cmd->add_option("--p", ex_p, "half the moment order")->required();
  exact_cmd->add_option("--format", ex_format, "json (one record per line) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // asymptotic
  auto* asym_cmd =
      app.add_subcommand("asymptotic", "asymptotic estimate, with the exact value and "
                                       "ratio when the closed form is affordable");
  std::string as_regime;
  long as_n = 0, as_nn = 0, as_m = 0, as_p = 1;
  double as_alpha = 0.0, as_beta = 0.0;
  std::string as_format = "json";
  asym_cmd
      ->add_option("--regime", as_regime,
                   "balanced_upper | fixed_m | unit_m | alpha | alpha_upper | beta")
      ->required()
      ->check(CLI::IsMember(
          {"balanced_upper", "fixed_m", "unit_m", "proportional_alpha",
           "proportional_alpha_upper", "proportional_beta"}));
  auto* as_n_opt = asym_cmd->add_option("--n", as_n, "number of signs");
  auto* as_nn_opt = asym_cmd->add_option(
      "--little-n", as_nn, "scale parameter n for the alpha regimes (N = (alpha+1) n)");
  auto* as_m_opt = asym_cmd->add_option("--m", as_m, "conditioned sum (fixed_m)");
  auto* as_alpha_opt = asym_cmd->add_option("--alpha", as_alpha, "alpha > 1");
  auto* as_beta_opt = asym_cmd->add_option("--beta", as_beta, "0 < beta < 1");
  asym_cmd->add_option("--p", as_p, "half the moment order")->required();
  asym_cmd->add_option("--format", as_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "probe the moment bound with exact brute-force enumeration");
  long vf_n = 0, vf_m = 0, vf_p = 1;
  unsigned vf_trials = 0;
  std::uint64_t vf_seed = 0;
  std::string vf_format = "json";
  verify_cmd->add_option("--n", vf_n, "number of signs")->required();
  verify_cmd->add_option("--m", vf_m, "conditioned sum")->required();
  verify_cmd->add_option("--p", vf_p, "half the moment order")->required();
  verify_cmd->add_option("--trials", vf_trials,
                         "random coefficient vectors beyond the corner family");
  verify_cmd->add_option("--seed", vf_seed, "seed for the random vectors");
  verify_cmd->add_option("--format", vf_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // tally
  auto* tally_cmd = app.add_subcommand(
      "tally", "enumerate composition parity tallies and check the closed form");
  long tl_n = 0, tl_m = 0, tl_p = 1;
  std::string tl_format = "json";
  tally_cmd->add_option("--n", tl_n, "number of signs")->required();
  tally_cmd->add_option("--m", tl_m, "conditioned sum")->required();
  tally_cmd->add_option("--p", tl_p, "half the moment order")->required();
  tally_cmd->add_option("--format", tl_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "exact-vs-asymptotic convergence table over a parameter grid");
  std::string sw_regime, sw_grid, sw_out;
  long sw_m = 1, sw_p = 2;
  double sw_alpha = 2.0, sw_beta = 0.5;
  unsigned sw_jobs = 1;
  std::string sw_format = "csv";
  sweep_cmd
      ->add_option("--regime", sw_regime,
                   "balanced | fixed_m | unit_m | alpha | beta | full_sum")
      ->required()
      ->check(CLI::IsMember(
          {"balanced", "fixed_m", "unit_m", "alpha", "beta", "full_sum"}));
  sweep_cmd
      ->add_option("--grid", sw_grid,
                   "grid spec: n=20:2000:x10 (geometric), n=50:250:+50 (arithmetic), "
                   "or a single value; for alpha the variable is little n")
      ->required();
  sweep_cmd->add_option("--m", sw_m, "fixed conditioned sum (fixed_m regime)");
  sweep_cmd->add_option("--alpha", sw_alpha, "alpha > 1 (alpha regime)");
  sweep_cmd->add_option("--beta", sw_beta, "0 < beta < 1 (beta regime)");
  sweep_cmd->add_option("--p", sw_p, "half the moment order")->required();
  sweep_cmd->add_option("--jobs", sw_jobs, "worker threads (output is order-stable)");
  sweep_cmd->add_option("--out", sw_out, "write rows to this file instead of stdout");
  sweep_cmd->add_option("--format", sw_format, "csv (default) or json")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*exact_cmd) {
      run_exact(ex_n, ex_m, ex_p, parse_format(ex_format), std::cout);
    } else if (*asym_cmd) {
      run_asymptotic(as_regime, as_n_opt->count() > 0, as_n, as_nn_opt->count() > 0,
                     as_nn, as_m_opt->count() > 0, as_m, as_alpha_opt->count() > 0,
                     as_alpha, as_beta_opt->count() > 0, as_beta, as_p,
                     parse_format(as_format), std::cout);
    } else if (*verify_cmd) {
      run_verify(vf_n, vf_m, vf_p, vf_trials, vf_seed, parse_format(vf_format),
                 std::cout);
    } else if (*tally_cmd) {
      run_tally(tl_n, tl_m, tl_p, parse_format(tl_format), std::cout);
    } else if (*sweep_cmd) {
      run_sweep(sw_regime, sw_grid, sw_m, sw_alpha, sw_beta, sw_p, sw_jobs, sw_out,
                parse_format(sw_format));
    }
  } catch (const oracle::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
