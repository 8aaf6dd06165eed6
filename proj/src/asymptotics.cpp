#include "khintchine/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "khintchine/formulas.hpp"
#include "khintchine/parameters.hpp"

namespace khintchine {
namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLnPi = 1.1447298858494001741;

double ln_factorial(long k) { return log_gamma(static_cast<double>(k) + 1.0); }

double log_sum_exp(const std::vector<double>& terms) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double t : terms) mx = std::max(mx, t);
  if (!std::isfinite(mx)) return mx;
  double s = 0.0;
  for (double t : terms) s += std::exp(t - mx);
  return mx + std::log(s);
}

void check_positive(long n, long p, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (p < 1) throw std::invalid_argument(std::string(who) + ": p must be >= 1");
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::balanced_upper: return "balanced_upper";
    case Regime::fixed_m: return "fixed_m";
    case Regime::unit_m: return "unit_m";
    case Regime::proportional_alpha: return "proportional_alpha";
    case Regime::proportional_alpha_upper: return "proportional_alpha_upper";
    case Regime::proportional_beta: return "proportional_beta";
  }
  return "?";
}

const char* sweep_regime_name(SweepRegime r) {
  switch (r) {
    case SweepRegime::balanced: return "balanced";
    case SweepRegime::fixed_m: return "fixed_m";
    case SweepRegime::unit_m: return "unit_m";
    case SweepRegime::alpha: return "alpha";
    case SweepRegime::beta: return "beta";
    case SweepRegime::full_sum: return "full_sum";
  }
  return "?";
}

ExactRational balanced_upper_bound_exact(long n, long p) {
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("balanced_upper_bound: n must be even and >= 2 (got " +
                            std::to_string(n) + ")");
  if (p < 1) throw std::invalid_argument("balanced_upper_bound: p must be >= 1");
  const long h = n / 2;
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  const mpz_class num = pow_z(n, p) * two_n * factorial(h) * factorial(h) * factorial(2 * p);
  mpz_class two_p;
  mpz_ui_pow_ui(two_p.get_mpz_t(), 2, static_cast<unsigned long>(p));
  const mpz_class den = pow_z(n + 1, p) * factorial(n) * two_p * factorial(p);
  return make_rational(num, den);
}

AsymptoticEstimate balanced_upper_bound(long n, long p) {
  const ExactRational finite = balanced_upper_bound_exact(n, p);
  const double nd = static_cast<double>(n);
  const double limiting = -static_cast<double>(p) / nd +
                          0.5 * (kLnPi + std::log(nd) - kLn2) + ln_factorial(2 * p) -
                          p * kLn2 - ln_factorial(p);
  AsymptoticEstimate est;
  est.regime = Regime::balanced_upper;
  est.value = LogValue::positive(limiting);
  est.finite_bound = exact_to_log(finite);
  est.inputs = {{"n", nd}, {"p", static_cast<double>(p)}};
  return est;
}

AsymptoticEstimate fixed_m_asymptotic(long n, long m, long p) {
  check_positive(n, p, "fixed_m_asymptotic");
  if (m < 1)
    throw std::domain_error("fixed_m_asymptotic: needs m >= 1 (m = 0 is the balanced regime)");
  if (m >= n)
    throw std::domain_error("fixed_m_asymptotic: needs m < n (m = n is the full-sum case)");
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const double pre = 0.5 * (kLnPi + std::log((nd * nd - md * md) / (2.0 * nd))) -
                     md * p / nd - log_gamma(md) + ln_factorial(2 * p) - p * kLn2;
  std::vector<double> terms(p + 1);
  const double ln_step = kLn2 - std::log(nd - md);
  for (long j = 0; j <= p; ++j)
    terms[j] = log_gamma(2.0 * j + md) - ln_factorial(p - j) - ln_factorial(2 * j) +
               j * ln_step;
  AsymptoticEstimate est;
  est.regime = Regime::fixed_m;
  est.value = LogValue::positive(pre + log_sum_exp(terms));
  est.inputs = {{"n", nd}, {"m", md}, {"p", static_cast<double>(p)}};
  return est;
}

AsymptoticEstimate unit_m_asymptotic(long n, long p) {
  check_positive(n, p, "unit_m_asymptotic");
  const double nd = static_cast<double>(n);
  const double value = -static_cast<double>(p) / nd +
                       0.5 * (kLnPi + std::log(nd) - kLn2) + ln_factorial(2 * p) -
                       p * kLn2 - ln_factorial(p);
  AsymptoticEstimate est;
  est.regime = Regime::unit_m;
  est.value = LogValue::positive(value);
  est.inputs = {{"n", nd}, {"p", static_cast<double>(p)}};
  return est;
}

namespace {

// Shared prefactor of the two alpha-regime forms.
double alpha_prefactor(long little_n, double alpha, long p) {
  const double nd = static_cast<double>(little_n);
  return 0.5 * (kLn2 + kLnPi + std::log(nd * alpha / (alpha + 1.0))) +
         alpha * nd * std::log(alpha) + (alpha + 1.0) * nd * (kLn2 - std::log(alpha + 1.0)) +
         ln_factorial(2 * p) - p * std::log(alpha + 1.0);
}

void check_alpha(long little_n, double alpha, long p, const char* who) {
  check_positive(little_n, p, who);
  if (!(alpha > 1.0))
    throw std::domain_error(std::string(who) + ": needs alpha > 1 (alpha = 1 degenerates to m = 0)");
}

}  // namespace

AsymptoticEstimate alpha_asymptotic(long little_n, double alpha, long p) {
  check_alpha(little_n, alpha, p, "alpha_asymptotic");
  const double nd = static_cast<double>(little_n);
  std::vector<double> terms(p + 1);
  for (long j = 0; j <= p; ++j)
    terms[j] = 2.0 * j * std::log(alpha - 1.0) + j * std::log(nd) - ln_factorial(p - j) -
               ln_factorial(2 * j);
  AsymptoticEstimate est;
  est.regime = Regime::proportional_alpha;
  est.value = LogValue::positive(alpha_prefactor(little_n, alpha, p) + log_sum_exp(terms));
  est.inputs = {{"little_n", nd}, {"alpha", alpha}, {"p", static_cast<double>(p)}};
  return est;
}

AsymptoticEstimate alpha_upper_bound(long little_n, double alpha, long p) {
  check_alpha(little_n, alpha, p, "alpha_upper_bound");
  const double nd = static_cast<double>(little_n);
  std::vector<double> terms(p + 1);
  for (long j = 0; j <= p; ++j) {
    // ln C(p + j, 2j): (p+j)! / ((2j)! (p-j)!)
    const double ln_binom =
        ln_factorial(p + j) - ln_factorial(2 * j) - ln_factorial(p - j);
    terms[j] = ln_binom + 2.0 * j * std::log(alpha - 1.0) + j * std::log(nd) -
               ln_factorial(p) - j * std::log(static_cast<double>(p) + 1.0);
  }
  AsymptoticEstimate est;
  est.regime = Regime::proportional_alpha_upper;
  est.value = LogValue::positive(alpha_prefactor(little_n, alpha, p) + log_sum_exp(terms));
  est.inputs = {{"little_n", nd}, {"alpha", alpha}, {"p", static_cast<double>(p)}};
  return est;
}

AsymptoticEstimate beta_asymptotic(long n, double beta, long p) {
  check_positive(n, p, "beta_asymptotic");
  if (!(beta > 0.0) || !(beta < 1.0))
    throw std::domain_error(
        "beta_asymptotic: needs 0 < beta < 1 (the endpoints are the balanced and full-sum cases)");
  const double nd = static_cast<double>(n);
  const double pre = 0.5 * (kLnPi + std::log(nd) - kLn2) +
                     0.5 * (nd + 1.0) * std::log1p(-beta * beta) +
                     0.5 * beta * nd * std::log((1.0 + beta) / (1.0 - beta)) +
                     p * std::log1p(-beta) + ln_factorial(2 * p) - p * kLn2;
  std::vector<double> terms(p + 1);
  const double ln_step = kLn2 + 2.0 * std::log(beta) + std::log(nd) - std::log1p(-beta);
  for (long j = 0; j <= p; ++j)
    terms[j] = j * ln_step - ln_factorial(p - j) - ln_factorial(2 * j);
  AsymptoticEstimate est;
  est.regime = Regime::proportional_beta;
  est.value = LogValue::positive(pre + log_sum_exp(terms));
  est.inputs = {{"n", nd}, {"beta", beta}, {"p", static_cast<double>(p)}};
  return est;
}

long snap_to_parity(double x, int parity) {
  long lo = static_cast<long>(std::floor(x));
  if (((lo % 2) + 2) % 2 != parity) --lo;
  const long hi = lo + 2;
  // An exact tie (x integral with the wrong parity) goes upward.
  return (x - static_cast<double>(lo)) < (static_cast<double>(hi) - x) ? lo : hi;
}

namespace {

ConvergencePoint eval_sweep_point(const SweepSpec& spec, double g) {
  ConvergencePoint pt;
  pt.grid_value = g;
  pt.p = spec.p;
  const long p = spec.p;
  switch (spec.regime) {
    case SweepRegime::balanced: {
      const long n = snap_to_parity(g, 0);
      pt.n = n;
      pt.m = 0;
      if (n < 2) {
        pt.skipped = true;
        pt.skip_reason = "snapped n < 2";
        return pt;
      }
      pt.exact = exact_to_log(balanced_closed_form(n, p));
      pt.asymptotic = balanced_upper_bound(n, p).value;
      break;
    }
    case SweepRegime::fixed_m: {
      const long m = spec.fixed_m;
      const long n = snap_to_parity(g, static_cast<int>(m % 2));
      pt.n = n;
      pt.m = m;
      if (n <= m) {
        pt.skipped = true;
        pt.skip_reason = "snapped n <= m";
        return pt;
      }
      pt.exact = exact_to_log(best_constant_2p_power(Parameters(n, m, p)));
      pt.asymptotic = fixed_m_asymptotic(n, m, p).value;
      break;
    }
    case SweepRegime::unit_m: {
      const long n = snap_to_parity(g, 1);
      pt.n = n;
      pt.m = 1;
      if (n < 1) {
        pt.skipped = true;
        pt.skip_reason = "snapped n < 1";
        return pt;
      }
      pt.exact = exact_to_log(best_constant_2p_power(Parameters(n, 1, p)));
      pt.asymptotic = unit_m_asymptotic(n, p).value;
      break;
    }
    case SweepRegime::alpha: {
      // g is little n; the exact side lives at N = (alpha+1) n, M = (alpha-1) n.
      const long n = std::llround((spec.alpha + 1.0) * g);
      const long m = snap_to_parity((spec.alpha - 1.0) * g, static_cast<int>(n % 2));
      pt.n = n;
      pt.m = m;
      if (m < 1 || m >= n) {
        pt.skipped = true;
        pt.skip_reason = "no valid (n, m) pair near the grid point";
        return pt;
      }
      const long n_eff = (n - m) / 2;
      const double a_eff = static_cast<double>(n + m) / static_cast<double>(n - m);
      pt.exact = exact_to_log(best_constant_2p_power(Parameters(n, m, p)));
      pt.asymptotic = alpha_asymptotic(n_eff, a_eff, p).value;
      break;
    }
    case SweepRegime::beta: {
      const long n = std::llround(g);
      pt.n = n;
      if (n < 2) {
        pt.skipped = true;
        pt.skip_reason = "n < 2";
        return pt;
      }
      const long m = snap_to_parity(spec.beta * static_cast<double>(n),
                                    static_cast<int>(n % 2));
      pt.m = m;
      if (m < 1 || m >= n) {
        pt.skipped = true;
        pt.skip_reason = "no valid (n, m) pair near the grid point";
        return pt;
      }
      pt.exact = exact_to_log(best_constant_2p_power(Parameters(n, m, p)));
      pt.asymptotic =
          beta_asymptotic(n, static_cast<double>(m) / static_cast<double>(n), p).value;
      break;
    }
    case SweepRegime::full_sum:
      break;  // handled by the caller
  }
  pt.ratio = std::exp(pt.exact.ln_magnitude - pt.asymptotic.ln_magnitude);
  return pt;
}

}  // namespace

std::vector<ConvergencePoint> convergence_report(const SweepSpec& spec,
                                                 const std::vector<double>& grid,
                                                 unsigned jobs) {
  if (spec.p < 1) throw std::invalid_argument("convergence_report: p must be >= 1");
  switch (spec.regime) {
    case SweepRegime::fixed_m:
      if (spec.fixed_m < 1)
        throw std::domain_error("convergence_report: fixed_m sweep needs m >= 1");
      break;
    case SweepRegime::alpha:
      if (!(spec.alpha > 1.0))
        throw std::domain_error("convergence_report: alpha sweep needs alpha > 1");
      break;
    case SweepRegime::beta:
      if (!(spec.beta > 0.0) || !(spec.beta < 1.0))
        throw std::domain_error("convergence_report: beta sweep needs 0 < beta < 1");
      break;
    case SweepRegime::full_sum:
      return {};  // exact value is elementary; nothing to compare against
    default:
      break;
  }

  std::vector<ConvergencePoint> rows(grid.size());
  const unsigned workers =
      std::min<std::size_t>(jobs == 0 ? 1 : jobs, grid.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = eval_sweep_point(spec, grid[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) break;
            rows[i] = eval_sweep_point(spec, grid[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  bool have_prev = false;
  double prev_err = 0.0;
  for (auto& r : rows) {
    if (r.skipped) continue;
    const double err = std::fabs(r.ratio - 1.0);
    r.improving = have_prev && err < prev_err;
    prev_err = err;
    have_prev = true;
  }
  return rows;
}

}  // namespace khintchine
