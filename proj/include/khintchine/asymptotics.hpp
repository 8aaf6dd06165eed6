#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khintchine/exact_rational.hpp"
#include "khintchine/log_value.hpp"

namespace khintchine {

// The asymptotic regimes.  All evaluators work in log space throughout and
// are smooth in their real arguments: none of them enforces an N/M parity
// constraint (that is a property of the exact side, handled by snapping in
// convergence_report), only genuine domain edges (M = 0, M = N, alpha <= 1,
// beta outside (0,1)) raise std::domain_error.
enum class Regime {
  balanced_upper,        // M = 0 upper bound, finite N and limiting form
  fixed_m,               // M fixed as N grows
  unit_m,                // the M = 1 specialization
  proportional_alpha,        // N = (alpha+1) n, M = (alpha-1) n, n -> inf
  proportional_alpha_upper,  // upper bound for the proportional_alpha regime
  proportional_beta,         // M = beta N, N -> inf
};

const char* regime_name(Regime r);

struct AsymptoticEstimate {
  Regime regime;
  LogValue value;                        // the asymptotic / limiting value
  std::optional<LogValue> finite_bound;  // balanced_upper only: the exact finite-N bound
  std::vector<std::pair<std::string, double>> inputs;  // echo of the arguments
};

// Balanced upper bound (N even >= 2):
//   finite:   N^p/(N+1)^p * 2^N * ((N/2)!)^2 / N! * (2p)!/(2^p p!)
//             >= the exact balanced constant for every such N, p;
//   limiting: e^{-p/N} sqrt(pi N / 2) (2p)!/(2^p p!), its N -> inf shape.
AsymptoticEstimate balanced_upper_bound(long n, long p);

// The finite-N balanced bound as an exact rational, for order comparisons
// that must not depend on float rounding (the bound is *equal* to the exact
// constant at p = 1).
ExactRational balanced_upper_bound_exact(long n, long p);

// M >= 1 fixed, N -> inf:
//   sqrt(pi (N^2 - M^2) / (2N)) e^{-Mp/N} / (M-1)! * (2p)!/2^p
//     * sum_{j=0}^{p} (2j + M - 1)! / ((p-j)! (2j)!) * (2/(N-M))^j.
// M = 0 and M >= N are outside this regime (std::domain_error).
AsymptoticEstimate fixed_m_asymptotic(long n, long m, long p);

// The fixed_m formula collapsed at M = 1:
//   e^{-p/N} sqrt(pi N / 2) (2p)! / (2^p p!).
AsymptoticEstimate unit_m_asymptotic(long n, long p);

// N = (alpha+1) n, M = (alpha-1) n, alpha > 1 fixed, n -> inf:
//   sqrt(2 pi n alpha/(alpha+1)) alpha^{alpha n} (2/(alpha+1))^{(alpha+1) n}
//     * (2p)!/(alpha+1)^p
//     * sum_{j=0}^{p} (alpha-1)^{2j} n^j / ((p-j)! (2j)!).
AsymptoticEstimate alpha_asymptotic(long little_n, double alpha, long p);

// Upper bound for the alpha regime: same prefactor, with the sum bounded by
//   sum_{j=0}^{p} C(p+j, 2j) (alpha-1)^{2j} n^j / (p! (p+1)^j),
// which dominates term by term.  As alpha -> 1+ it tends to
// sqrt(pi n) (2p)!/(2^p p!)  (only the j = 0 term survives).
AsymptoticEstimate alpha_upper_bound(long little_n, double alpha, long p);

// M = beta N, 0 < beta < 1 fixed, N -> inf:
//   sqrt(pi N / 2) (1 - beta^2)^{(N+1)/2} ((1+beta)/(1-beta))^{beta N / 2}
//     * (1-beta)^p (2p)!/2^p
//     * sum_{j=0}^{p} (2 beta^2 N / (1-beta))^j / ((p-j)! (2j)!).
AsymptoticEstimate beta_asymptotic(long n, double beta, long p);

// --- convergence sweeps ------------------------------------------------

enum class SweepRegime { balanced, fixed_m, unit_m, alpha, beta, full_sum };

const char* sweep_regime_name(SweepRegime r);

struct SweepSpec {
  SweepRegime regime = SweepRegime::balanced;
  long fixed_m = 1;     // fixed_m regime only
  double alpha = 2.0;   // alpha regime only
  double beta = 0.5;    // beta regime only
  long p = 2;
};

struct ConvergencePoint {
  double grid_value = 0.0;  // raw grid input: N, or little n for alpha
  long n = 0;               // snapped exact-side pair
  long m = 0;
  long p = 0;
  bool skipped = false;     // true when no valid exact pair exists nearby
  std::string skip_reason;
  LogValue exact;           // best constant to the 2p at (n, m, p)
  LogValue asymptotic;      // regime formula at the *same* snapped point
  double ratio = 0.0;       // exp(exact - asymptotic)
  bool improving = false;   // |ratio - 1| strictly below the previous row's
};

// Nearest integer to x with the given parity (0 even, 1 odd); exact ties
// resolve upward.
long snap_to_parity(double x, int parity);

// Evaluates exact and asymptotic values across the grid.  Each grid value is
// snapped to the nearest admissible exact pair -- e.g. N to M's parity for
// fixed_m, M = round-to-parity(beta N) for beta -- and *both* sides are
// evaluated at the snapped pair, so the ratio column measures the formula
// error and nothing else.  full_sum has no asymptotic regime (the exact
// value is already closed-form elementary) and yields an empty report.
// jobs > 1 evaluates grid points on a small thread pool; the report order
// (and content) is identical regardless of jobs.
std::vector<ConvergencePoint> convergence_report(const SweepSpec& spec,
                                                 const std::vector<double>& grid,
                                                 unsigned jobs = 1);

}  // namespace khintchine
