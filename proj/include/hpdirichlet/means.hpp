#pragma once

// Three routes to the p-means
//
//   M_p^p(sigma, f) = lim_{T->inf} (1/2T) int_{-T}^{T} |f(sigma+it)|^p dt
//
// of a Dirichlet polynomial: exact closed forms (p = 2, and even p via
// Dirichlet squaring), long-horizon composite Simpson quadrature in t, and
// Monte Carlo over the torus. Every estimate carries an explicit error field.

#include "hpdirichlet/characters.hpp"
#include "hpdirichlet/series.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hpd {

enum class MeanMethod { exact2, time_average, monte_carlo };
enum class MeanScale { p_power, p_root };

struct MeanEstimate {
  double value = 0.0;  // M_p^p (p_power) or M_p (p_root)
  double p = 2.0;
  double sigma = 0.0;
  MeanMethod method = MeanMethod::exact2;
  MeanScale scale = MeanScale::p_power;
  double horizon_or_samples = 0.0;
  // Deterministic quadrature bound for time averages (rigorous for p = 2),
  // standard error for Monte Carlo, 0 for exact routes.
  double error = 0.0;
  double root() const;  // the estimate as M_p regardless of scale
};

struct CharacterRef {
  std::optional<std::uint64_t> seed;
  std::uint32_t length = 0;
  std::uint64_t phase_digest = 0;
  static CharacterRef of(const Character& chi);
  bool matches(const Character& chi) const noexcept;
};

// Empirical linear-growth constant: both one-sided cumulative integrals of
// |f*(chi p^{-i tau})|^p stay below C (1 + T) at every grid point T <= T_max.
// C is a grid supremum and therefore a lower estimate of the true constant;
// consumers apply a safety factor.
struct FlowGrowthCertificate {
  double C = 0.0;
  double p = 2.0;
  double T_max = 0.0;
  double grid_step = 0.0;
  CharacterRef chi_ref;
};

// sum |a_n|^2 n^{-2 sigma}, exact up to summation rounding.
MeanEstimate exact_mean_2(const DirichletPolynomial& f, double sigma);

// Exact value of (1/2T) int_{-T}^{T} |f(sigma+it)|^2 dt:
//   sum_m sum_n a_m conj(a_n) (mn)^{-sigma} sinc(T ln(m/n)).
double exact_finite_mean_2(const DirichletPolynomial& f, double sigma, double T);

// Minimum Simpson resolution for horizon T: ceil(20 T ln(N) / pi).
std::uint64_t time_mean_min_steps(const DirichletPolynomial& g, double T);

// Composite Simpson estimate of (1/2T) int_{-T}^{T} |g(sigma+it)|^p dt.
// Rejects p < 1 and under-resolved grids (steps below time_mean_min_steps).
MeanEstimate time_mean(const DirichletPolynomial& g, double sigma, double p, double T,
                       std::uint64_t steps);

// Monte Carlo mean of |f*(chi)|^p over Haar samples; samples >= 100, p >= 1.
MeanEstimate mc_torus_mean(const DirichletPolynomial& f, double p, std::uint64_t samples,
                           std::uint64_t seed);

// Trapezoid cumulative integrals on the stated tau-grid; C is the grid-sup of
// max(int_0^T, int_{-T}^0) / (1+T). Rejects grid_step > pi / (10 ln N).
FlowGrowthCertificate estimate_Cf(const DirichletPolynomial& f, const Character& chi,
                                  double p, double T_max, double grid_step);

struct ConvexityReport {
  double p = 2.0;
  std::vector<double> sigma;
  std::vector<double> log_mean;    // log M_p(sigma)
  std::vector<double> log_stderr;  // 0 for exact routes
  std::vector<double> first_difference;   // expected <= tolerance (decreasing)
  std::vector<double> diff_tolerance;
  std::vector<double> convexity_defect;   // interpolation defect, <= tolerance when convex
  std::vector<double> defect_tolerance;
  bool decreasing_ok = false;
  bool convex_ok = false;
  bool exact_route = false;
};

// log M_p along an increasing positive grid with first differences and
// convexity defects. Exact route for p = 2 and small even p (via Dirichlet
// powers), Monte Carlo with propagated stderr otherwise; tolerances are
// 4 * propagated stderr with a 1e-10 floor.
ConvexityReport convexity_report(const DirichletPolynomial& f, double p,
                                 std::span<const double> sigma_grid,
                                 std::uint64_t mc_samples, std::uint64_t seed);

// || f - H_sigma f ||_p: exact for p = 2, Monte Carlo otherwise.
MeanEstimate translate_defect(const DirichletPolynomial& f, double p, double sigma,
                              std::uint64_t mc_samples = 20000, std::uint64_t seed = 0);

namespace detail {
// Rigorous Simpson error bound for the p = 2 integrand (O(N^2)).
double simpson_bound_2(const DirichletPolynomial& g, double sigma, double T, double h);
}  // namespace detail

}  // namespace hpd
