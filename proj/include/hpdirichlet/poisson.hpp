#pragma once

// Half-plane Poisson extension of twisted boundary data
//
//   F(s) = int f*(chi p^{-i tau}) sigma / (sigma^2 + (t - tau)^2) dtau / pi,
//
// Fatou traces toward the boundary, and the explicit growth-bound checks fed
// by a flow-growth certificate. Tail accounting uses the certificate C with a
// documented safety factor because a grid supremum underestimates the true
// constant.

#include "hpdirichlet/characters.hpp"
#include "hpdirichlet/means.hpp"
#include "hpdirichlet/status.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hpd {

struct PoissonQuadratureSpec {
  double trunc_T = 0.0;  // window half-width |tau - t| <= trunc_T; needs >= 10 sigma
  double step = 0.0;     // trapezoid step; needs <= sigma / 10
};

struct PoissonValue {
  std::complex<double> value;
  double tail_bound = 0.0;
  double quad_error = 0.0;
  double bound() const noexcept { return tail_bound + quad_error; }
};

inline constexpr double default_certificate_safety = 1.1;

// Trapezoid quadrature over the window centered at t. The certificate must
// have been computed for the same chi (checked) and carries p. sigma > 0.
PoissonValue poisson_extend(const DirichletPolynomial& f, const Character& chi,
                            HalfPlanePoint s, const FlowGrowthCertificate& cert,
                            const PoissonQuadratureSpec& spec, const SpfTable& spf,
                            double certificate_safety = default_certificate_safety);

// Quadrature of the bare kernel over the window (same rule as poisson_extend).
double poisson_kernel_window_mass(double sigma, double t, const PoissonQuadratureSpec& spec);
// Analytic kernel mass outside the window: (2/pi) atan(sigma / W).
double poisson_kernel_tail_mass(double sigma, double window);

struct FatouTrace {
  std::vector<std::complex<double>> values;  // f_chi(sigma_i + it), direct evaluation
  std::complex<double> target;               // f*(chi p^{-it})
  std::vector<double> gaps;                  // |values_i - target|
};

// sigma_list positive and decreasing toward 0.
FatouTrace fatou_trace(const DirichletPolynomial& f, const Character& chi, double t,
                       std::span<const double> sigma_list, const SpfTable& spf);

struct PointwiseBoundReport {
  struct Row {
    HalfPlanePoint s;
    double value_p = 0.0;     // |f_chi(s)|^p
    double bound_raw = 0.0;   // sqrt(2) C (1+|s|) / sigma
    double bound_safe = 0.0;  // raw bound with the safety factor on C
    CheckStatus status = CheckStatus::fail;
  };
  std::vector<Row> rows;
  double worst_excess_raw = 0.0;  // max(value_p - bound_raw); <= 0 when clean
  double safety_band = 0.0;       // max(bound_safe - bound_raw)
  CheckStatus status = CheckStatus::fail;
};

PointwiseBoundReport check_pointwise_bound(const DirichletPolynomial& f, const Character& chi,
                                           double p, const FlowGrowthCertificate& cert,
                                           std::span<const HalfPlanePoint> sample_points,
                                           const SpfTable& spf,
                                           double certificate_safety = default_certificate_safety);

struct SupSupReport {
  std::vector<double> sigma_grid;
  std::vector<double> T_grid;
  double sup_mean = 0.0;  // grid-sup of (1/2T) int |f_chi(sigma+it)|^p dt
  double ratio = 0.0;     // sup_mean / cert.C, to compare with the constant 6
  CheckStatus status = CheckStatus::fail;
};

// T_grid within [1, inf). p = 2 uses the exact finite-horizon formula, other
// p composite Simpson.
SupSupReport check_supsup_bound(const DirichletPolynomial& f, const Character& chi, double p,
                                const FlowGrowthCertificate& cert,
                                std::span<const double> sigma_grid,
                                std::span<const double> T_grid, const SpfTable& spf,
                                double certificate_safety = default_certificate_safety);

// Cauchy-trend diagnostic for partial sums S_M = sum_{n<=M} a_n chi(n) n^{-s}:
// for each M0, max_{M0 < M <= N} |S_M - S_{M0}|. A stabilization indicator,
// not a convergence proof; finite truncations cannot witness more.
std::vector<double> partial_sum_stabilization(const DirichletPolynomial& f,
                                              const Character& chi, std::complex<double> s,
                                              std::span<const std::uint32_t> M0_list,
                                              const SpfTable& spf);

}  // namespace hpd
