#include "hpdirichlet/poisson.hpp"

#include "hpdirichlet/coverage.hpp"
#include "hpdirichlet/numeric.hpp"
#include "hpdirichlet/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hpd {

namespace {

constexpr double pi = std::numbers::pi;

struct WindowQuadrature {
  std::complex<double> value;
  double abs_mass = 0.0;
  double refinement_gap = 0.0;  // |full - embedded half resolution|
};

// Trapezoid over [center - W, center + W]. Groups of two intervals carry both
// the full-step and the embedded double-step rule, so chunks are
// self-contained and the half-grid estimate is free.
template <typename F>
WindowQuadrature trapezoid_window(const F& g, double center, double W, double step) {
  std::uint64_t M = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(2.0 * W / step)));
  M += M % 2;
  const double h = 2.0 * W / static_cast<double>(M);
  const double left = center - W;

  const std::uint64_t groups = M / 2;
  const std::uint64_t groups_per_chunk = 2048;
  const std::uint64_t n_chunks = (groups + groups_per_chunk - 1) / groups_per_chunk;
  struct Partial {
    std::complex<double> full, half;
    double mass = 0.0;
  };
  std::vector<Partial> parts(n_chunks);
  for_each_chunk(n_chunks, [&](std::size_t c) {
    KahanComplexSum full, half;
    KahanSum mass;
    const std::uint64_t g_begin = c * groups_per_chunk;
    const std::uint64_t g_end = std::min(groups, g_begin + groups_per_chunk);
    for (std::uint64_t grp = g_begin; grp < g_end; ++grp) {
      const std::uint64_t b = 2 * grp;
      const std::complex<double> v0 = g(left + static_cast<double>(b) * h);
      const std::complex<double> v1 = g(left + static_cast<double>(b + 1) * h);
      const std::complex<double> v2 = g(left + static_cast<double>(b + 2) * h);
      full.add(h * (0.5 * v0 + v1 + 0.5 * v2));
      half.add(h * (v0 + v2));
      mass.add(h * (0.5 * std::abs(v0) + std::abs(v1) + 0.5 * std::abs(v2)));
    }
    parts[c] = Partial{full.value(), half.value(), mass.value()};
  });
  KahanComplexSum full, half;
  KahanSum mass;
  for (const auto& part : parts) {
    full.add(part.full);
    half.add(part.half);
    mass.add(part.mass);
  }
  return WindowQuadrature{full.value(), mass.value(), std::abs(full.value() - half.value())};
}

void require_spec(const PoissonQuadratureSpec& spec, double sigma) {
  if (!(spec.step > 0.0) || !(spec.trunc_T > 0.0))
    throw std::invalid_argument("poisson: window and step must be positive");
  if (spec.step > sigma / 10.0 * (1.0 + 1e-12))
    throw std::invalid_argument("poisson: step must be <= sigma / 10");
  if (spec.trunc_T < 10.0 * sigma * (1.0 - 1e-12))
    throw std::invalid_argument("poisson: window must be >= 10 sigma");
}

}  // namespace

double poisson_kernel_tail_mass(double sigma, double window) {
  if (!(sigma > 0.0) || !(window > 0.0))
    throw std::invalid_argument("poisson_kernel_tail_mass: needs sigma > 0, window > 0");
  return (2.0 / pi) * std::atan(sigma / window);
}

double poisson_kernel_window_mass(double sigma, double t, const PoissonQuadratureSpec& spec) {
  if (!(sigma > 0.0)) throw std::invalid_argument("poisson kernel: needs sigma > 0");
  require_spec(spec, sigma);
  auto kernel = [&](double tau) {
    const double d = t - tau;
    return std::complex<double>{sigma / (sigma * sigma + d * d) / pi, 0.0};
  };
  return trapezoid_window(kernel, t, spec.trunc_T, spec.step).value.real();
}

PoissonValue poisson_extend(const DirichletPolynomial& f, const Character& chi,
                            HalfPlanePoint s, const FlowGrowthCertificate& cert,
                            const PoissonQuadratureSpec& spec, const SpfTable& spf,
                            double certificate_safety) {
  coverage::mark(coverage::Op::poisson_extend);
  if (!s.in_interior())
    throw std::domain_error("poisson_extend: boundary point; sigma must be > 0");
  require_spec(spec, s.sigma);
  if (!cert.chi_ref.matches(chi))
    throw std::domain_error("poisson_extend: certificate was computed for another character");
  if (!(certificate_safety >= 1.0))
    throw std::invalid_argument("poisson_extend: safety factor must be >= 1");

  const DirichletPolynomial g = vertical_limit(f, chi, spf);
  const auto coeffs = g.coefficients();
  const auto logs = g.log_table();
  const double sigma = s.sigma, t = s.t;

  // Boundary data f*(chi p^{-i tau}) = g(i tau), evaluated exactly per node.
  auto integrand = [&](double tau) {
    const double d = t - tau;
    const double kernel = sigma / (sigma * sigma + d * d) / pi;
    return detail::boundary_sum(coeffs, logs, tau) * kernel;
  };
  const auto quad = trapezoid_window(integrand, t, spec.trunc_T, spec.step);

  // Outside the window, integration by parts against the cumulative growth
  // certificate: with
  //   H(W) = (1/pi) [ (1+|t|+W) sigma / (sigma^2+W^2) + atan(sigma/W) ]
  // each tail's p-mass is at most 2 C H(W) (a tail crossing the origin needs
  // both one-sided cumulatives), so the total is below 4 C H(W); Hoelder
  // against the kernel tail mass turns that into a bound on the missing
  // integral.
  const double W = spec.trunc_T;
  const double C_safe = cert.C * certificate_safety;
  const double p = cert.p;
  const double Hw =
      ((1.0 + std::fabs(t) + W) * sigma / (sigma * sigma + W * W) + std::atan(sigma / W)) / pi;
  const double mass_out = poisson_kernel_tail_mass(sigma, W);

  PoissonValue out;
  out.value = quad.value;
  out.tail_bound = std::pow(4.0 * C_safe * Hw, 1.0 / p) * std::pow(mass_out, 1.0 - 1.0 / p);
  out.quad_error = 4.0 * quad.refinement_gap / 3.0 + 1e-13 * quad.abs_mass;
  return out;
}

FatouTrace fatou_trace(const DirichletPolynomial& f, const Character& chi, double t,
                       std::span<const double> sigma_list, const SpfTable& spf) {
  coverage::mark(coverage::Op::poisson_fatou_trace);
  if (sigma_list.empty()) throw std::invalid_argument("fatou_trace: empty sigma list");
  for (std::size_t i = 0; i < sigma_list.size(); ++i) {
    if (!(sigma_list[i] > 0.0) || !std::isfinite(sigma_list[i]))
      throw std::invalid_argument("fatou_trace: sigma values must be positive");
    if (i > 0 && !(sigma_list[i] < sigma_list[i - 1]))
      throw std::invalid_argument("fatou_trace: sigma list must decrease toward 0");
  }
  const DirichletPolynomial g = vertical_limit(f, chi, spf);
  FatouTrace trace;
  trace.target = boundary_eval(f, kronecker_twist(chi, t), spf);
  trace.values.reserve(sigma_list.size());
  trace.gaps.reserve(sigma_list.size());
  for (const double sigma : sigma_list) {
    const auto v = eval(g, std::complex<double>{sigma, t});
    trace.values.push_back(v);
    trace.gaps.push_back(std::abs(v - trace.target));
  }
  return trace;
}

PointwiseBoundReport check_pointwise_bound(const DirichletPolynomial& f, const Character& chi,
                                           double p, const FlowGrowthCertificate& cert,
                                           std::span<const HalfPlanePoint> sample_points,
                                           const SpfTable& spf, double certificate_safety) {
  coverage::mark(coverage::Op::poisson_check_pointwise);
  if (p != cert.p)
    throw std::domain_error("check_pointwise_bound: certificate holds a different p");
  if (!cert.chi_ref.matches(chi))
    throw std::domain_error("check_pointwise_bound: certificate/character mismatch");
  const DirichletPolynomial g = vertical_limit(f, chi, spf);

  PointwiseBoundReport report;
  report.rows.reserve(sample_points.size());
  report.worst_excess_raw = -std::numeric_limits<double>::infinity();
  bool any_fail = false, any_inconclusive = false;
  const double sqrt2 = std::numbers::sqrt2;
  for (const auto& s : sample_points) {
    if (!s.in_interior())
      throw std::domain_error("check_pointwise_bound: sample points need sigma > 0");
    PointwiseBoundReport::Row row;
    row.s = s;
    row.value_p = pow_from_abs2(std::norm(eval(g, s.to_complex())), p);
    row.bound_raw = sqrt2 * cert.C * (1.0 + s.abs()) / s.sigma;
    row.bound_safe = row.bound_raw * certificate_safety;
    if (row.value_p <= row.bound_raw) row.status = CheckStatus::pass;
    else if (row.value_p <= row.bound_safe) row.status = CheckStatus::inconclusive;
    else row.status = CheckStatus::fail;
    any_fail |= row.status == CheckStatus::fail;
    any_inconclusive |= row.status == CheckStatus::inconclusive;
    report.worst_excess_raw = std::max(report.worst_excess_raw, row.value_p - row.bound_raw);
    report.safety_band = std::max(report.safety_band, row.bound_safe - row.bound_raw);
    report.rows.push_back(row);
  }
  report.status = any_fail ? CheckStatus::fail
                           : (any_inconclusive ? CheckStatus::inconclusive : CheckStatus::pass);
  return report;
}

SupSupReport check_supsup_bound(const DirichletPolynomial& f, const Character& chi, double p,
                                const FlowGrowthCertificate& cert,
                                std::span<const double> sigma_grid,
                                std::span<const double> T_grid, const SpfTable& spf,
                                double certificate_safety) {
  coverage::mark(coverage::Op::poisson_check_supsup);
  if (p != cert.p)
    throw std::domain_error("check_supsup_bound: certificate holds a different p");
  if (!cert.chi_ref.matches(chi))
    throw std::domain_error("check_supsup_bound: certificate/character mismatch");
  for (const double T : T_grid)
    if (!(T >= 1.0)) throw std::invalid_argument("check_supsup_bound: T grid must be >= 1");
  for (const double sigma : sigma_grid)
    if (!(sigma > 0.0)) throw std::invalid_argument("check_supsup_bound: sigma grid must be > 0");

  const DirichletPolynomial g = vertical_limit(f, chi, spf);
  SupSupReport report;
  report.sigma_grid.assign(sigma_grid.begin(), sigma_grid.end());
  report.T_grid.assign(T_grid.begin(), T_grid.end());
  double sup = 0.0;
  for (const double sigma : sigma_grid) {
    for (const double T : T_grid) {
      double mean;
      if (p == 2.0) {
        mean = exact_finite_mean_2(g, sigma, T);
      } else {
        const std::uint64_t steps = 2 * std::max<std::uint64_t>(time_mean_min_steps(g, T), 64);
        mean = time_mean(g, sigma, p, T, steps).value;
      }
      sup = std::max(sup, mean);
    }
  }
  report.sup_mean = sup;
  report.ratio = cert.C > 0.0 ? sup / cert.C : 0.0;
  if (report.ratio <= 6.0) report.status = CheckStatus::pass;
  else if (report.ratio <= 6.0 * certificate_safety) report.status = CheckStatus::inconclusive;
  else report.status = CheckStatus::fail;
  return report;
}

std::vector<double> partial_sum_stabilization(const DirichletPolynomial& f,
                                              const Character& chi, std::complex<double> s,
                                              std::span<const std::uint32_t> M0_list,
                                              const SpfTable& spf) {
  const std::uint32_t N = f.length();
  for (std::size_t i = 0; i < M0_list.size(); ++i) {
    if (M0_list[i] >= N)
      throw std::invalid_argument("partial_sum_stabilization: M0 must be < N");
    if (i > 0 && M0_list[i] <= M0_list[i - 1])
      throw std::invalid_argument("partial_sum_stabilization: M0 list must increase");
  }
  std::vector<double> phi(N);
  detail::char_phases(chi.phases(), spf, N, phi.data());
  const auto coeffs = f.coefficients();
  const auto logs = f.log_table();
  std::vector<std::complex<double>> prefix(N + 1);
  KahanComplexSum sum;
  for (std::uint32_t n = 1; n <= N; ++n) {
    sum.add(coeffs[n - 1] * cis(phi[n - 1]) *
            (std::exp(-s.real() * logs[n - 1]) * cis(-s.imag() * logs[n - 1])));
    prefix[n] = sum.value();
  }
  std::vector<double> worst;
  worst.reserve(M0_list.size());
  for (const std::uint32_t M0 : M0_list) {
    double w = 0.0;
    for (std::uint32_t M = M0 + 1; M <= N; ++M)
      w = std::max(w, std::abs(prefix[M] - prefix[M0]));
    worst.push_back(w);
  }
  return worst;
}

}  // namespace hpd
