#include "hpdirichlet/means.hpp"

#include "hpdirichlet/coverage.hpp"
#include "hpdirichlet/numeric.hpp"
#include "hpdirichlet/parallel.hpp"
#include "hpdirichlet/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hpd {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("p-mean: requires finite p >= 1");
}

void require_sigma(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("p-mean: requires finite sigma >= 0");
}

std::vector<std::complex<double>> damped_coeffs(const DirichletPolynomial& f, double sigma) {
  std::vector<std::complex<double>> d(f.coefficients().begin(), f.coefficients().end());
  const auto logs = f.log_table();
  if (sigma != 0.0)
    for (std::size_t i = 0; i < d.size(); ++i) d[i] *= std::exp(-sigma * logs[i]);
  return d;
}

}  // namespace

double MeanEstimate::root() const {
  if (scale == MeanScale::p_root) return value;
  return value <= 0.0 ? 0.0 : std::pow(value, 1.0 / p);
}

CharacterRef CharacterRef::of(const Character& chi) {
  return CharacterRef{chi.seed(), chi.length(), chi.phase_digest()};
}

bool CharacterRef::matches(const Character& chi) const noexcept {
  return length == chi.length() && phase_digest == chi.phase_digest();
}

MeanEstimate exact_mean_2(const DirichletPolynomial& f, double sigma) {
  coverage::mark(coverage::Op::means_exact_mean_2);
  require_sigma(sigma);
  const auto coeffs = f.coefficients();
  const auto logs = f.log_table();
  KahanSum sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    sum.add(std::norm(coeffs[i]) * std::exp(-2.0 * sigma * logs[i]));
  MeanEstimate est;
  est.value = sum.value();
  est.p = 2.0;
  est.sigma = sigma;
  est.method = MeanMethod::exact2;
  est.horizon_or_samples = 0.0;
  est.error = 0.0;
  return est;
}

double exact_finite_mean_2(const DirichletPolynomial& f, double sigma, double T) {
  coverage::mark(coverage::Op::means_exact_finite_mean_2);
  require_sigma(sigma);
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("exact_finite_mean_2: requires T > 0");
  const auto coeffs = f.coefficients();
  const auto logs = f.log_table();
  const std::size_t N = coeffs.size();
  KahanSum sum;
  for (std::size_t n = 0; n < N; ++n)
    sum.add(std::norm(coeffs[n]) * std::exp(-2.0 * sigma * logs[n]));
  // Off-diagonal pairs contribute 2 Re[a_m conj(a_n)] (mn)^{-sigma} sinc(T ln(m/n)).
  for (std::size_t m = 0; m < N; ++m) {
    if (coeffs[m] == std::complex<double>{}) continue;
    for (std::size_t n = m + 1; n < N; ++n) {
      if (coeffs[n] == std::complex<double>{}) continue;
      const double omega = logs[n] - logs[m];
      const double cross = 2.0 * (coeffs[m] * std::conj(coeffs[n])).real();
      sum.add(cross * std::exp(-sigma * (logs[m] + logs[n])) * sinc(T * omega));
    }
  }
  return sum.value();
}

std::uint64_t time_mean_min_steps(const DirichletPolynomial& g, double T) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("time_mean: requires T > 0");
  const double ln_n = g.length() >= 2 ? std::log(static_cast<double>(g.length())) : 0.0;
  const double raw = 20.0 * T * ln_n / std::numbers::pi;
  return static_cast<std::uint64_t>(std::ceil(raw));
}

namespace detail {

double simpson_bound_2(const DirichletPolynomial& g, double sigma, double T, double h) {
  const auto coeffs = g.coefficients();
  const auto logs = g.log_table();
  const std::size_t N = coeffs.size();
  KahanSum bound;
  for (std::size_t m = 0; m < N; ++m) {
    const double am = std::abs(coeffs[m]);
    if (am == 0.0) continue;
    for (std::size_t n = m + 1; n < N; ++n) {
      const double an = std::abs(coeffs[n]);
      if (an == 0.0) continue;
      const double omega = logs[n] - logs[m];
      bound.add(2.0 * am * an * std::exp(-sigma * (logs[m] + logs[n])) *
                std::fabs(sinc(T * omega)) * simpson_exp_excess(omega * h));
    }
  }
  return bound.value();
}

}  // namespace detail

MeanEstimate time_mean(const DirichletPolynomial& g, double sigma, double p, double T,
                       std::uint64_t steps) {
  coverage::mark(coverage::Op::means_time_mean);
  require_p(p);
  require_sigma(sigma);
  const std::uint64_t min_steps = time_mean_min_steps(g, T);
  if (steps < min_steps)
    throw std::invalid_argument("time_mean: grid under-resolved; steps >= " +
                                std::to_string(min_steps) + " required for T = " +
                                std::to_string(T));
  std::uint64_t M = std::max<std::uint64_t>(steps, 4);
  M += (4 - M % 4) % 4;
  const double h = 2.0 * T / static_cast<double>(M);

  const auto damped = damped_coeffs(g, sigma);
  const auto logs = g.log_table();
  auto integrand = [&](double t) {
    return pow_from_abs2(std::norm(detail::boundary_sum(damped, logs, t)), p);
  };

  // Groups of 4 intervals are self-contained Simpson units on both the full
  // grid and the embedded half grid; chunk boundaries never move with the
  // thread count.
  const std::uint64_t groups = M / 4;
  const std::uint64_t groups_per_chunk = 256;
  const std::uint64_t n_chunks = (groups + groups_per_chunk - 1) / groups_per_chunk;
  struct Partial {
    double full = 0.0, half = 0.0;
  };
  std::vector<Partial> parts(n_chunks);
  for_each_chunk(n_chunks, [&](std::size_t c) {
    KahanSum full, half;
    const std::uint64_t g_begin = c * groups_per_chunk;
    const std::uint64_t g_end = std::min(groups, g_begin + groups_per_chunk);
    for (std::uint64_t grp = g_begin; grp < g_end; ++grp) {
      const std::uint64_t b = 4 * grp;
      double v[5];
      for (int j = 0; j < 5; ++j)
        v[j] = integrand(-T + static_cast<double>(b + j) * h);
      full.add((h / 3.0) * (v[0] + 4.0 * v[1] + 2.0 * v[2] + 4.0 * v[3] + v[4]));
      half.add((2.0 * h / 3.0) * (v[0] + 4.0 * v[2] + v[4]));
    }
    parts[c] = Partial{full.value(), half.value()};
  });
  KahanSum full_sum, half_sum;
  for (const auto& part : parts) {
    full_sum.add(part.full);
    half_sum.add(part.half);
  }
  const double value = full_sum.value() / (2.0 * T);
  const double value_half = half_sum.value() / (2.0 * T);

  double error;
  if (p == 2.0 && g.length() <= 4096) {
    error = detail::simpson_bound_2(g, sigma, T, h) + 1e-13 * std::fabs(value);
  } else {
    // Richardson estimate from the embedded half grid, with cushion.
    error = 4.0 * std::fabs(value - value_half) / 15.0 + 1e-13 * std::fabs(value);
  }

  MeanEstimate est;
  est.value = value;
  est.p = p;
  est.sigma = sigma;
  est.method = MeanMethod::time_average;
  est.horizon_or_samples = T;
  est.error = error;
  return est;
}

MeanEstimate mc_torus_mean(const DirichletPolynomial& f, double p, std::uint64_t samples,
                           std::uint64_t seed) {
  coverage::mark(coverage::Op::means_mc_torus_mean);
  require_p(p);
  if (samples < 100)
    throw std::invalid_argument("mc_torus_mean: needs at least 100 samples");

  const std::uint32_t N = f.length();
  const SpfTable spf(std::max<std::uint32_t>(N, 1));
  const std::uint32_t J =
      std::max<std::uint32_t>(1, static_cast<std::uint32_t>(spf.primes().size()));
  const auto coeffs = f.coefficients();

  const std::uint64_t chunk = 2048;
  const std::uint64_t n_chunks = (samples + chunk - 1) / chunk;
  struct Partial {
    double sum = 0.0, sum_sq = 0.0;
  };
  std::vector<Partial> parts(n_chunks);
  for_each_chunk(n_chunks, [&](std::size_t c) {
    KahanSum sum, sum_sq;
    std::vector<double> theta(J);
    std::vector<double> phi(N);
    const std::uint64_t k_begin = c * chunk;
    const std::uint64_t k_end = std::min<std::uint64_t>(samples, k_begin + chunk);
    for (std::uint64_t k = k_begin; k < k_end; ++k) {
      // Sample k is the character sample_haar(J, derive(seed, mc stream, k)).
      const std::uint64_t sample_seed = rng::derive(seed, rng::stream_mc_character, k);
      for (std::uint32_t j = 0; j < J; ++j)
        theta[j] = two_pi * rng::uniform01(sample_seed, rng::stream_character_phase, j);
      detail::char_phases(theta, spf, N, phi.data());
      KahanComplexSum b;
      for (std::uint32_t n = 0; n < N; ++n) b.add(coeffs[n] * cis(phi[n]));
      const double x = pow_from_abs2(std::norm(b.value()), p);
      sum.add(x);
      sum_sq.add(x * x);
    }
    parts[c] = Partial{sum.value(), sum_sq.value()};
  });
  KahanSum sum, sum_sq;
  for (const auto& part : parts) {
    sum.add(part.sum);
    sum_sq.add(part.sum_sq);
  }
  const double mean = sum.value() / static_cast<double>(samples);
  const double ss = sum_sq.value() - static_cast<double>(samples) * mean * mean;
  const double variance =
      samples > 1 ? std::max(0.0, ss / static_cast<double>(samples - 1)) : 0.0;

  MeanEstimate est;
  est.value = mean;
  est.p = p;
  est.sigma = 0.0;
  est.method = MeanMethod::monte_carlo;
  est.horizon_or_samples = static_cast<double>(samples);
  est.error = std::sqrt(variance / static_cast<double>(samples));
  return est;
}

FlowGrowthCertificate estimate_Cf(const DirichletPolynomial& f, const Character& chi,
                                  double p, double T_max, double grid_step) {
  coverage::mark(coverage::Op::means_estimate_cf);
  require_p(p);
  if (!(T_max >= 1.0) || !std::isfinite(T_max))
    throw std::invalid_argument("estimate_Cf: requires T_max >= 1");
  if (!(grid_step > 0.0) || !std::isfinite(grid_step))
    throw std::invalid_argument("estimate_Cf: requires grid_step > 0");
  if (f.length() >= 2) {
    const double limit = std::numbers::pi / (10.0 * std::log(static_cast<double>(f.length())));
    if (grid_step > limit * (1.0 + 1e-12))
      throw std::invalid_argument("estimate_Cf: grid under-resolved; grid_step <= " +
                                  std::to_string(limit) + " required");
  }

  const SpfTable spf(std::max<std::uint32_t>(f.length(), 1));
  const DirichletPolynomial g = vertical_limit(f, chi, spf);
  const auto coeffs = g.coefficients();
  const auto logs = g.log_table();

  const auto steps = static_cast<std::uint64_t>(std::ceil(T_max / grid_step - 1e-12));
  const double h = T_max / static_cast<double>(steps);

  // |f*(chi p^{-i tau})|^p = |g(i tau)|^p; fill both sides in parallel, then
  // accumulate the cumulative trapezoid serially.
  std::vector<double> vplus(steps + 1), vminus(steps + 1);
  const std::uint64_t nodes_per_chunk = 4096;
  const std::uint64_t n_chunks = (steps + 1 + nodes_per_chunk - 1) / nodes_per_chunk;
  for_each_chunk(n_chunks, [&](std::size_t c) {
    const std::uint64_t i_begin = c * nodes_per_chunk;
    const std::uint64_t i_end = std::min<std::uint64_t>(steps + 1, i_begin + nodes_per_chunk);
    for (std::uint64_t i = i_begin; i < i_end; ++i) {
      const double tau = static_cast<double>(i) * h;
      vplus[i] = pow_from_abs2(std::norm(detail::boundary_sum(coeffs, logs, tau)), p);
      vminus[i] =
          i == 0 ? vplus[0]
                 : pow_from_abs2(std::norm(detail::boundary_sum(coeffs, logs, -tau)), p);
    }
  });

  double C = 0.0;
  KahanSum phi_plus, phi_minus;
  for (std::uint64_t i = 1; i <= steps; ++i) {
    phi_plus.add(0.5 * h * (vplus[i - 1] + vplus[i]));
    phi_minus.add(0.5 * h * (vminus[i - 1] + vminus[i]));
    const double T = static_cast<double>(i) * h;
    C = std::max(C, std::max(phi_plus.value(), phi_minus.value()) / (1.0 + T));
  }

  FlowGrowthCertificate cert;
  cert.C = C;
  cert.p = p;
  cert.T_max = T_max;
  cert.grid_step = h;
  cert.chi_ref = CharacterRef::of(chi);
  return cert;
}

ConvexityReport convexity_report(const DirichletPolynomial& f, double p,
                                 std::span<const double> sigma_grid,
                                 std::uint64_t mc_samples, std::uint64_t seed) {
  coverage::mark(coverage::Op::means_convexity_report);
  require_p(p);
  if (sigma_grid.size() < 3)
    throw std::invalid_argument("convexity_report: grid needs at least 3 points");
  for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
    if (!(sigma_grid[i] > 0.0) || !std::isfinite(sigma_grid[i]))
      throw std::invalid_argument("convexity_report: grid must be positive");
    if (i > 0 && !(sigma_grid[i] > sigma_grid[i - 1]))
      throw std::invalid_argument("convexity_report: grid must be increasing");
  }

  const std::size_t n = sigma_grid.size();
  ConvexityReport report;
  report.p = p;
  report.sigma.assign(sigma_grid.begin(), sigma_grid.end());
  report.log_mean.resize(n);
  report.log_stderr.assign(n, 0.0);

  // Even p up to 8 has a closed form through Dirichlet powers: the p-mean of
  // f is the 2-mean of f^(p/2).
  const bool even_p = p == 2.0 || p == 4.0 || p == 6.0 || p == 8.0;
  const double power_degree = std::pow(static_cast<double>(f.length()), p / 2.0);
  report.exact_route = even_p && power_degree <= 4e6;

  if (report.exact_route) {
    DirichletPolynomial fp = f;
    for (int i = 1; i < static_cast<int>(p / 2.0); ++i) fp = dirichlet_product(fp, f);
    for (std::size_t i = 0; i < n; ++i) {
      const double mean = exact_mean_2(fp, sigma_grid[i]).value;
      if (!(mean > 0.0))
        throw std::invalid_argument("convexity_report: zero polynomial has no log-means");
      report.log_mean[i] = std::log(mean) / p;
    }
  } else {
    if (mc_samples < 100)
      throw std::invalid_argument("convexity_report: needs at least 100 samples");
    for (std::size_t i = 0; i < n; ++i) {
      const auto est = mc_torus_mean(translate_h(f, sigma_grid[i]), p, mc_samples,
                                     rng::derive(seed, rng::stream_convexity, i));
      if (!(est.value > 0.0))
        throw std::invalid_argument("convexity_report: vanishing Monte Carlo mean");
      report.log_mean[i] = std::log(est.value) / p;
      report.log_stderr[i] = est.error / (p * est.value);
    }
  }

  const double floor = 1e-10;
  report.first_difference.resize(n - 1);
  report.diff_tolerance.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    report.first_difference[i] = report.log_mean[i + 1] - report.log_mean[i];
    const double se = std::hypot(report.log_stderr[i], report.log_stderr[i + 1]);
    report.diff_tolerance[i] = std::max(4.0 * se, floor);
  }
  report.convexity_defect.resize(n - 2);
  report.defect_tolerance.resize(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double w = (sigma_grid[i + 1] - sigma_grid[i]) / (sigma_grid[i + 1] - sigma_grid[i - 1]);
    report.convexity_defect[i - 1] =
        report.log_mean[i] - (w * report.log_mean[i - 1] + (1.0 - w) * report.log_mean[i + 1]);
    const double se =
        std::sqrt(report.log_stderr[i] * report.log_stderr[i] +
                  w * w * report.log_stderr[i - 1] * report.log_stderr[i - 1] +
                  (1.0 - w) * (1.0 - w) * report.log_stderr[i + 1] * report.log_stderr[i + 1]);
    report.defect_tolerance[i - 1] = std::max(4.0 * se, floor);
  }

  report.decreasing_ok = true;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (report.first_difference[i] > report.diff_tolerance[i]) report.decreasing_ok = false;
  report.convex_ok = true;
  for (std::size_t i = 0; i + 2 < n; ++i)
    if (report.convexity_defect[i] > report.defect_tolerance[i]) report.convex_ok = false;
  return report;
}

MeanEstimate translate_defect(const DirichletPolynomial& f, double p, double sigma,
                              std::uint64_t mc_samples, std::uint64_t seed) {
  coverage::mark(coverage::Op::means_translate_defect);
  require_p(p);
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("translate_defect: requires sigma > 0");

  // f - H_sigma f has coefficients a_n (1 - n^{-sigma}).
  std::vector<std::complex<double>> diff(f.coefficients().begin(), f.coefficients().end());
  const auto logs = f.log_table();
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] *= -std::expm1(-sigma * logs[i]);
  const DirichletPolynomial d(std::move(diff));

  MeanEstimate est;
  est.p = p;
  est.sigma = sigma;
  est.scale = MeanScale::p_root;
  if (p == 2.0) {
    est.method = MeanMethod::exact2;
    est.value = std::sqrt(d.abs2_sum());
    est.error = 0.0;
    est.horizon_or_samples = 0.0;
    return est;
  }
  const auto mc = mc_torus_mean(d, p, mc_samples, rng::derive(seed, rng::stream_defect, 0));
  est.method = MeanMethod::monte_carlo;
  est.horizon_or_samples = mc.horizon_or_samples;
  if (mc.value <= 0.0) {
    est.value = 0.0;
    est.error = 0.0;
  } else {
    est.value = std::pow(mc.value, 1.0 / p);
    est.error = mc.error * std::pow(mc.value, 1.0 / p - 1.0) / p;
  }
  return est;
}

}  // namespace hpd
