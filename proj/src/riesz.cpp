#include "hpdirichlet/riesz.hpp"

#include "hpdirichlet/coverage.hpp"
#include "hpdirichlet/numeric.hpp"
#include "hpdirichlet/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hpd {

namespace {

constexpr double pi = std::numbers::pi;

struct LineQuadrature {
  std::complex<double> value;
  double abs_mass = 0.0;
  double refinement_gap = 0.0;  // |finest - previous|
};

// Composite Simpson over [-Y, Y] with symmetric +-y pairing. M intervals per
// side (kept even so interior weights are mirror-symmetric); refined by
// doubling until the value settles or max_refine passes.
template <typename F>
LineQuadrature simpson_symmetric(const F& g, double Y, double h0, int max_refine,
                                 double settle_tol) {
  auto pass = [&](std::uint64_t M) {
    const double h = Y / static_cast<double>(M);
    const std::uint64_t pairs_per_chunk = 8192;
    const std::uint64_t n_chunks = (M - 1 + pairs_per_chunk - 1) / pairs_per_chunk;
    struct Partial {
      std::complex<double> sum;
      double mass = 0.0;
    };
    std::vector<Partial> parts(std::max<std::uint64_t>(n_chunks, 1));
    for_each_chunk(parts.size(), [&](std::size_t c) {
      KahanComplexSum sum;
      KahanSum mass;
      const std::uint64_t i_begin = 1 + c * pairs_per_chunk;
      const std::uint64_t i_end = std::min<std::uint64_t>(M, i_begin + pairs_per_chunk);
      for (std::uint64_t i = i_begin; i < i_end; ++i) {
        const double w = (i % 2 == 1) ? 4.0 : 2.0;
        const double y = static_cast<double>(i) * h;
        const std::complex<double> pair = g(y) + g(-y);
        sum.add(w * pair);
        mass.add(w * std::abs(pair));
      }
      parts[c] = Partial{sum.value(), mass.value()};
    });
    KahanComplexSum sum;
    KahanSum mass;
    const std::complex<double> center = g(0.0);
    sum.add(2.0 * center);
    mass.add(2.0 * std::abs(center));
    for (const auto& part : parts) {
      sum.add(part.sum);
      mass.add(part.mass);
    }
    const std::complex<double> ends = g(Y) + g(-Y);
    sum.add(ends);
    mass.add(std::abs(ends));
    return std::pair{sum.value() * (h / 3.0), mass.value() * (h / 3.0)};
  };

  std::uint64_t M = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::ceil(Y / h0)));
  M += M % 2;
  auto [value, mass] = pass(M);
  double gap = std::abs(value);
  for (int r = 0; r < max_refine; ++r) {
    M *= 2;
    auto [refined, refined_mass] = pass(M);
    gap = std::abs(refined - value);
    value = refined;
    mass = refined_mass;
    if (gap <= settle_tol * (std::abs(value) + mass)) break;
  }
  return LineQuadrature{value, mass, gap};
}

}  // namespace

RieszParams::RieszParams(std::uint32_t N_, double k_) : N(N_), k(k_) {
  if (N < 2) throw std::invalid_argument("RieszParams: N must be >= 2");
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("RieszParams: k must be > 0");
}

std::complex<double> riesz_mean(const DirichletPolynomial& f, const RieszParams& params,
                                std::complex<double> s) {
  coverage::mark(coverage::Op::riesz_mean);
  const double ln_n = std::log(static_cast<double>(params.N));
  const auto coeffs = f.coefficients();
  const auto logs = f.log_table();
  const std::uint32_t cut = std::min<std::uint32_t>(params.N, f.length());
  KahanComplexSum sum;
  for (std::uint32_t n = 1; n <= cut; ++n) {
    if (n == params.N) continue;  // weight exactly 0
    const double weight = std::pow(1.0 - logs[n - 1] / ln_n, params.k);
    sum.add(coeffs[n - 1] * (weight * std::exp(-s.real() * logs[n - 1])) *
            cis(-s.imag() * logs[n - 1]));
  }
  return sum.value();
}

ContourValue riesz_contour(const DirichletPolynomial& f, const RieszParams& params,
                           std::complex<double> s) {
  coverage::mark(coverage::Op::riesz_contour);
  if (!(params.k > 1.0))
    throw std::domain_error("riesz_contour: needs k > 1 for a convergent tail");
  if (!(s.real() > 0.0))
    throw std::domain_error("riesz_contour: needs sigma > 0");
  const double x = params.abscissa();
  if (!(x > 0.0)) throw std::invalid_argument("riesz_contour: contour abscissa must be > 0");

  const double k = params.k;
  const double ln_n = std::log(static_cast<double>(params.N));
  const double gamma = std::tgamma(k + 1.0);

  // Uniform bound on |f| along the contour (triangle inequality at the
  // shifted abscissa); drives both the auto cutoff and the tail bound.
  const auto logs = f.log_table();
  const auto coeffs = f.coefficients();
  KahanSum a_line;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    a_line.add(std::abs(coeffs[i]) * std::exp(-(s.real() + x / ln_n) * logs[i]));
  const double A = a_line.value();

  double Y = params.y_cutoff;
  if (!(Y > 0.0)) {
    // tail / A <= 1e-7  with tail = Gamma(k+1) A e^x / (pi k Y^k)
    Y = std::pow(gamma * std::exp(x) * 1e7 / (pi * k), 1.0 / k);
    Y = std::clamp(Y, 50.0, 20000.0);
  }

  auto integrand = [&](double y) {
    const std::complex<double> z{x, y};
    const std::complex<double> shifted = s + z / ln_n;
    const std::complex<double> kernel =
        std::exp(x) * cis(y) * std::exp(-(k + 1.0) * std::log(z));
    return detail::eval_sum(coeffs, logs, shifted) * kernel;
  };
  const auto line = simpson_symmetric(integrand, Y, 0.1, 3, 1e-11);

  ContourValue out;
  out.value = gamma * line.value / (2.0 * pi);
  out.tail_bound = gamma * A * std::exp(x) / (pi * k * std::pow(Y, k));
  out.quad_error = gamma * (4.0 * line.refinement_gap / 15.0 + 1e-13 * line.abs_mass) / (2.0 * pi);
  return out;
}

double hankel_residual(double u, double k, double x, double y_cutoff) {
  coverage::mark(coverage::Op::riesz_hankel_check);
  if (!(x > 0.0)) throw std::invalid_argument("hankel_residual: x must be > 0");
  if (!(k > 1.0))
    throw std::domain_error("hankel_residual: needs k > 1 for truncation control");
  if (!(y_cutoff > 0.0)) throw std::invalid_argument("hankel_residual: cutoff must be > 0");

  const double gamma = std::tgamma(k + 1.0);
  auto integrand = [&](double y) {
    const std::complex<double> z{x, y};
    return std::exp(u * x) * cis(u * y) * std::exp(-(k + 1.0) * std::log(z));
  };
  const double h0 = std::min(0.1, 0.3 / std::max(1.0, std::fabs(u)));
  const auto line = simpson_symmetric(integrand, y_cutoff, h0, 3, 1e-12);
  const std::complex<double> value = gamma * line.value / (2.0 * pi);
  const double target = u >= 0.0 ? std::pow(u, k) : 0.0;
  return std::abs(value - target);
}

std::vector<double> convergence_study(const DirichletPolynomial& f, double k,
                                      std::complex<double> s,
                                      std::span<const std::uint32_t> N_list) {
  coverage::mark(coverage::Op::riesz_convergence_study);
  for (std::size_t i = 1; i < N_list.size(); ++i)
    if (N_list[i] <= N_list[i - 1])
      throw std::invalid_argument("convergence_study: N_list must be increasing");
  const std::complex<double> truth = eval(f, s);
  std::vector<double> errors;
  errors.reserve(N_list.size());
  for (const std::uint32_t N : N_list)
    errors.push_back(std::abs(riesz_mean(f, RieszParams(N, k), s) - truth));
  return errors;
}

}  // namespace hpd
