#include "hpdirichlet/means.hpp"

#include "hpdirichlet/numeric.hpp"
#include "hpdirichlet/rng.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

using namespace hpd;
using cplx = std::complex<double>;

namespace {

DirichletPolynomial random_poly(std::uint32_t n, std::uint64_t seed, double decay = 0.6) {
  std::vector<cplx> coeffs(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    double g0, g1;
    rng::normal_pair(seed, 79, i, g0, g1);
    coeffs[i] = cplx{g0, g1} * (std::pow(static_cast<double>(i + 1), -decay) / std::numbers::sqrt2);
  }
  return DirichletPolynomial(coeffs);
}

// Test-side closed form for the cumulative integral int_0^T |g(i tau)|^2 dtau,
// independent of the trapezoid path inside estimate_Cf.
double exact_cumulative_2(const DirichletPolynomial& g, double T) {
  const auto coeffs = g.coefficients();
  const auto logs = g.log_table();
  long double total = 0.0L;
  for (std::size_t m = 0; m < coeffs.size(); ++m) total += std::norm(coeffs[m]) * T;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    for (std::size_t n = m + 1; n < coeffs.size(); ++n) {
      const double omega = logs[m] - logs[n];  // frequency of e^{-i tau (ln m - ln n)}
      const cplx c = coeffs[m] * std::conj(coeffs[n]);
      // int_0^T e^{-i omega tau} dtau = (1 - e^{-i omega T}) / (i omega)
      const cplx integral = (1.0 - std::polar(1.0, -omega * T)) / cplx{0.0, omega};
      total += 2.0 * (c * integral).real();
    }
  }
  return static_cast<double>(total);
}

const DirichletPolynomial one_plus_half{std::vector<cplx>{1.0, 1.0}};  // 1 + 2^{-s}

}  // namespace

TEST_SUITE("means") {

TEST_CASE("exact second moments") {
  CHECK(exact_mean_2(DirichletPolynomial::unit_coefficient(1, 1.0), 3.0).value == 1.0);
  CHECK(exact_mean_2(one_plus_half, 0.0).value == 2.0);
  CHECK(std::abs(exact_mean_2(one_plus_half, 0.5).value - 1.5) < 1e-15);
  CHECK(exact_mean_2(one_plus_half, 0.0).error == 0.0);
}

TEST_CASE("finite-horizon second moment") {
  SUBCASE("constant polynomial is 1 for every horizon") {
    const auto f = DirichletPolynomial::unit_coefficient(1, 1.0);
    for (const double T : {0.5, 3.0, 1000.0}) CHECK(exact_finite_mean_2(f, 0.0, T) == 1.0);
  }
  SUBCASE("antiderivative oracle for 1 + 2^{-s}") {
    // (1/2T) int |1+2^{-it}|^2 dt = 2 + 2 sin(T ln 2) / (T ln 2)
    for (const double T : {0.7, 5.0, 42.0, 300.0}) {
      const double expected = 2.0 + 2.0 * std::sin(T * std::log(2.0)) / (T * std::log(2.0));
      CHECK(std::abs(exact_finite_mean_2(one_plus_half, 0.0, T) - expected) < 1e-13);
    }
  }
  SUBCASE("converges to the exact mean within the pair bound") {
    const auto f = random_poly(30, 3);
    const double target = exact_mean_2(f, 0.2).value;
    for (const double T : {100.0, 1000.0, 10000.0}) {
      // term-by-term: |sinc(T ln(m/n))| <= 1 / (T |ln(m/n)|)
      double bound = 0.0;
      for (std::uint32_t m = 1; m <= 30; ++m)
        for (std::uint32_t n = m + 1; n <= 30; ++n)
          bound += 2.0 * std::abs(f.coefficient(m)) * std::abs(f.coefficient(n)) *
                   std::pow(static_cast<double>(m) * n, -0.2) /
                   (T * std::log(static_cast<double>(n) / m));
      CHECK(std::abs(exact_finite_mean_2(f, 0.2, T) - target) <= bound);
    }
  }
}

TEST_CASE("time averages by composite Simpson") {
  SUBCASE("constant integrand") {
    const auto f = DirichletPolynomial::unit_coefficient(1, cplx{0.0, 2.0});
    for (const double p : {1.0, 2.0, 3.0}) {
      const auto est = time_mean(f, 0.0, p, 50.0, 64);
      CHECK(std::abs(est.value - std::pow(2.0, p)) < 1e-12);
    }
  }
  SUBCASE("p = 2 agrees with the closed form within the reported bound") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const auto f = random_poly(8 + 4 * (seed % 8), seed);
      const double sigma = 0.5 * rng::uniform01(seed, 6, 0);
      const double T = 50.0 + 450.0 * rng::uniform01(seed, 6, 1);
      const auto steps = 8 * std::max<std::uint64_t>(time_mean_min_steps(f, T), 16);
      const auto est = time_mean(f, sigma, 2.0, T, steps);
      const double oracle = exact_finite_mean_2(f, sigma, T);
      CHECK(std::abs(est.value - oracle) <= est.error);
      CHECK(std::abs(est.value - oracle) <= 1e-8 * std::abs(oracle));
    }
  }
  SUBCASE("fourth power of 1 + 2^{-s} averages to 6") {
    const auto steps = 2 * std::max<std::uint64_t>(time_mean_min_steps(one_plus_half, 1e4), 16);
    const auto est = time_mean(one_plus_half, 0.0, 4.0, 1e4, steps);
    CHECK(std::abs(est.value - 6.0) < 0.01);
  }
  SUBCASE("p = 4 against the Dirichlet-square closed form") {
    // |f(sigma+it)|^4 = |f^2(sigma+it)|^2, so the fourth-power average is the
    // finite-horizon second moment of the squared polynomial.
    const auto f = random_poly(20, 9);
    const auto sq = dirichlet_product(f, f);
    const auto steps = 4 * std::max<std::uint64_t>(time_mean_min_steps(f, 3000.0), 16);
    const auto est = time_mean(f, 0.15, 4.0, 3000.0, steps);
    const double finite4 = exact_finite_mean_2(sq, 0.15, 3000.0);
    CHECK(std::abs(est.value - finite4) < 1e-6 * std::max(1.0, finite4));
  }
  SUBCASE("under-resolved grids are rejected") {
    const auto f = random_poly(32, 2);
    const auto min_steps = time_mean_min_steps(f, 100.0);
    CHECK_THROWS_AS((void)time_mean(f, 0.0, 2.0, 100.0, min_steps / 2), std::invalid_argument);
    CHECK_THROWS_AS((void)time_mean(f, 0.0, 0.5, 100.0, 10 * min_steps), std::invalid_argument);
  }
}

TEST_CASE("monte carlo torus means") {
  SUBCASE("constant polynomial has zero spread") {
    const auto est = mc_torus_mean(DirichletPolynomial::unit_coefficient(1, 1.0), 3.0, 500, 1);
    CHECK(est.value == 1.0);
    CHECK(est.error == 0.0);
  }
  SUBCASE("p = 2 recovers the coefficient sum within 4 stderr") {
    int hits = 0;
    const int reps = 30;
    for (int r = 0; r < reps; ++r) {
      const auto f = random_poly(40, 1000 + r);
      const auto est = mc_torus_mean(f, 2.0, 4000, 31 + r);
      if (std::abs(est.value - f.abs2_sum()) <= 4.0 * est.error) ++hits;
    }
    CHECK(hits >= static_cast<int>(0.95 * reps));
  }
  SUBCASE("p = 1 mean of |1 + z| is 4/pi") {
    const auto est = mc_torus_mean(one_plus_half, 1.0, 100000, 7);
    CHECK(std::abs(est.value - 4.0 / std::numbers::pi) <= 4.0 * est.error);
    CHECK(est.error < 0.01);
  }
  SUBCASE("rejects tiny sample counts and p < 1") {
    CHECK_THROWS_AS((void)mc_torus_mean(one_plus_half, 2.0, 99, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)mc_torus_mean(one_plus_half, 0.9, 1000, 1), std::invalid_argument);
  }
}

TEST_CASE("flow growth certificates") {
  SUBCASE("constant polynomial saturates at T/(1+T)") {
    const auto f = DirichletPolynomial::unit_coefficient(1, 1.0);
    const auto chi = sample_haar(1, 3);
    const auto cert = estimate_Cf(f, chi, 2.0, 100.0, 0.25);
    CHECK(std::abs(cert.C - 100.0 / 101.0) < 1e-9);
  }
  SUBCASE("homogeneous in the coefficient scale") {
    const auto f = random_poly(24, 4);
    std::vector<cplx> scaled(f.coefficients().begin(), f.coefficients().end());
    for (auto& a : scaled) a *= 3.0;
    const auto chi = sample_haar(9, 5);
    const auto c1 = estimate_Cf(f, chi, 2.0, 50.0, 0.05);
    const auto c2 = estimate_Cf(DirichletPolynomial(scaled), chi, 2.0, 50.0, 0.05);
    CHECK(std::abs(c2.C - 9.0 * c1.C) < 1e-9 * std::max(1.0, c2.C));
  }
  SUBCASE("grid suprema dominate the closed-form cumulative off the grid") {
    const auto f = random_poly(24, 6);
    const auto chi = sample_haar(9, 7);
    const double T_max = 1000.0;
    const auto cert = estimate_Cf(f, chi, 2.0, T_max, 0.05);
    const SpfTable spf(24);
    const auto g = vertical_limit(f, chi, spf);
    const double A = f.abs_sum();
    const double q = 1.1 * cert.grid_step * cert.grid_step * std::log(24.0) * A * A / 6.0;
    for (int i = 0; i < 20; ++i) {
      const double T = 0.5 + (T_max - 0.5) * rng::uniform01(8, 2, i);
      const double oracle = exact_cumulative_2(g, T);
      CHECK(oracle <= (cert.C * (1.0 + T)) * (1.0 + cert.grid_step) + q + 1e-9);
    }
  }
  SUBCASE("rejects under-resolved grids") {
    const auto f = random_poly(24, 4);
    const auto chi = sample_haar(9, 5);
    CHECK_THROWS_AS((void)estimate_Cf(f, chi, 2.0, 100.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("convexity reports") {
  const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  SUBCASE("exact route for p = 2 is decreasing and convex") {
    const auto f = random_poly(40, 11);
    const auto report = convexity_report(f, 2.0, grid, 1000, 1);
    CHECK(report.exact_route);
    CHECK(report.decreasing_ok);
    CHECK(report.convex_ok);
    for (const double d : report.first_difference) CHECK(d < 0.0);
  }
  SUBCASE("exact route for p = 4 via the Dirichlet square") {
    const auto f = random_poly(30, 12);
    const auto report = convexity_report(f, 4.0, grid, 1000, 1);
    CHECK(report.exact_route);
    CHECK(report.decreasing_ok);
    CHECK(report.convex_ok);
  }
  SUBCASE("constant polynomial is flat") {
    const auto report =
        convexity_report(DirichletPolynomial::unit_coefficient(1, 1.0), 2.0, grid, 1000, 1);
    for (const double d : report.first_difference) CHECK(d == 0.0);
    for (const double d : report.convexity_defect) CHECK(d == 0.0);
  }
  SUBCASE("monte carlo route for p = 1") {
    const auto report = convexity_report(one_plus_half, 1.0, grid, 20000, 2);
    CHECK_FALSE(report.exact_route);
    CHECK(report.decreasing_ok);
    CHECK(report.convex_ok);
  }
  SUBCASE("validates the grid") {
    const auto f = random_poly(10, 13);
    CHECK_THROWS_AS((void)convexity_report(f, 2.0, std::vector<double>{0.1, 0.2}, 1000, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        (void)convexity_report(f, 2.0, std::vector<double>{0.3, 0.2, 0.4}, 1000, 1),
        std::invalid_argument);
  }
}

TEST_CASE("translation defects") {
  SUBCASE("constant polynomial never moves") {
    const auto d = translate_defect(DirichletPolynomial::unit_coefficient(1, 1.0), 2.0, 0.7);
    CHECK(d.value == 0.0);
  }
  SUBCASE("single n = 2 coefficient at sigma = 1") {
    const auto d = translate_defect(DirichletPolynomial::unit_coefficient(2, 1.0), 2.0, 1.0);
    CHECK(std::abs(d.value - 0.5) < 1e-14);
  }
  SUBCASE("decreases to zero along sigma = 2^{-k}") {
    const auto f = random_poly(32, 14);
    double previous = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 8; ++k) {
      const auto d = translate_defect(f, 2.0, std::pow(2.0, -k));
      CHECK(d.value < previous);
      previous = d.value;
    }
    CHECK(previous < 0.01 * f.abs_sum());
  }
}

TEST_CASE("averaged translation estimate") {
  // (1/2T int |f(s+z) - f(s)|^p)^(1/p) <= 3 C^(1/p) |z| / sigma^2 (1+sigma+|z|)^(1/p+1)
  const auto f = random_poly(24, 15);
  const cplx z{0.25, 0.4};
  for (const double p : {1.0, 2.0}) {
    for (const double sigma : {0.3, 0.8}) {
      const double T = 200.0;
      std::vector<cplx> delta(f.coefficients().begin(), f.coefficients().end());
      for (std::uint32_t n = 1; n <= f.length(); ++n)
        delta[n - 1] *= std::exp(-z.real() * f.log_table()[n - 1]) *
                            std::polar(1.0, -z.imag() * f.log_table()[n - 1]) -
                        1.0;
      const DirichletPolynomial dpoly(delta);
      double lhs_p;
      if (p == 2.0) {
        lhs_p = exact_finite_mean_2(dpoly, sigma, T);
      } else {
        lhs_p = time_mean(dpoly, sigma, p, T,
                          4 * std::max<std::uint64_t>(time_mean_min_steps(dpoly, T), 16))
                    .value;
      }
      double c_hat = 0.0;
      for (const double sg : {0.05, 0.2, 0.8}) {
        for (const double Tg : {1.0, 30.0, 1000.0}) {
          const double mean =
              p == 2.0 ? exact_finite_mean_2(f, sg, Tg)
                       : time_mean(f, sg, p, Tg,
                                   2 * std::max<std::uint64_t>(time_mean_min_steps(f, Tg), 16))
                             .value;
          c_hat = std::max(c_hat, mean);
        }
      }
      const double rhs = 3.0 * std::pow(c_hat, 1.0 / p) * std::abs(z) / (sigma * sigma) *
                         std::pow(1.0 + sigma + std::abs(z), 1.0 / p + 1.0);
      CHECK(std::pow(lhs_p, 1.0 / p) <= rhs);
    }
  }
}

}  // TEST_SUITE
