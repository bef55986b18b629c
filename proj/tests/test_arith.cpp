#include "hpdirichlet/arith.hpp"

#include "hpdirichlet/series.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

using namespace hpd;

namespace {

// Trial-division recount, independent of the sieve.
bool is_prime_trial(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("sieve basics") {
  CHECK(sieve_primes(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(sieve_primes(2) == std::vector<std::uint32_t>{2});
  CHECK_THROWS_AS(sieve_primes(1), std::invalid_argument);
}

TEST_CASE("pi(10^4) = 1229 against trial division") {
  const auto primes = sieve_primes(10000);
  std::size_t recount = 0;
  for (std::uint32_t n = 2; n <= 10000; ++n)
    if (is_prime_trial(n)) ++recount;
  CHECK(primes.size() == recount);
  CHECK(primes.size() == 1229);
  for (const auto p : primes) CHECK(is_prime_trial(p));
}

TEST_CASE("first_primes agrees with the sieve") {
  const auto first = first_primes(100);
  REQUIRE(first.size() == 100);
  const auto sieved = sieve_primes(first.back());
  REQUIRE(sieved.size() >= 100);
  for (std::size_t i = 0; i < 100; ++i) CHECK(first[i] == sieved[i]);
  CHECK(first_primes(0).empty());
  CHECK(first_primes(1) == std::vector<std::uint32_t>{2});
}

TEST_CASE("bohr lift") {
  const SpfTable spf(10000);
  SUBCASE("n = 1 has no exponents") { CHECK(spf.bohr_lift(1).exponents.empty()); }
  SUBCASE("12 = 2^2 * 3") {
    const auto idx = spf.bohr_lift(12);
    CHECK(idx.exponents == std::vector<std::uint32_t>{2, 1});
  }
  SUBCASE("reconstruction of every n up to 4096") {
    const auto primes = spf.primes();
    for (std::uint32_t n = 1; n <= 4096; ++n)
      CHECK(spf.bohr_lift(n).reconstruct(primes) == n);
  }
  SUBCASE("rejects n = 0") { CHECK_THROWS_AS(spf.bohr_lift(0), std::invalid_argument); }
}

TEST_CASE("product of the first 8 primes lifts to all ones") {
  // recompute the product by multiplication
  const auto primes8 = first_primes(8);
  std::uint64_t product = 1;
  for (const auto p : primes8) product *= p;
  CHECK(product == 9699690);
  const SpfTable spf(static_cast<std::uint32_t>(product));
  const auto idx = spf.bohr_lift(static_cast<std::uint32_t>(product));
  CHECK(idx.exponents == std::vector<std::uint32_t>(8, 1));
}

TEST_CASE("lift is completely multiplicative") {
  const SpfTable spf(10000);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::uint32_t m = 2 + static_cast<std::uint32_t>((seed * 2654435761u) % 97);
    const std::uint32_t n = 2 + static_cast<std::uint32_t>((seed * 40503u) % 89);
    const auto lm = spf.bohr_lift(m).exponents;
    const auto ln = spf.bohr_lift(n).exponents;
    auto sum = lm;
    if (ln.size() > sum.size()) sum.resize(ln.size(), 0);
    for (std::size_t j = 0; j < ln.size(); ++j) sum[j] += ln[j];
    CHECK(spf.bohr_lift(m * n).exponents == sum);
  }
}

TEST_CASE("divisor counts") {
  const SpfTable spf(10000);
  CHECK(spf.divisor_count(1) == 1);
  for (const std::uint32_t p : {2u, 3u, 97u, 9973u}) CHECK(spf.divisor_count(p) == 2);
  SUBCASE("d(12) by divisor enumeration") {
    std::uint64_t count = 0;
    for (std::uint32_t d = 1; d <= 12; ++d)
      if (12 % d == 0) ++count;
    CHECK(count == 6);
    CHECK(spf.divisor_count(12) == count);
  }
  SUBCASE("multiplicative on coprime pairs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const std::uint32_t m = 2 + static_cast<std::uint32_t>((seed * 7919u) % 80);
      const std::uint32_t n = 2 + static_cast<std::uint32_t>((seed * 104729u) % 90);
      if (std::gcd(m, n) != 1) continue;
      CHECK(spf.divisor_count(m * n) == spf.divisor_count(m) * spf.divisor_count(n));
    }
  }
  SUBCASE("rejects n = 0") { CHECK_THROWS_AS(spf.divisor_count(0), std::invalid_argument); }
}

TEST_CASE("divisor-weighted monomial sums approach the prime product") {
  // sum_{n<=N} d(n) |z(n)|^2 with z_j = p_j^{-sigma}, sigma = 0.75: partial
  // sums increase and stay below prod (1 - p^{-2 sigma})^{-2} over the primes
  // in range.
  const double sigma = 0.75;
  const std::uint32_t K = 20000;
  const SpfTable spf(K);
  double product_log = 0.0;
  for (const auto p : spf.primes())
    product_log += -2.0 * std::log1p(-std::pow(static_cast<double>(p), -2.0 * sigma));
  const double product = std::exp(product_log);

  double sum = 0.0, previous = 0.0, gap_at_1000 = 0.0;
  for (std::uint32_t n = 1; n <= K; ++n) {
    sum += static_cast<double>(spf.divisor_count(n)) * std::pow(n, -2.0 * sigma);
    CHECK(sum > previous);  // strictly increasing (every term positive)
    CHECK(sum < product);
    previous = sum;
    if (n == 1000) gap_at_1000 = product - sum;
  }
  CHECK(product - sum < gap_at_1000);
}

TEST_CASE("table bounds are enforced") {
  const SpfTable spf(50);
  CHECK_THROWS_AS(spf.bohr_lift(51), std::out_of_range);
  CHECK_THROWS_AS(spf.smallest_factor(1), std::out_of_range);
  CHECK(spf.smallest_factor(49) == 7);
  CHECK(spf.prime_index(2) == 0);
  CHECK(spf.prime_index(47) == 14);
  CHECK_THROWS_AS(spf.prime_index(48), std::invalid_argument);
}


TEST_CASE("monomial route through the lift matches direct evaluation") {
  // f(s) = sum a_n n^{-s} equals the monomial sum over z = (2^{-s}, 3^{-s}, ...)
  // with exponents from the lift, for s inside the abs-convergence range.
  const SpfTable spf(40);
  const auto primes = spf.primes();
  std::vector<std::complex<double>> coeffs(40);
  for (std::uint32_t n = 1; n <= 40; ++n)
    coeffs[n - 1] = std::complex<double>{std::cos(1.7 * n), std::sin(0.9 * n)} *
                    std::pow(static_cast<double>(n), -0.3);
  const hpd::DirichletPolynomial f(coeffs);
  for (const auto s : {std::complex<double>{0.8, 0.0}, {1.2, -3.0}, {0.6, 7.5}}) {
    std::vector<std::complex<double>> z(primes.size());
    for (std::size_t j = 0; j < primes.size(); ++j)
      z[j] = std::exp(-s * std::log(static_cast<double>(primes[j])));
    std::complex<double> monomial = 0.0;
    for (std::uint32_t n = 1; n <= 40; ++n) {
      std::complex<double> term = coeffs[n - 1];
      const auto lift = spf.bohr_lift(n);
      for (std::size_t j = 0; j < lift.exponents.size(); ++j)
        for (std::uint32_t e = 0; e < lift.exponents[j]; ++e) term *= z[j];
      monomial += term;
    }
    CHECK(std::abs(monomial - eval(f, s)) < 1e-12 * std::max(1.0, std::abs(monomial)));
  }
}

}  // TEST_SUITE
