#include "hpdirichlet/characters.hpp"

#include "hpdirichlet/numeric.hpp"
#include "hpdirichlet/rng.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace hpd;
using cplx = std::complex<double>;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

DirichletPolynomial random_poly(std::uint32_t n, std::uint64_t seed) {
  std::vector<cplx> coeffs(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    double g0, g1;
    rng::normal_pair(seed, 78, i, g0, g1);
    coeffs[i] = cplx{g0, g1} * std::pow(static_cast<double>(i + 1), -0.5);
  }
  return DirichletPolynomial(coeffs);
}
}  // namespace

TEST_SUITE("characters") {

TEST_CASE("haar sampling is a pure function of (seed, j)") {
  const auto a = sample_haar(8, 42);
  const auto b = sample_haar(8, 42);
  CHECK(a.phases().size() == 8);
  for (std::uint32_t j = 0; j < 8; ++j) {
    CHECK(a.phase(j) == b.phase(j));
    CHECK(a.phase(j) >= 0.0);
    CHECK(a.phase(j) < two_pi);
  }
  // longer characters keep the earlier phases
  const auto c = sample_haar(20, 42);
  for (std::uint32_t j = 0; j < 8; ++j) CHECK(c.phase(j) == a.phase(j));
  // different seeds differ
  const auto d = sample_haar(8, 43);
  bool any_diff = false;
  for (std::uint32_t j = 0; j < 8; ++j) any_diff |= d.phase(j) != a.phase(j);
  CHECK(any_diff);
  CHECK_THROWS_AS(sample_haar(0, 1), std::invalid_argument);
}

TEST_CASE("character evaluation") {
  const SpfTable spf(64);
  SUBCASE("n = 1 is always 1") {
    const auto chi = sample_haar(4, 7);
    CHECK(char_eval(chi, 1, spf) == cplx{1.0, 0.0});
  }
  SUBCASE("trivial character maps everything to 1") {
    const Character one(std::vector<double>(18, 0.0));  // pi(64) = 18
    for (std::uint32_t n = 1; n <= 60; ++n)
      CHECK(std::abs(char_eval(one, n, spf) - cplx{1.0, 0.0}) < 1e-15);
  }
  SUBCASE("theta_1 = pi/2 squares to -1 at n = 4") {
    const Character chi(std::vector<double>{std::numbers::pi / 2.0});
    CHECK(std::abs(char_eval(chi, 4, spf) - cplx{-1.0, 0.0}) < 1e-15);
  }
  SUBCASE("exactly unimodular") {
    const auto chi = sample_haar(18, 99);
    for (std::uint32_t n = 1; n <= 64; ++n)
      CHECK(std::abs(std::abs(char_eval(chi, n, spf)) - 1.0) < 4e-16);
  }
  SUBCASE("completely multiplicative") {
    const auto chi = sample_haar(18, 100);
    for (std::uint64_t k = 0; k < 30; ++k) {
      const std::uint32_t m = 2 + static_cast<std::uint32_t>((k * 2654435761u) % 7);
      const std::uint32_t n = 2 + static_cast<std::uint32_t>((k * 40503u) % 6);
      const auto lhs = char_eval(chi, m * n, spf);
      const auto rhs = char_eval(chi, m, spf) * char_eval(chi, n, spf);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
  SUBCASE("signals insufficient length") {
    const Character shorty(std::vector<double>{0.1});  // knows only p = 2
    CHECK_THROWS_AS((void)char_eval(shorty, 3, spf), InsufficientCharacterLength);
  }
}

TEST_CASE("kronecker twist") {
  const SpfTable spf(64);
  const auto chi = sample_haar(18, 5);
  SUBCASE("tau = 0 is the identity") {
    const auto same = kronecker_twist(chi, 0.0);
    for (std::uint32_t j = 0; j < chi.length(); ++j) CHECK(same.phase(j) == chi.phase(j));
  }
  SUBCASE("group action composes") {
    const auto a = kronecker_twist(kronecker_twist(chi, 1.3), -0.4);
    const auto b = kronecker_twist(chi, 0.9);
    for (std::uint32_t j = 0; j < chi.length(); ++j)
      CHECK(std::abs(cis(a.phase(j)) - cis(b.phase(j))) < 1e-12);
  }
  SUBCASE("twist at n = 60 against the factor-by-factor product") {
    // 60 = 2^2 * 3 * 5
    const double tau = 1.7;
    const auto lhs = char_eval(kronecker_twist(chi, tau), 60, spf);
    const cplx factor =
        cis(-tau * (2.0 * std::log(2.0) + std::log(3.0) + std::log(5.0)));
    const cplx rhs = char_eval(chi, 60, spf) * factor;
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  SUBCASE("flow identity over all n <= 64") {
    for (const double tau : {0.3, -2.8, 11.0}) {
      const auto twisted = kronecker_twist(chi, tau);
      for (std::uint32_t n = 1; n <= 64; ++n) {
        const auto lhs = char_eval(twisted, n, spf);
        const auto rhs =
            char_eval(chi, n, spf) * cis(-tau * std::log(static_cast<double>(n)));
        CHECK(std::abs(lhs - rhs) < 1e-10);
      }
    }
  }
}

TEST_CASE("vertical limit polynomials") {
  const SpfTable spf(48);
  const auto f = random_poly(48, 17);
  const auto chi = sample_haar(15, 23);  // pi(48) = 15
  SUBCASE("trivial character keeps f") {
    const Character one(std::vector<double>(15, 0.0));
    const auto g = vertical_limit(f, one, spf);
    for (std::uint32_t n = 1; n <= 48; ++n)
      CHECK(std::abs(g.coefficient(n) - f.coefficient(n)) < 1e-15);
  }
  SUBCASE("coefficient moduli survive the twist") {
    const auto g = vertical_limit(f, chi, spf);
    CHECK(std::abs(g.abs2_sum() - f.abs2_sum()) < 1e-13 * std::max(1.0, f.abs2_sum()));
  }
  SUBCASE("twisting the character shifts the evaluation") {
    const double tau = 2.6;
    const auto lhs = vertical_limit(f, kronecker_twist(chi, tau), spf);
    const auto rhs = vertical_limit(f, chi, spf);
    for (int i = 0; i < 6; ++i) {
      const cplx s{0.4 + 0.2 * i, -1.0 + 0.7 * i};
      CHECK(std::abs(eval(lhs, s) - eval(rhs, s + cplx{0.0, tau})) <
            1e-10 * std::max(1.0, f.abs_sum()));
    }
  }
  SUBCASE("character shorter than pi(N) is rejected") {
    const auto tiny = sample_haar(3, 1);
    CHECK_THROWS_AS((void)vertical_limit(f, tiny, spf), InsufficientCharacterLength);
  }
}

TEST_CASE("boundary evaluation") {
  const SpfTable spf(48);
  const auto f = random_poly(48, 29);
  SUBCASE("trivial character sums the coefficients") {
    const Character one(std::vector<double>(15, 0.0));
    cplx sum = 0.0;
    for (std::uint32_t n = 1; n <= 48; ++n) sum += f.coefficient(n);
    CHECK(std::abs(boundary_eval(f, one, spf) - sum) < 1e-12);
  }
  SUBCASE("constant polynomial is 1 for every character") {
    const auto c = DirichletPolynomial::unit_coefficient(1, 1.0);
    const SpfTable spf1(2);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
      CHECK(boundary_eval(c, sample_haar(4, seed), spf1) == cplx{1.0, 0.0});
  }
  SUBCASE("twisted boundary equals the vertical limit on the line") {
    const auto chi = sample_haar(15, 31);
    const auto g = vertical_limit(f, chi, spf);
    for (const double tau : {0.0, 1.9, -7.3}) {
      const auto lhs = boundary_eval(f, kronecker_twist(chi, tau), spf);
      const auto rhs = eval(g, cplx{0.0, tau});
      CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, f.abs_sum()));
    }
  }
}

TEST_CASE("haar moments vanish at fixed n >= 2") {
  const SpfTable spf(16);
  const std::size_t M = 20000;
  for (const std::uint32_t n : {2u, 6u, 12u}) {
    cplx mean = 0.0;
    for (std::size_t k = 0; k < M; ++k)
      mean += char_eval(sample_haar(6, rng::derive(555, 1, k)), n, spf);
    mean /= static_cast<double>(M);
    CHECK(std::abs(mean) <= 5.0 / std::sqrt(static_cast<double>(M)));
  }
}

TEST_CASE("json round trip") {
  const auto chi = sample_haar(9, 77);
  const auto back = Character::from_json(chi.to_json());
  REQUIRE(back.length() == chi.length());
  for (std::uint32_t j = 0; j < 9; ++j) CHECK(back.phase(j) == chi.phase(j));
  REQUIRE(back.seed().has_value());
  CHECK(*back.seed() == 77);
  CHECK_THROWS_AS(Character::from_json(R"({"J":2,"phases":[0.0]})"), std::invalid_argument);
}


TEST_CASE("first coordinate moment over many seeds") {
  // E[chi_1] = 0; the empirical mean over 1e5 seeds stays within 4/sqrt(M),
  // and |chi_1|^2 is unimodular up to rounding.
  const std::size_t M = 100000;
  cplx mean = 0.0;
  double norm_mean = 0.0;
  for (std::size_t k = 0; k < M; ++k) {
    const auto chi = sample_haar(1, rng::derive(777, 2, k));
    const cplx value = cis(chi.phase(0));
    mean += value;
    norm_mean += std::norm(value);
  }
  mean /= static_cast<double>(M);
  norm_mean /= static_cast<double>(M);
  CHECK(std::abs(mean) <= 4.0 / std::sqrt(static_cast<double>(M)));
  CHECK(std::abs(norm_mean - 1.0) < 1e-14);
}

}  // TEST_SUITE
