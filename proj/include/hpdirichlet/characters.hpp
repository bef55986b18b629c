#pragma once

// Points of the infinite torus restricted to the first J primes. A character
// stores one angle per prime and every evaluation goes through exact phase
// sums, so unimodularity cannot drift no matter how many twists are applied.

#include "hpdirichlet/arith.hpp"
#include "hpdirichlet/series.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpd {

struct InsufficientCharacterLength : std::domain_error {
  explicit InsufficientCharacterLength(const std::string& what)
      : std::domain_error(what) {}
};

class Character {
public:
  Character() = default;
  // Phases are reduced into [0, 2pi); rejects non-finite input.
  explicit Character(std::vector<double> phases,
                     std::optional<std::uint64_t> seed = std::nullopt);

  std::uint32_t length() const noexcept;  // J
  double phase(std::uint32_t j) const;    // 0-based
  std::span<const double> phases() const noexcept;
  std::optional<std::uint64_t> seed() const noexcept;
  std::uint64_t phase_digest() const noexcept;

  // { "J": J, "phases": [...], "seed": s? }
  std::string to_json() const;
  static Character from_json(const std::string& text);

private:
  std::vector<double> phases_;
  std::optional<std::uint64_t> seed_;
};

// J independent angles uniform on [0, 2pi); angle j is a pure function of
// (seed, j), so extending J keeps earlier phases.
Character sample_haar(std::uint32_t J, std::uint64_t seed);

// phases <- (phases - tau ln p_j) mod 2pi, per prime.
Character kronecker_twist(const Character& chi, double tau);

// chi(n) = exp(i sum alpha_j theta_j); exactly unimodular.
std::complex<double> char_eval(const Character& chi, const BohrIndex& n);
std::complex<double> char_eval(const Character& chi, std::uint32_t n, const SpfTable& spf);

// Coefficients a_n chi(n). Requires chi long enough for every n <= N.
DirichletPolynomial vertical_limit(const DirichletPolynomial& f, const Character& chi,
                                   const SpfTable& spf);

// sum a_n chi(n), the boundary function at chi.
std::complex<double> boundary_eval(const DirichletPolynomial& f, const Character& chi,
                                   const SpfTable& spf);

namespace detail {
// phi[n] = sum alpha_j theta_j for n = 1..N via the SPF recursion.
// Throws InsufficientCharacterLength if some prime <= N has index >= J.
void char_phases(std::span<const double> phases, const SpfTable& spf, std::uint32_t N,
                 double* phi);
}  // namespace detail

}  // namespace hpd
