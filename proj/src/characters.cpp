#include "hpdirichlet/characters.hpp"

#include "hpdirichlet/coverage.hpp"
#include "hpdirichlet/numeric.hpp"
#include "hpdirichlet/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <utility>

namespace hpd {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double reduce_phase(double theta) {
  double r = std::fmod(theta, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

}  // namespace

Character::Character(std::vector<double> phases, std::optional<std::uint64_t> seed)
    : phases_(std::move(phases)), seed_(seed) {
  for (auto& theta : phases_) {
    if (!std::isfinite(theta)) throw std::invalid_argument("Character: non-finite phase");
    theta = reduce_phase(theta);
  }
}

std::uint32_t Character::length() const noexcept {
  return static_cast<std::uint32_t>(phases_.size());
}

double Character::phase(std::uint32_t j) const {
  if (j >= phases_.size()) throw std::out_of_range("Character::phase: index out of range");
  return phases_[j];
}

std::span<const double> Character::phases() const noexcept { return phases_; }

std::optional<std::uint64_t> Character::seed() const noexcept { return seed_; }

std::uint64_t Character::phase_digest() const noexcept {
  Digest d;
  for (double theta : phases_) d.f64(theta);
  return d.value();
}

std::string Character::to_json() const {
  nlohmann::json j;
  j["J"] = phases_.size();
  j["phases"] = phases_;
  if (seed_) j["seed"] = *seed_;
  return j.dump();
}

Character Character::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("character JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("J") || !j.contains("phases"))
    throw std::invalid_argument("character JSON: expected { J, phases, seed? }");
  const auto J = j.at("J").get<std::uint64_t>();
  auto phases = j.at("phases").get<std::vector<double>>();
  if (phases.size() != J)
    throw std::invalid_argument("character JSON: phases length must equal J");
  std::optional<std::uint64_t> seed;
  if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
  return Character(std::move(phases), seed);
}

Character sample_haar(std::uint32_t J, std::uint64_t seed) {
  coverage::mark(coverage::Op::char_sample_haar);
  if (J == 0) throw std::invalid_argument("sample_haar: J must be >= 1");
  std::vector<double> phases(J);
  for (std::uint32_t j = 0; j < J; ++j)
    phases[j] = two_pi * rng::uniform01(seed, rng::stream_character_phase, j);
  return Character(std::move(phases), seed);
}

Character kronecker_twist(const Character& chi, double tau) {
  coverage::mark(coverage::Op::char_kronecker_twist);
  if (!std::isfinite(tau)) throw std::invalid_argument("kronecker_twist: tau must be finite");
  const auto primes = first_primes(chi.length());
  std::vector<double> phases(chi.length());
  for (std::uint32_t j = 0; j < chi.length(); ++j)
    phases[j] = reduce_phase(chi.phase(j) - tau * std::log(static_cast<double>(primes[j])));
  return Character(std::move(phases), std::nullopt);
}

std::complex<double> char_eval(const Character& chi, const BohrIndex& n) {
  coverage::mark(coverage::Op::char_eval);
  if (n.exponents.size() > chi.length())
    throw InsufficientCharacterLength(
        "char_eval: character has " + std::to_string(chi.length()) +
        " phases but the integer needs " + std::to_string(n.exponents.size()));
  KahanSum phase;
  for (std::size_t j = 0; j < n.exponents.size(); ++j)
    phase.add(static_cast<double>(n.exponents[j]) * chi.phase(static_cast<std::uint32_t>(j)));
  return cis(phase.value());
}

std::complex<double> char_eval(const Character& chi, std::uint32_t n, const SpfTable& spf) {
  return char_eval(chi, spf.bohr_lift(n));
}

namespace detail {

void char_phases(std::span<const double> phases, const SpfTable& spf, std::uint32_t N,
                 double* phi) {
  if (N > spf.n_max())
    throw std::invalid_argument("char_phases: SPF table smaller than the polynomial");
  phi[0] = 0.0;  // n = 1
  for (std::uint32_t n = 2; n <= N; ++n) {
    const std::uint32_t p = spf.smallest_factor(n);
    const std::uint32_t j = spf.prime_index(p);
    if (j >= phases.size())
      throw InsufficientCharacterLength(
          "character has " + std::to_string(phases.size()) + " phases; prime " +
          std::to_string(p) + " (index " + std::to_string(j) + ") is required for n <= " +
          std::to_string(N));
    phi[n - 1] = phases[j] + phi[n / p - 1];
  }
}

}  // namespace detail

DirichletPolynomial vertical_limit(const DirichletPolynomial& f, const Character& chi,
                                   const SpfTable& spf) {
  coverage::mark(coverage::Op::char_vertical_limit);
  const std::uint32_t N = f.length();
  std::vector<double> phi(N);
  detail::char_phases(chi.phases(), spf, N, phi.data());
  std::vector<std::complex<double>> coeffs(f.coefficients().begin(), f.coefficients().end());
  for (std::uint32_t n = 0; n < N; ++n) coeffs[n] *= cis(phi[n]);
  return DirichletPolynomial(std::move(coeffs));
}

std::complex<double> boundary_eval(const DirichletPolynomial& f, const Character& chi,
                                   const SpfTable& spf) {
  coverage::mark(coverage::Op::char_boundary_eval);
  const std::uint32_t N = f.length();
  std::vector<double> phi(N);
  detail::char_phases(chi.phases(), spf, N, phi.data());
  KahanComplexSum sum;
  const auto coeffs = f.coefficients();
  for (std::uint32_t n = 0; n < N; ++n) sum.add(coeffs[n] * cis(phi[n]));
  return sum.value();
}

}  // namespace hpd
