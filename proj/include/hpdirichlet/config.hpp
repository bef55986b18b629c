#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpd {

struct ConfigError : std::runtime_error {
  std::string field;  // dotted path of the offending field, e.g. "polynomial.n_max"
  ConfigError(std::string field_, const std::string& message);
};

struct GeneratorSpec {
  enum class Kind { explicit_coeffs, random_gaussian, random_signs, zeta_truncation };
  Kind kind = Kind::zeta_truncation;
  std::uint32_t n_max = 1;
  double decay = 0.0;
  std::vector<std::complex<double>> coeffs;  // explicit only
  std::string to_json() const;
};

// Declarative run description. Limits: n_max <= 1e6, T <= 1e6, mc_samples <= 1e7.
struct ExperimentConfig {
  static constexpr int schema_version = 1;
  std::uint64_t seed = 1;
  GeneratorSpec polynomial;
  std::vector<double> p_values = {1.0, 2.0, 4.0};
  std::vector<double> sigma_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  double T = 1000.0;
  std::uint64_t mc_samples = 20000;
  std::vector<std::string> suites;
  std::string output_path = "report";

  // Throws ConfigError naming the field on any violation.
  static ExperimentConfig from_json(const std::string& text);
  std::string to_json() const;  // canonical (sorted keys), used as the report echo
};

}  // namespace hpd
