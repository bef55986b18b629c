#include "hpdirichlet/config.hpp"

#include <json.hpp>

#include <cmath>
#include <set>

namespace hpd {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& message) {
  throw ConfigError(field, message);
}

double get_number(const json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

std::uint64_t get_count(const json& j, const std::string& field, std::uint64_t lo,
                        std::uint64_t hi) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(field, "expected a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v < lo || v > hi)
    bad(field, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

std::string kind_name(GeneratorSpec::Kind kind) {
  switch (kind) {
    case GeneratorSpec::Kind::explicit_coeffs: return "explicit";
    case GeneratorSpec::Kind::random_gaussian: return "random-gaussian";
    case GeneratorSpec::Kind::random_signs: return "random-signs";
    case GeneratorSpec::Kind::zeta_truncation: return "zeta-truncation";
  }
  return "zeta-truncation";
}

GeneratorSpec parse_generator(const json& j) {
  if (!j.is_object()) bad("polynomial", "expected an object");
  if (!j.contains("type")) bad("polynomial.type", "missing");
  const auto type = j.at("type").get<std::string>();
  GeneratorSpec spec;
  if (type == "explicit") spec.kind = GeneratorSpec::Kind::explicit_coeffs;
  else if (type == "random-gaussian") spec.kind = GeneratorSpec::Kind::random_gaussian;
  else if (type == "random-signs") spec.kind = GeneratorSpec::Kind::random_signs;
  else if (type == "zeta-truncation") spec.kind = GeneratorSpec::Kind::zeta_truncation;
  else bad("polynomial.type", "unknown generator '" + type + "'");

  if (spec.kind == GeneratorSpec::Kind::explicit_coeffs) {
    if (!j.contains("coeffs")) bad("polynomial.coeffs", "missing for explicit polynomials");
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.empty()) bad("polynomial.coeffs", "expected a non-empty array");
    for (const auto& item : arr) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
        bad("polynomial.coeffs", "each coefficient is [re, im]");
      spec.coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
      if (!std::isfinite(spec.coeffs.back().real()) || !std::isfinite(spec.coeffs.back().imag()))
        bad("polynomial.coeffs", "coefficients must be finite");
    }
    spec.n_max = static_cast<std::uint32_t>(spec.coeffs.size());
    if (j.contains("n_max") &&
        j.at("n_max").get<std::uint64_t>() != spec.coeffs.size())
      bad("polynomial.n_max", "must equal the coefficient count");
    return spec;
  }

  if (!j.contains("n_max")) bad("polynomial.n_max", "missing");
  spec.n_max = static_cast<std::uint32_t>(get_count(j.at("n_max"), "polynomial.n_max", 1, 1000000));
  if (j.contains("decay")) {
    spec.decay = get_number(j.at("decay"), "polynomial.decay");
    if (!std::isfinite(spec.decay) || spec.decay < 0.0 || spec.decay > 64.0)
      bad("polynomial.decay", "must be finite and in [0, 64]");
  }
  return spec;
}

}  // namespace

ConfigError::ConfigError(std::string field_, const std::string& message)
    : std::runtime_error("config field '" + field_ + "': " + message),
      field(std::move(field_)) {}

std::string GeneratorSpec::to_json() const {
  json j;
  j["type"] = kind_name(kind);
  j["n_max"] = n_max;
  if (kind == Kind::explicit_coeffs) {
    auto& arr = j["coeffs"] = json::array();
    for (const auto& a : coeffs) arr.push_back({a.real(), a.imag()});
  } else {
    j["decay"] = decay;
  }
  return j.dump();
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad("<root>", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("<root>", "expected an object");

  ExperimentConfig config;
  if (j.contains("schema_version") &&
      j.at("schema_version").get<std::int64_t>() != schema_version)
    bad("schema_version", "unsupported version");

  if (j.contains("seed")) config.seed = get_count(j.at("seed"), "seed", 0, UINT64_MAX);
  if (!j.contains("polynomial")) bad("polynomial", "missing");
  config.polynomial = parse_generator(j.at("polynomial"));

  if (j.contains("p_values")) {
    const auto& arr = j.at("p_values");
    if (!arr.is_array() || arr.empty()) bad("p_values", "expected a non-empty array");
    config.p_values.clear();
    for (const auto& item : arr) {
      const double p = get_number(item, "p_values");
      if (!(p >= 1.0) || !std::isfinite(p) || p > 16.0)
        bad("p_values", "entries must lie in [1, 16]");
      config.p_values.push_back(p);
    }
  }

  if (j.contains("sigma_grid")) {
    const auto& arr = j.at("sigma_grid");
    if (!arr.is_array() || arr.size() < 3)
      bad("sigma_grid", "expected an array with at least 3 points");
    config.sigma_grid.clear();
    for (const auto& item : arr) {
      const double s = get_number(item, "sigma_grid");
      if (!(s > 0.0) || !std::isfinite(s)) bad("sigma_grid", "entries must be positive");
      if (!config.sigma_grid.empty() && s <= config.sigma_grid.back())
        bad("sigma_grid", "entries must increase");
      config.sigma_grid.push_back(s);
    }
  }

  if (j.contains("T")) {
    config.T = get_number(j.at("T"), "T");
    if (!(config.T > 0.0) || !(config.T <= 1e6)) bad("T", "must lie in (0, 1e6]");
  }
  if (j.contains("mc_samples"))
    config.mc_samples = get_count(j.at("mc_samples"), "mc_samples", 100, 10000000);

  if (j.contains("suites")) {
    const auto& arr = j.at("suites");
    if (!arr.is_array()) bad("suites", "expected an array of suite names");
    config.suites.clear();
    for (const auto& item : arr) {
      if (!item.is_string()) bad("suites", "entries must be strings");
      config.suites.push_back(item.get<std::string>());
    }
  }
  if (j.contains("output_path")) {
    config.output_path = j.at("output_path").get<std::string>();
    if (config.output_path.empty()) bad("output_path", "must not be empty");
  }
  return config;
}

std::string ExperimentConfig::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["seed"] = seed;
  j["polynomial"] = json::parse(polynomial.to_json());
  j["p_values"] = p_values;
  j["sigma_grid"] = sigma_grid;
  j["T"] = T;
  j["mc_samples"] = mc_samples;
  j["suites"] = suites;
  j["output_path"] = output_path;
  return j.dump(2);
}

}  // namespace hpd
