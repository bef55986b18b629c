#pragma once

// Declarative experiment runner. Each suite exercises one circle of results:
//   carlson  - p-mean existence, log-convexity, the norm limit sigma -> 0+
//   ergodic  - time averages against torus integrals, flow identities, C_f
//   helson   - the divisor-weighted coefficient bound against the 1-norm
//   riesz    - weighted partial sums, contour identity, Hankel residuals
//   poisson  - half-plane extension, kernel accounting, growth bounds
//   fatou    - boundary traces along sigma -> 0+
//   norms    - norm recovery on the boundary and partial-sum stabilization
// Runs are deterministic given (config, seed) for any thread count.

#include "hpdirichlet/config.hpp"
#include "hpdirichlet/report.hpp"
#include "hpdirichlet/series.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hpd {

DirichletPolynomial generate_polynomial(const GeneratorSpec& spec, std::uint64_t seed);

std::span<const std::string_view> known_suites();

VerificationReport run_suite(const ExperimentConfig& config, const std::string& suite_name);

// Runs the named suites (config.suites when empty, all known when that is
// also empty) and merges the reports; sets the config echo.
VerificationReport run_suites(const ExperimentConfig& config,
                              std::span<const std::string> names = {});

}  // namespace hpd
