#pragma once

#include <cstdint>
#include <string_view>

// Call accounting for the public operations. The verification suites are
// required to exercise every operation at least once; the test surface
// checks that against these counters.

namespace hpd::coverage {

enum class Op : int {
  series_eval,
  series_translate_h,
  series_translate_v,
  arith_sieve_primes,
  arith_bohr_lift,
  arith_divisor_count,
  char_sample_haar,
  char_eval,
  char_kronecker_twist,
  char_vertical_limit,
  char_boundary_eval,
  means_exact_mean_2,
  means_exact_finite_mean_2,
  means_time_mean,
  means_mc_torus_mean,
  means_estimate_cf,
  means_convexity_report,
  means_translate_defect,
  riesz_mean,
  riesz_contour,
  riesz_hankel_check,
  riesz_convergence_study,
  poisson_extend,
  poisson_fatou_trace,
  poisson_check_pointwise,
  poisson_check_supsup,
  harness_run_suite,
  harness_generate_polynomial,
  harness_emit_report,
  count_
};

inline constexpr int op_count = static_cast<int>(Op::count_);

void mark(Op op) noexcept;
std::uint64_t calls(Op op) noexcept;
void reset() noexcept;
std::string_view name(Op op) noexcept;

}  // namespace hpd::coverage
