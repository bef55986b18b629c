#include "hpdirichlet/coverage.hpp"

#include <array>
#include <atomic>

namespace hpd::coverage {

namespace {
std::array<std::atomic<std::uint64_t>, op_count>& counters() {
  static std::array<std::atomic<std::uint64_t>, op_count> storage{};
  return storage;
}

constexpr std::array<std::string_view, op_count> kNames = {
    "series.eval",
    "series.translate_h",
    "series.translate_v",
    "arith.sieve_primes",
    "arith.bohr_lift",
    "arith.divisor_count",
    "characters.sample_haar",
    "characters.char_eval",
    "characters.kronecker_twist",
    "characters.vertical_limit",
    "characters.boundary_eval",
    "means.exact_mean_2",
    "means.exact_finite_mean_2",
    "means.time_mean",
    "means.mc_torus_mean",
    "means.estimate_Cf",
    "means.convexity_report",
    "means.translate_defect",
    "riesz.riesz_mean",
    "riesz.riesz_contour",
    "riesz.hankel_check",
    "riesz.convergence_study",
    "poisson.poisson_extend",
    "poisson.fatou_trace",
    "poisson.check_pointwise_bound",
    "poisson.check_supsup_bound",
    "harness.run_suite",
    "harness.generate_polynomial",
    "harness.emit_report",
};
}  // namespace

void mark(Op op) noexcept {
  counters()[static_cast<int>(op)].fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t calls(Op op) noexcept {
  return counters()[static_cast<int>(op)].load(std::memory_order_relaxed);
}

void reset() noexcept {
  for (auto& c : counters()) c.store(0, std::memory_order_relaxed);
}

std::string_view name(Op op) noexcept { return kNames[static_cast<int>(op)]; }

}  // namespace hpd::coverage
