#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace hpd {

// Compensated accumulation; summation order is part of every contract here,
// so all reductions go through these.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) noexcept {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const noexcept { return sum; }
};

struct KahanComplexSum {
  KahanSum re, im;
  void add(std::complex<double> z) noexcept {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const noexcept { return {re.value(), im.value()}; }
};

inline std::complex<double> cis(double theta) noexcept { return std::polar(1.0, theta); }

inline double sinc(double x) noexcept { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// |w|^p from |w|^2. Flushes w = 0 to zero so non-even p never produces NaN at
// zeros of the integrand.
inline double pow_from_abs2(double abs2, double p) noexcept {
  if (abs2 <= 0.0) return 0.0;
  if (p == 2.0) return abs2;
  if (p == 1.0) return std::sqrt(abs2);
  if (p == 4.0) return abs2 * abs2;
  return std::exp(0.5 * p * std::log(abs2));
}

// Relative excess of a composite Simpson panel applied to exp(i*omega*t),
// theta = omega*h: rho(theta) - 1 with rho = theta (2 + cos theta) / (3 sin theta).
// Series below the cancellation knee, closed form above; the cushion keeps the
// result an upper bound under either route's rounding.
inline double simpson_exp_excess(double theta) noexcept {
  theta = std::fabs(theta);
  const double t2 = theta * theta;
  const double t4 = t2 * t2;
  const double series = t4 / 180.0 + t4 * t2 / 1512.0;
  if (theta < 0.01) return series * (1.0 + 1e-6);
  const double closed = theta * (2.0 + std::cos(theta)) / (3.0 * std::sin(theta)) - 1.0;
  return std::max(closed, series) * (1.0 + 1e-5);
}

// FNV-1a over a canonical byte stream; used for the inputs_digest column.
struct Digest {
  std::uint64_t h = 1469598103934665603ull;
  void bytes(const void* data, std::size_t n) noexcept {
    const auto* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
  }
  void u64(std::uint64_t v) noexcept { bytes(&v, sizeof v); }
  void f64(double v) noexcept {
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof v);
    __builtin_memcpy(&bits, &v, sizeof bits);
    u64(bits);
  }
  void str(std::string_view s) noexcept { bytes(s.data(), s.size()); }
  std::uint64_t value() const noexcept { return h; }
};

std::string to_hex(std::uint64_t v);

// Shortest round-trip formatting; the emitted reports must re-parse to the
// exact same doubles during audits.
std::string format_double(double v);
double parse_double(std::string_view text);

}  // namespace hpd
