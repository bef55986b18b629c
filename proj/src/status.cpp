#include "hpdirichlet/status.hpp"

#include <cmath>

namespace hpd {

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "fail";
}

bool parse_status(std::string_view text, CheckStatus& out) noexcept {
  if (text == "pass") { out = CheckStatus::pass; return true; }
  if (text == "fail") { out = CheckStatus::fail; return true; }
  if (text == "inconclusive") { out = CheckStatus::inconclusive; return true; }
  return false;
}

CheckStatus derive_status(double measured, double bound, double tolerance) noexcept {
  if (!std::isfinite(measured) || !std::isfinite(bound) || !std::isfinite(tolerance))
    return CheckStatus::fail;
  if (measured <= bound) return CheckStatus::pass;
  if (measured <= bound + tolerance) return CheckStatus::inconclusive;
  return CheckStatus::fail;
}

}  // namespace hpd
