#pragma once

#include <string_view>

namespace hpd {

// "inconclusive" is first-class: bound checks whose margin sits inside the
// documented uncertainty band (grid-sup constants, Monte Carlo stderr) are
// neither confirmed nor refuted by a finite experiment.
enum class CheckStatus { pass, fail, inconclusive };

std::string_view to_string(CheckStatus s) noexcept;
bool parse_status(std::string_view text, CheckStatus& out) noexcept;

// Uniform rule used everywhere so stored rows can be re-derived:
//   measured <= bound                -> pass
//   measured <= bound + tolerance    -> inconclusive
//   otherwise (or non-finite)        -> fail
CheckStatus derive_status(double measured, double bound, double tolerance) noexcept;

}  // namespace hpd
