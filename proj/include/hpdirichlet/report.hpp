#pragma once

// Machine-readable verification results. Every row's status is derivable from
// (measured, bound, tolerance) alone, so written reports can be re-audited.
// Emitted files are byte-identical across runs with the same config; wall
// time is console-only diagnostics.

#include "hpdirichlet/status.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hpd {

struct CheckRow {
  std::string suite;
  std::string check;
  std::uint64_t inputs_digest = 0;
  double measured = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::fail;
};

struct SuiteCounts {
  std::uint64_t pass = 0, fail = 0, inconclusive = 0;
};

class VerificationReport {
public:
  void add(std::string suite, std::string check, std::uint64_t inputs_digest,
           double measured, double bound, double tolerance);
  const std::vector<CheckRow>& rows() const noexcept { return rows_; }

  std::map<std::string, SuiteCounts> counts() const;
  SuiteCounts totals() const;

  void set_config_echo(std::string canonical_json) { config_echo_ = std::move(canonical_json); }
  const std::string& config_echo() const noexcept { return config_echo_; }
  void set_wall_seconds(double s) noexcept { wall_seconds_ = s; }
  double wall_seconds() const noexcept { return wall_seconds_; }

  void merge(const VerificationReport& other);

  // columns: suite,check,inputs_digest,measured,bound,tolerance,status
  std::string to_csv() const;
  std::string summary_json() const;

  static std::vector<CheckRow> parse_csv(const std::string& text);

private:
  std::vector<CheckRow> rows_;
  std::string config_echo_;
  double wall_seconds_ = 0.0;
};

// Writes <base_path>.csv and <base_path>.json, creating parent directories.
void emit_report(const VerificationReport& report, const std::string& base_path);

// Number of rows whose stored status disagrees with the derived one.
std::uint64_t audit_csv_text(const std::string& csv_text);

}  // namespace hpd
