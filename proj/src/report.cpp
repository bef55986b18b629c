#include "hpdirichlet/report.hpp"

#include "hpdirichlet/coverage.hpp"
#include "hpdirichlet/numeric.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hpd {

namespace {

// Non-finite measurements still need to round-trip through the CSV.
std::string csv_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return format_double(v);
}

double csv_parse_double(std::string_view text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  return parse_double(text);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

constexpr std::string_view kHeader = "suite,check,inputs_digest,measured,bound,tolerance,status";

}  // namespace

void VerificationReport::add(std::string suite, std::string check,
                             std::uint64_t inputs_digest, double measured, double bound,
                             double tolerance) {
  CheckRow row;
  row.suite = std::move(suite);
  row.check = std::move(check);
  row.inputs_digest = inputs_digest;
  row.measured = measured;
  row.bound = bound;
  row.tolerance = tolerance;
  row.status = derive_status(measured, bound, tolerance);
  rows_.push_back(std::move(row));
}

std::map<std::string, SuiteCounts> VerificationReport::counts() const {
  std::map<std::string, SuiteCounts> out;
  for (const auto& row : rows_) {
    auto& c = out[row.suite];
    switch (row.status) {
      case CheckStatus::pass: ++c.pass; break;
      case CheckStatus::fail: ++c.fail; break;
      case CheckStatus::inconclusive: ++c.inconclusive; break;
    }
  }
  return out;
}

SuiteCounts VerificationReport::totals() const {
  SuiteCounts total;
  for (const auto& [name, c] : counts()) {
    total.pass += c.pass;
    total.fail += c.fail;
    total.inconclusive += c.inconclusive;
  }
  return total;
}

void VerificationReport::merge(const VerificationReport& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
  wall_seconds_ += other.wall_seconds_;
  if (config_echo_.empty()) config_echo_ = other.config_echo_;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << kHeader << '\n';
  for (const auto& row : rows_) {
    out << row.suite << ',' << row.check << ',' << to_hex(row.inputs_digest) << ','
        << csv_double(row.measured) << ',' << csv_double(row.bound) << ','
        << csv_double(row.tolerance) << ',' << to_string(row.status) << '\n';
  }
  return out.str();
}

std::string VerificationReport::summary_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  if (!config_echo_.empty()) j["config"] = nlohmann::json::parse(config_echo_);
  auto& suites = j["suites"];
  suites = nlohmann::json::object();
  for (const auto& [name, c] : counts()) {
    suites[name] = {{"pass", c.pass}, {"fail", c.fail}, {"inconclusive", c.inconclusive}};
  }
  const auto total = totals();
  j["totals"] = {{"pass", total.pass}, {"fail", total.fail},
                 {"inconclusive", total.inconclusive}};
  return j.dump(2);
}

std::vector<CheckRow> VerificationReport::parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw std::runtime_error("report CSV: missing or unexpected header");
  std::vector<CheckRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_line(line);
    if (fields.size() != 7)
      throw std::runtime_error("report CSV line " + std::to_string(line_no) +
                               ": expected 7 fields");
    CheckRow row;
    row.suite = fields[0];
    row.check = fields[1];
    row.inputs_digest = std::stoull(fields[2], nullptr, 16);
    row.measured = csv_parse_double(fields[3]);
    row.bound = csv_parse_double(fields[4]);
    row.tolerance = csv_parse_double(fields[5]);
    if (!parse_status(fields[6], row.status))
      throw std::runtime_error("report CSV line " + std::to_string(line_no) +
                               ": unknown status '" + fields[6] + "'");
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_report(const VerificationReport& report, const std::string& base_path) {
  coverage::mark(coverage::Op::harness_emit_report);
  if (base_path.empty()) throw std::invalid_argument("emit_report: empty output path");
  const std::filesystem::path base(base_path);
  std::error_code ec;
  if (base.has_parent_path()) {
    std::filesystem::create_directories(base.parent_path(), ec);
    if (ec)
      throw std::runtime_error("emit_report: cannot create directory '" +
                               base.parent_path().string() + "': " + ec.message());
  }
  auto write_file = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("emit_report: cannot open '" + path.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("emit_report: write failed for '" + path.string() + "'");
  };
  write_file(base_path + ".csv", report.to_csv());
  write_file(base_path + ".json", report.summary_json());
}

std::uint64_t audit_csv_text(const std::string& csv_text) {
  const auto rows = VerificationReport::parse_csv(csv_text);
  std::uint64_t mismatches = 0;
  for (const auto& row : rows)
    if (derive_status(row.measured, row.bound, row.tolerance) != row.status) ++mismatches;
  return mismatches;
}

}  // namespace hpd
