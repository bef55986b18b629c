// hpd: command-line front end over the hpdirichlet C API.
//
//   hpd --config cfg.json eval --sigma 0.5 --t 1.0
//   hpd --config cfg.json means [--out means.csv]
//   hpd --config cfg.json riesz [--out riesz.csv]
//   hpd --config cfg.json poisson [--out poisson.csv]
//   hpd --config cfg.json verify all [--out report_base] [--threads 4]
//   hpd report --in report_base.csv
//
// Exit code 0 iff nothing failed (verify: no failing row; report: no audit
// mismatch and no failing row).

#include "hpdirichlet.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct StringDeleter {
  void operator()(char* p) const { hpd_free_string(p); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct ReportDeleter {
  void operator()(hpd_report* r) const { hpd_report_free(r); }
};
using Report = std::unique_ptr<hpd_report, ReportDeleter>;

struct PolyDeleter {
  void operator()(hpd_poly* f) const { hpd_poly_free(f); }
};
using Poly = std::unique_ptr<hpd_poly, PolyDeleter>;

[[noreturn]] void die(const std::string& context, hpd_status status) {
  std::cerr << "hpd: " << context << ": " << hpd_status_name(status) << " ("
            << hpd_last_error() << ")\n";
  std::exit(2);
}

void check(hpd_status status, const std::string& context) {
  if (status != HPD_OK) die(context, status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "hpd: cannot read '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "hpd: cannot write '" << path << "'\n";
    std::exit(2);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet-polynomial laboratory (p-means, torus averages, Riesz "
               "summation, Poisson extension)"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out_path;
  int threads = 0;
  app.add_option("--config", config_path, "experiment config (JSON)");
  app.add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
    seed_set = true;
  });
  app.add_option("--out", out_path, "output path ('-' for stdout)");
  app.add_option("--threads", threads, "worker threads (speed only, never results)");

  auto* cmd_eval = app.add_subcommand("eval", "evaluate the config polynomial at s");
  double eval_sigma = 0.5, eval_t = 0.0;
  cmd_eval->add_option("--sigma", eval_sigma, "real part of s");
  cmd_eval->add_option("--t", eval_t, "imaginary part of s");

  auto* cmd_means = app.add_subcommand("means", "p-mean estimates as CSV");
  auto* cmd_riesz = app.add_subcommand("riesz", "Riesz convergence rows as CSV");
  auto* cmd_poisson = app.add_subcommand("poisson", "Poisson extension checks as CSV");

  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  cmd_verify->add_option("suite", suite, "suite name, or 'all'");

  auto* cmd_report = app.add_subcommand("report", "re-audit an emitted CSV report");
  std::string report_in;
  cmd_report->add_option("--in", report_in, "report CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  hpd_set_max_threads(threads);

  if (cmd_report->parsed()) {
    const std::string text = read_file(report_in);
    std::uint64_t mismatches = 0, pass = 0, fail = 0, inconclusive = 0;
    check(hpd_report_audit_csv(text.c_str(), &mismatches, &pass, &fail, &inconclusive),
          "audit");
    std::cout << "rows: pass=" << pass << " fail=" << fail
              << " inconclusive=" << inconclusive << " status_mismatches=" << mismatches
              << '\n';
    return (mismatches == 0 && fail == 0) ? 0 : 1;
  }

  if (config_path.empty()) {
    std::cerr << "hpd: --config is required for this subcommand\n";
    return 2;
  }
  const std::string raw_config = read_file(config_path);
  ApiString config;
  {
    char* text = nullptr;
    check(hpd_config_with_overrides(raw_config.c_str(), seed_set ? 1 : 0, seed, nullptr,
                                    &text),
          "config");
    config.reset(text);
  }

  if (cmd_eval->parsed()) {
    Poly f;
    {
      hpd_poly* p = nullptr;
      check(hpd_poly_from_config(config.get(), &p), "polynomial");
      f.reset(p);
    }
    double value[2] = {0, 0};
    check(hpd_poly_eval(f.get(), eval_sigma, eval_t, value), "eval");
    std::printf("f(%.17g%+.17gi) = %.17g %+.17gi\n", eval_sigma, eval_t, value[0], value[1]);
    return 0;
  }

  if (cmd_means->parsed() || cmd_riesz->parsed() || cmd_poisson->parsed()) {
    char* csv = nullptr;
    if (cmd_means->parsed()) check(hpd_means_csv(config.get(), &csv), "means");
    if (cmd_riesz->parsed()) check(hpd_riesz_csv(config.get(), &csv), "riesz");
    if (cmd_poisson->parsed()) check(hpd_poisson_csv(config.get(), &csv), "poisson");
    ApiString owned(csv);
    write_text(out_path, owned.get());
    return 0;
  }

  if (cmd_verify->parsed()) {
    Report report;
    {
      hpd_report* r = nullptr;
      if (suite == "all")
        check(hpd_suites_run_all(config.get(), &r), "verify");
      else
        check(hpd_suite_run(config.get(), suite.c_str(), &r), "verify " + suite);
      report.reset(r);
    }

    std::string base = out_path;
    if (base.empty() || base == "-") {
      char* from_config = nullptr;
      check(hpd_config_output_path(config.get(), &from_config), "output path");
      ApiString owned(from_config);
      base = owned.get();
    }
    check(hpd_report_write(report.get(), base.c_str()), "write report");

    std::uint64_t pass = 0, fail = 0, inconclusive = 0;
    check(hpd_report_counts(report.get(), &pass, &fail, &inconclusive), "counts");
    double wall = 0.0;
    check(hpd_report_wall_seconds(report.get(), &wall), "wall time");
    char* summary = nullptr;
    check(hpd_report_summary_json(report.get(), &summary), "summary");
    ApiString owned_summary(summary);
    std::cout << owned_summary.get() << '\n';
    std::cout << "wrote " << base << ".csv / .json in " << wall << " s: pass=" << pass
              << " fail=" << fail << " inconclusive=" << inconclusive << '\n';
    return fail == 0 ? 0 : 1;
  }

  return 2;
}
