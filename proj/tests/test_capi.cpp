#include "hpdirichlet.h"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct StringFree {
  void operator()(char* p) const { hpd_free_string(p); }
};
using ApiString = std::unique_ptr<char, StringFree>;

constexpr const char* kQuickConfig = R"({
  "seed": 4242,
  "polynomial": { "type": "random-gaussian", "n_max": 12, "decay": 0.6 },
  "p_values": [1.0, 2.0],
  "sigma_grid": [0.1, 0.3, 0.5, 0.7, 0.9],
  "T": 100.0,
  "mc_samples": 500,
  "suites": ["fatou"],
  "output_path": "out/capi_report"
})";

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and status names") {
  CHECK(std::strlen(hpd_version()) > 0);
  CHECK(std::string(hpd_status_name(HPD_OK)) == "ok");
  CHECK(std::string(hpd_status_name(HPD_PARSE_ERROR)) == "parse error");
}

TEST_CASE("polynomial lifecycle through JSON") {
  hpd_poly* f = nullptr;
  REQUIRE(hpd_poly_from_json(R"({"n_max":2,"coeffs":[[1,0],[1,0]]})", &f) == HPD_OK);
  uint32_t length = 0;
  CHECK(hpd_poly_length(f, &length) == HPD_OK);
  CHECK(length == 2);

  double v[2] = {0, 0};
  CHECK(hpd_poly_eval(f, 1.0, 0.0, v) == HPD_OK);
  CHECK(std::abs(v[0] - 1.5) < 1e-15);
  CHECK(std::abs(v[1]) < 1e-15);

  char* text = nullptr;
  REQUIRE(hpd_poly_to_json(f, &text) == HPD_OK);
  ApiString owned(text);
  hpd_poly* back = nullptr;
  REQUIRE(hpd_poly_from_json(owned.get(), &back) == HPD_OK);
  double w[2] = {0, 0};
  CHECK(hpd_poly_eval(back, 1.0, 0.0, w) == HPD_OK);
  CHECK(w[0] == v[0]);

  hpd_poly* shifted = nullptr;
  REQUIRE(hpd_poly_translate_h(f, 1.0, &shifted) == HPD_OK);
  CHECK(hpd_poly_eval(shifted, 0.0, 0.0, w) == HPD_OK);
  CHECK(std::abs(w[0] - 1.5) < 1e-15);

  hpd_poly_free(shifted);
  hpd_poly_free(back);
  hpd_poly_free(f);
}

TEST_CASE("error paths carry status codes and messages") {
  hpd_poly* f = nullptr;
  CHECK(hpd_poly_from_json("{", &f) == HPD_PARSE_ERROR);
  CHECK(std::strlen(hpd_last_error()) > 0);
  CHECK(hpd_poly_from_json(nullptr, &f) == HPD_INVALID_ARGUMENT);

  REQUIRE(hpd_poly_from_json(R"({"n_max":1,"coeffs":[[1,0]]})", &f) == HPD_OK);
  hpd_poly* bad = nullptr;
  CHECK(hpd_poly_translate_h(f, -1.0, &bad) == HPD_INVALID_ARGUMENT);
  hpd_poly_free(f);

  CHECK(hpd_config_validate(R"({"polynomial":{"type":"zeta-truncation","n_max":4},"T":-1})") ==
        HPD_PARSE_ERROR);
  CHECK(std::string(hpd_last_error()).find("'T'") != std::string::npos);
}

TEST_CASE("characters and boundary data") {
  hpd_character* chi = nullptr;
  REQUIRE(hpd_character_sample(6, 99, &chi) == HPD_OK);

  char* text = nullptr;
  REQUIRE(hpd_character_to_json(chi, &text) == HPD_OK);
  ApiString owned(text);
  hpd_character* back = nullptr;
  REQUIRE(hpd_character_from_json(owned.get(), &back) == HPD_OK);

  double a[2], b[2];
  CHECK(hpd_character_eval(chi, 12, a) == HPD_OK);
  CHECK(hpd_character_eval(back, 12, b) == HPD_OK);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == b[1]);
  CHECK(std::abs(std::hypot(a[0], a[1]) - 1.0) < 1e-14);

  // twist identity chi'(n) = chi(n) n^{-i tau}
  hpd_character* twisted = nullptr;
  REQUIRE(hpd_character_twist(chi, 1.3, &twisted) == HPD_OK);
  double c[2];
  CHECK(hpd_character_eval(twisted, 12, c) == HPD_OK);
  const std::complex<double> expect =
      std::complex<double>{a[0], a[1]} * std::polar(1.0, -1.3 * std::log(12.0));
  CHECK(std::abs(std::complex<double>{c[0], c[1]} - expect) < 1e-12);

  // too short for a prime factor above its range
  hpd_character* shorty = nullptr;
  REQUIRE(hpd_character_sample(1, 7, &shorty) == HPD_OK);
  double d[2];
  CHECK(hpd_character_eval(shorty, 3, d) == HPD_DOMAIN_ERROR);

  hpd_poly* f = nullptr;
  REQUIRE(hpd_poly_from_json(R"({"n_max":2,"coeffs":[[1,0],[1,0]]})", &f) == HPD_OK);
  double bd[2];
  REQUIRE(hpd_boundary_eval(f, chi, bd) == HPD_OK);
  hpd_poly* g = nullptr;
  REQUIRE(hpd_vertical_limit(f, chi, &g) == HPD_OK);
  double gv[2];
  CHECK(hpd_poly_eval(g, 0.0, 0.0, gv) == HPD_OK);
  CHECK(std::abs(gv[0] - bd[0]) < 1e-14);
  CHECK(std::abs(gv[1] - bd[1]) < 1e-14);

  hpd_poly_free(g);
  hpd_poly_free(f);
  hpd_character_free(shorty);
  hpd_character_free(twisted);
  hpd_character_free(back);
  hpd_character_free(chi);
}

TEST_CASE("mean estimators") {
  hpd_poly* f = nullptr;
  REQUIRE(hpd_poly_from_json(R"({"n_max":2,"coeffs":[[1,0],[1,0]]})", &f) == HPD_OK);

  double exact = 0.0;
  CHECK(hpd_exact_mean_2(f, 0.0, &exact) == HPD_OK);
  CHECK(exact == 2.0);

  double finite = 0.0;
  CHECK(hpd_exact_finite_mean_2(f, 0.0, 40.0, &finite) == HPD_OK);
  const double expected = 2.0 + 2.0 * std::sin(40.0 * std::log(2.0)) / (40.0 * std::log(2.0));
  CHECK(std::abs(finite - expected) < 1e-13);

  double tm = 0.0, tm_err = 0.0;
  CHECK(hpd_time_mean(f, 0.0, 2.0, 40.0, 0, &tm, &tm_err) == HPD_OK);
  CHECK(std::abs(tm - finite) <= tm_err);

  double mc = 0.0, mc_err = 0.0;
  CHECK(hpd_mc_torus_mean(f, 2.0, 20000, 3, &mc, &mc_err) == HPD_OK);
  CHECK(std::abs(mc - 2.0) <= 4.0 * mc_err);
  CHECK(hpd_mc_torus_mean(f, 0.5, 20000, 3, &mc, &mc_err) == HPD_INVALID_ARGUMENT);

  hpd_poly_free(f);
}

TEST_CASE("riesz and poisson surfaces") {
  hpd_poly* f = nullptr;
  REQUIRE(hpd_poly_from_json(R"({"n_max":4,"coeffs":[[1,0],[1,0],[1,0],[1,0]]})", &f) ==
          HPD_OK);

  double rm[2];
  REQUIRE(hpd_riesz_mean(f, 4, 1.0, 0.0, 0.0, rm) == HPD_OK);
  const double expected =
      1.0 + (1.0 - std::log(2.0) / std::log(4.0)) + (1.0 - std::log(3.0) / std::log(4.0));
  CHECK(std::abs(rm[0] - expected) < 1e-14);

  double rc[2], rc_bound = 0.0;
  REQUIRE(hpd_riesz_contour(f, 10, 3.5, 0.0, 0.0, 0.5, 0.0, rc, &rc_bound) == HPD_OK);
  double rm10[2];
  REQUIRE(hpd_riesz_mean(f, 10, 3.5, 0.5, 0.0, rm10) == HPD_OK);
  CHECK(std::hypot(rc[0] - rm10[0], rc[1] - rm10[1]) <= rc_bound);
  CHECK(hpd_riesz_contour(f, 10, 1.0, 0.0, 0.0, 0.5, 0.0, rc, &rc_bound) ==
        HPD_DOMAIN_ERROR);

  double residual = 0.0;
  REQUIRE(hpd_hankel_residual(1.0, 3.0, 3.0, 200.0, &residual) == HPD_OK);
  CHECK(residual <= 1e-4);

  hpd_character* chi = nullptr;
  REQUIRE(hpd_character_sample(2, 17, &chi) == HPD_OK);
  double pv[2], pv_bound = 0.0;
  REQUIRE(hpd_poisson_extend(f, chi, 0.5, 0.2, 2.0, 200.0, 0.2, 400.0, 0.04, pv, &pv_bound) ==
          HPD_OK);
  hpd_poly* g = nullptr;
  REQUIRE(hpd_vertical_limit(f, chi, &g) == HPD_OK);
  double direct[2];
  REQUIRE(hpd_poly_eval(g, 0.5, 0.2, direct) == HPD_OK);
  CHECK(std::hypot(pv[0] - direct[0], pv[1] - direct[1]) <= pv_bound);
  CHECK(hpd_poisson_extend(f, chi, 0.0, 0.2, 2.0, 200.0, 0.2, 400.0, 0.04, pv, &pv_bound) ==
        HPD_DOMAIN_ERROR);

  hpd_poly_free(g);
  hpd_character_free(chi);
  hpd_poly_free(f);
}

TEST_CASE("suite runs and report plumbing") {
  hpd_report* report = nullptr;
  REQUIRE(hpd_suite_run(kQuickConfig, "fatou", &report) == HPD_OK);

  uint64_t rows = 0;
  CHECK(hpd_report_row_count(report, &rows) == HPD_OK);
  CHECK(rows > 0);
  uint64_t pass = 0, fail = 0, inconclusive = 0;
  CHECK(hpd_report_counts(report, &pass, &fail, &inconclusive) == HPD_OK);
  CHECK(fail == 0);
  CHECK(pass + fail + inconclusive == rows);

  char* csv = nullptr;
  REQUIRE(hpd_report_to_csv(report, &csv) == HPD_OK);
  ApiString owned_csv(csv);
  uint64_t mismatches = 1, apass = 0, afail = 0, ainc = 0;
  CHECK(hpd_report_audit_csv(owned_csv.get(), &mismatches, &apass, &afail, &ainc) == HPD_OK);
  CHECK(mismatches == 0);
  CHECK(apass == pass);

  char* summary = nullptr;
  REQUIRE(hpd_report_summary_json(report, &summary) == HPD_OK);
  ApiString owned_summary(summary);
  CHECK(std::string(owned_summary.get()).find("fatou") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "hpd_capi_report";
  std::filesystem::remove_all(dir);
  REQUIRE(hpd_report_write(report, (dir / "r").string().c_str()) == HPD_OK);
  CHECK(std::filesystem::exists(dir / "r.csv"));
  CHECK(std::filesystem::exists(dir / "r.json"));
  std::filesystem::remove_all(dir);

  hpd_report_free(report);

  hpd_report* bad = nullptr;
  CHECK(hpd_suite_run(kQuickConfig, "nope", &bad) == HPD_INVALID_ARGUMENT);
}

TEST_CASE("config helpers") {
  char* canonical = nullptr;
  REQUIRE(hpd_config_canonical(kQuickConfig, &canonical) == HPD_OK);
  ApiString owned(canonical);
  CHECK(std::string(owned.get()).find("random-gaussian") != std::string::npos);

  char* path = nullptr;
  REQUIRE(hpd_config_output_path(kQuickConfig, &path) == HPD_OK);
  ApiString owned_path(path);
  CHECK(std::string(owned_path.get()) == "out/capi_report");

  char* overridden = nullptr;
  REQUIRE(hpd_config_with_overrides(kQuickConfig, 1, 777, "elsewhere", &overridden) == HPD_OK);
  ApiString owned_override(overridden);
  CHECK(std::string(owned_override.get()).find("777") != std::string::npos);
  CHECK(std::string(owned_override.get()).find("elsewhere") != std::string::npos);

  hpd_poly* f = nullptr;
  REQUIRE(hpd_poly_from_config(kQuickConfig, &f) == HPD_OK);
  uint32_t length = 0;
  CHECK(hpd_poly_length(f, &length) == HPD_OK);
  CHECK(length == 12);
  hpd_poly_free(f);

  char* means = nullptr;
  REQUIRE(hpd_means_csv(kQuickConfig, &means) == HPD_OK);
  ApiString owned_means(means);
  CHECK(std::string(owned_means.get()).rfind("method,p,sigma,T_or_samples,value,stderr", 0) ==
        0);
}

}  // TEST_SUITE
