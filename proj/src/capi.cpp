#include "hpdirichlet.h"

#include "hpdirichlet/characters.hpp"
#include "hpdirichlet/config.hpp"
#include "hpdirichlet/means.hpp"
#include "hpdirichlet/numeric.hpp"
#include "hpdirichlet/parallel.hpp"
#include "hpdirichlet/poisson.hpp"
#include "hpdirichlet/report.hpp"
#include "hpdirichlet/riesz.hpp"
#include "hpdirichlet/series.hpp"
#include "hpdirichlet/suites.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <new>
#include <numbers>
#include <sstream>
#include <string>

// Opaque handle types are thin wrappers over the C++ values.
struct hpd_poly {
  hpd::DirichletPolynomial value;
};
struct hpd_character {
  hpd::Character value;
};
struct hpd_report {
  hpd::VerificationReport value;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* what) { t_last_error = what == nullptr ? "" : what; }

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(::operator new(text.size() + 1, std::nothrow));
  if (out == nullptr) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Exception-to-status translation shared by every entry point.
template <typename Fn>
hpd_status guarded(Fn&& fn) {
  try {
    fn();
    return HPD_OK;
  } catch (const hpd::ConfigError& e) {
    set_error(e.what());
    return HPD_PARSE_ERROR;
  } catch (const hpd::InsufficientCharacterLength& e) {
    set_error(e.what());
    return HPD_DOMAIN_ERROR;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return HPD_DOMAIN_ERROR;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return HPD_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return HPD_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    set_error(e.what());
    return HPD_PARSE_ERROR;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return HPD_IO_ERROR;
  } catch (const std::exception& e) {
    set_error(e.what());
    return HPD_INTERNAL_ERROR;
  } catch (...) {
    set_error("unknown error");
    return HPD_INTERNAL_ERROR;
  }
}

hpd_status require(bool ok, const char* message) {
  if (ok) return HPD_OK;
  set_error(message);
  return HPD_INVALID_ARGUMENT;
}

hpd_status out_string(const std::string& text, char** out) {
  char* copy = dup_string(text);
  if (copy == nullptr) {
    set_error("out of memory");
    return HPD_INTERNAL_ERROR;
  }
  *out = copy;
  return HPD_OK;
}

hpd::GeneratorSpec parse_generator_json(const char* text) {
  // Reuse the config validator by wrapping the generator into a minimal config.
  nlohmann::json wrapper;
  wrapper["polynomial"] = nlohmann::json::parse(text);
  return hpd::ExperimentConfig::from_json(wrapper.dump()).polynomial;
}

}  // namespace

extern "C" {

const char* hpd_version(void) { return "0.1.0"; }

const char* hpd_status_name(hpd_status status) {
  switch (status) {
    case HPD_OK: return "ok";
    case HPD_INVALID_ARGUMENT: return "invalid argument";
    case HPD_DOMAIN_ERROR: return "domain error";
    case HPD_PARSE_ERROR: return "parse error";
    case HPD_IO_ERROR: return "io error";
    case HPD_INTERNAL_ERROR: return "internal error";
  }
  return "unknown";
}

const char* hpd_last_error(void) { return t_last_error.c_str(); }

void hpd_free_string(char* text) { ::operator delete(text); }

void hpd_set_max_threads(int32_t n) { hpd::set_max_threads(n); }

/* ---- polynomials ------------------------------------------------------- */

hpd_status hpd_poly_from_json(const char* text, hpd_poly** out) {
  if (auto st = require(text && out, "hpd_poly_from_json: null argument")) return st;
  // any rejection of the text counts as a parse failure on this surface
  auto st = guarded([&] { *out = new hpd_poly{hpd::DirichletPolynomial::from_json(text)}; });
  return st == HPD_INVALID_ARGUMENT ? HPD_PARSE_ERROR : st;
}

hpd_status hpd_poly_to_json(const hpd_poly* f, char** out_text) {
  if (auto st = require(f && out_text, "hpd_poly_to_json: null argument")) return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] { rc = out_string(f->value.to_json(), out_text); });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_poly_generate(const char* generator_json, uint64_t seed, hpd_poly** out) {
  if (auto st = require(generator_json && out, "hpd_poly_generate: null argument")) return st;
  return guarded([&] {
    *out = new hpd_poly{hpd::generate_polynomial(parse_generator_json(generator_json), seed)};
  });
}

hpd_status hpd_poly_length(const hpd_poly* f, uint32_t* out_length) {
  if (auto st = require(f && out_length, "hpd_poly_length: null argument")) return st;
  *out_length = f->value.length();
  return HPD_OK;
}

hpd_status hpd_poly_eval(const hpd_poly* f, double sigma, double t, double out_re_im[2]) {
  if (auto st = require(f && out_re_im, "hpd_poly_eval: null argument")) return st;
  return guarded([&] {
    const auto v = hpd::eval(f->value, std::complex<double>{sigma, t});
    out_re_im[0] = v.real();
    out_re_im[1] = v.imag();
  });
}

hpd_status hpd_poly_translate_h(const hpd_poly* f, double kappa, hpd_poly** out) {
  if (auto st = require(f && out, "hpd_poly_translate_h: null argument")) return st;
  return guarded([&] { *out = new hpd_poly{hpd::translate_h(f->value, kappa)}; });
}

hpd_status hpd_poly_translate_v(const hpd_poly* f, double tau, hpd_poly** out) {
  if (auto st = require(f && out, "hpd_poly_translate_v: null argument")) return st;
  return guarded([&] { *out = new hpd_poly{hpd::translate_v(f->value, tau)}; });
}

void hpd_poly_free(hpd_poly* f) { delete f; }

/* ---- characters --------------------------------------------------------- */

hpd_status hpd_character_sample(uint32_t prime_count, uint64_t seed, hpd_character** out) {
  if (auto st = require(out != nullptr, "hpd_character_sample: null output")) return st;
  return guarded([&] { *out = new hpd_character{hpd::sample_haar(prime_count, seed)}; });
}

hpd_status hpd_character_from_json(const char* text, hpd_character** out) {
  if (auto st = require(text && out, "hpd_character_from_json: null argument")) return st;
  auto st = guarded([&] { *out = new hpd_character{hpd::Character::from_json(text)}; });
  return st == HPD_INVALID_ARGUMENT ? HPD_PARSE_ERROR : st;
}

hpd_status hpd_character_to_json(const hpd_character* chi, char** out_text) {
  if (auto st = require(chi && out_text, "hpd_character_to_json: null argument")) return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] { rc = out_string(chi->value.to_json(), out_text); });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_character_twist(const hpd_character* chi, double tau, hpd_character** out) {
  if (auto st = require(chi && out, "hpd_character_twist: null argument")) return st;
  return guarded([&] { *out = new hpd_character{hpd::kronecker_twist(chi->value, tau)}; });
}

hpd_status hpd_character_eval(const hpd_character* chi, uint32_t n, double out_re_im[2]) {
  if (auto st = require(chi && out_re_im, "hpd_character_eval: null argument")) return st;
  return guarded([&] {
    if (n == 0) throw std::invalid_argument("hpd_character_eval: n must be >= 1");
    if (n > 1000000) throw std::invalid_argument("hpd_character_eval: n above 1e6");
    const hpd::SpfTable spf(std::max<uint32_t>(n, 2));
    const auto v = hpd::char_eval(chi->value, n, spf);
    out_re_im[0] = v.real();
    out_re_im[1] = v.imag();
  });
}

hpd_status hpd_boundary_eval(const hpd_poly* f, const hpd_character* chi,
                             double out_re_im[2]) {
  if (auto st = require(f && chi && out_re_im, "hpd_boundary_eval: null argument")) return st;
  return guarded([&] {
    const hpd::SpfTable spf(std::max<uint32_t>(f->value.length(), 2));
    const auto v = hpd::boundary_eval(f->value, chi->value, spf);
    out_re_im[0] = v.real();
    out_re_im[1] = v.imag();
  });
}

hpd_status hpd_vertical_limit(const hpd_poly* f, const hpd_character* chi, hpd_poly** out) {
  if (auto st = require(f && chi && out, "hpd_vertical_limit: null argument")) return st;
  return guarded([&] {
    const hpd::SpfTable spf(std::max<uint32_t>(f->value.length(), 2));
    *out = new hpd_poly{hpd::vertical_limit(f->value, chi->value, spf)};
  });
}

void hpd_character_free(hpd_character* chi) { delete chi; }

/* ---- means --------------------------------------------------------------- */

hpd_status hpd_exact_mean_2(const hpd_poly* f, double sigma, double* out_value) {
  if (auto st = require(f && out_value, "hpd_exact_mean_2: null argument")) return st;
  return guarded([&] { *out_value = hpd::exact_mean_2(f->value, sigma).value; });
}

hpd_status hpd_exact_finite_mean_2(const hpd_poly* f, double sigma, double horizon,
                                   double* out_value) {
  if (auto st = require(f && out_value, "hpd_exact_finite_mean_2: null argument")) return st;
  return guarded([&] { *out_value = hpd::exact_finite_mean_2(f->value, sigma, horizon); });
}

hpd_status hpd_time_mean(const hpd_poly* f, double sigma, double p, double horizon,
                         uint64_t steps, double* out_value, double* out_error_bound) {
  if (auto st = require(f && out_value, "hpd_time_mean: null argument")) return st;
  return guarded([&] {
    uint64_t n = steps;
    if (n == 0)
      n = 2 * std::max<uint64_t>(hpd::time_mean_min_steps(f->value, horizon), 64);
    const auto est = hpd::time_mean(f->value, sigma, p, horizon, n);
    *out_value = est.value;
    if (out_error_bound) *out_error_bound = est.error;
  });
}

hpd_status hpd_mc_torus_mean(const hpd_poly* f, double p, uint64_t samples, uint64_t seed,
                             double* out_value, double* out_stderr) {
  if (auto st = require(f && out_value, "hpd_mc_torus_mean: null argument")) return st;
  return guarded([&] {
    const auto est = hpd::mc_torus_mean(f->value, p, samples, seed);
    *out_value = est.value;
    if (out_stderr) *out_stderr = est.error;
  });
}

/* ---- riesz ---------------------------------------------------------------- */

hpd_status hpd_riesz_mean(const hpd_poly* f, uint32_t smoothing_n, double order,
                          double sigma, double t, double out_re_im[2]) {
  if (auto st = require(f && out_re_im, "hpd_riesz_mean: null argument")) return st;
  return guarded([&] {
    const hpd::RieszParams params(smoothing_n, order);
    const auto v = hpd::riesz_mean(f->value, params, std::complex<double>{sigma, t});
    out_re_im[0] = v.real();
    out_re_im[1] = v.imag();
  });
}

hpd_status hpd_riesz_contour(const hpd_poly* f, uint32_t smoothing_n, double order,
                             double contour_x, double y_cutoff, double sigma, double t,
                             double out_re_im[2], double* out_error_bound) {
  if (auto st = require(f && out_re_im, "hpd_riesz_contour: null argument")) return st;
  return guarded([&] {
    hpd::RieszParams params(smoothing_n, order);
    params.contour_x = contour_x;
    params.y_cutoff = y_cutoff;
    const auto v = hpd::riesz_contour(f->value, params, std::complex<double>{sigma, t});
    out_re_im[0] = v.value.real();
    out_re_im[1] = v.value.imag();
    if (out_error_bound) *out_error_bound = v.bound();
  });
}

hpd_status hpd_hankel_residual(double u, double order, double x, double y_cutoff,
                               double* out_residual) {
  if (auto st = require(out_residual != nullptr, "hpd_hankel_residual: null output")) return st;
  return guarded([&] { *out_residual = hpd::hankel_residual(u, order, x, y_cutoff); });
}

/* ---- poisson -------------------------------------------------------------- */

hpd_status hpd_poisson_extend(const hpd_poly* f, const hpd_character* chi, double sigma,
                              double t, double p, double cert_T_max, double cert_grid_step,
                              double window, double step, double out_re_im[2],
                              double* out_error_bound) {
  if (auto st = require(f && chi && out_re_im, "hpd_poisson_extend: null argument")) return st;
  return guarded([&] {
    const hpd::SpfTable spf(std::max<uint32_t>(f->value.length(), 2));
    const auto cert = hpd::estimate_Cf(f->value, chi->value, p, cert_T_max, cert_grid_step);
    hpd::PoissonQuadratureSpec spec;
    spec.trunc_T = window;
    spec.step = step;
    const auto pv = hpd::poisson_extend(f->value, chi->value, hpd::HalfPlanePoint(sigma, t),
                                        cert, spec, spf);
    out_re_im[0] = pv.value.real();
    out_re_im[1] = pv.value.imag();
    if (out_error_bound) *out_error_bound = pv.bound();
  });
}

/* ---- harness -------------------------------------------------------------- */

hpd_status hpd_config_validate(const char* config_json) {
  if (auto st = require(config_json != nullptr, "hpd_config_validate: null argument")) return st;
  return guarded([&] { hpd::ExperimentConfig::from_json(config_json); });
}

hpd_status hpd_config_canonical(const char* config_json, char** out_json) {
  if (auto st = require(config_json && out_json, "hpd_config_canonical: null argument"))
    return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] {
    rc = out_string(hpd::ExperimentConfig::from_json(config_json).to_json(), out_json);
  });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_config_output_path(const char* config_json, char** out_path) {
  if (auto st = require(config_json && out_path, "hpd_config_output_path: null argument"))
    return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] {
    rc = out_string(hpd::ExperimentConfig::from_json(config_json).output_path, out_path);
  });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_config_with_overrides(const char* config_json, int has_seed, uint64_t seed,
                                     const char* output_path, char** out_json) {
  if (auto st = require(config_json && out_json, "hpd_config_with_overrides: null argument"))
    return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] {
    auto config = hpd::ExperimentConfig::from_json(config_json);
    if (has_seed) config.seed = seed;
    if (output_path != nullptr) config.output_path = output_path;
    rc = out_string(config.to_json(), out_json);
  });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_poly_from_config(const char* config_json, hpd_poly** out) {
  if (auto st = require(config_json && out, "hpd_poly_from_config: null argument")) return st;
  return guarded([&] {
    const auto config = hpd::ExperimentConfig::from_json(config_json);
    *out = new hpd_poly{hpd::generate_polynomial(config.polynomial, config.seed)};
  });
}

hpd_status hpd_suite_run(const char* config_json, const char* suite_name, hpd_report** out) {
  if (auto st = require(config_json && suite_name && out, "hpd_suite_run: null argument"))
    return st;
  return guarded([&] {
    const auto config = hpd::ExperimentConfig::from_json(config_json);
    *out = new hpd_report{hpd::run_suite(config, suite_name)};
  });
}

hpd_status hpd_suites_run_all(const char* config_json, hpd_report** out) {
  if (auto st = require(config_json && out, "hpd_suites_run_all: null argument")) return st;
  return guarded([&] {
    const auto config = hpd::ExperimentConfig::from_json(config_json);
    *out = new hpd_report{hpd::run_suites(config)};
  });
}

hpd_status hpd_report_row_count(const hpd_report* report, uint64_t* out_rows) {
  if (auto st = require(report && out_rows, "hpd_report_row_count: null argument")) return st;
  *out_rows = report->value.rows().size();
  return HPD_OK;
}

hpd_status hpd_report_counts(const hpd_report* report, uint64_t* out_pass, uint64_t* out_fail,
                             uint64_t* out_inconclusive) {
  if (auto st = require(report != nullptr, "hpd_report_counts: null argument")) return st;
  const auto totals = report->value.totals();
  if (out_pass) *out_pass = totals.pass;
  if (out_fail) *out_fail = totals.fail;
  if (out_inconclusive) *out_inconclusive = totals.inconclusive;
  return HPD_OK;
}

hpd_status hpd_report_to_csv(const hpd_report* report, char** out_text) {
  if (auto st = require(report && out_text, "hpd_report_to_csv: null argument")) return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] { rc = out_string(report->value.to_csv(), out_text); });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_report_summary_json(const hpd_report* report, char** out_text) {
  if (auto st = require(report && out_text, "hpd_report_summary_json: null argument")) return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] { rc = out_string(report->value.summary_json(), out_text); });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_report_wall_seconds(const hpd_report* report, double* out_seconds) {
  if (auto st = require(report && out_seconds, "hpd_report_wall_seconds: null argument"))
    return st;
  *out_seconds = report->value.wall_seconds();
  return HPD_OK;
}

hpd_status hpd_report_write(const hpd_report* report, const char* base_path) {
  if (auto st = require(report && base_path, "hpd_report_write: null argument")) return st;
  return guarded([&] { hpd::emit_report(report->value, base_path); });
}

void hpd_report_free(hpd_report* report) { delete report; }

hpd_status hpd_report_audit_csv(const char* csv_text, uint64_t* out_mismatches,
                                uint64_t* out_pass, uint64_t* out_fail,
                                uint64_t* out_inconclusive) {
  if (auto st = require(csv_text && out_mismatches, "hpd_report_audit_csv: null argument"))
    return st;
  return guarded([&] {
    const auto rows = hpd::VerificationReport::parse_csv(csv_text);
    uint64_t mism = 0, pass = 0, fail = 0, inconclusive = 0;
    for (const auto& row : rows) {
      if (hpd::derive_status(row.measured, row.bound, row.tolerance) != row.status) ++mism;
      switch (row.status) {
        case hpd::CheckStatus::pass: ++pass; break;
        case hpd::CheckStatus::fail: ++fail; break;
        case hpd::CheckStatus::inconclusive: ++inconclusive; break;
      }
    }
    *out_mismatches = mism;
    if (out_pass) *out_pass = pass;
    if (out_fail) *out_fail = fail;
    if (out_inconclusive) *out_inconclusive = inconclusive;
  });
}

/* ---- CSV renderings used by the CLI ---------------------------------------- */

hpd_status hpd_means_csv(const char* config_json, char** out_csv) {
  if (auto st = require(config_json && out_csv, "hpd_means_csv: null argument")) return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] {
    const auto config = hpd::ExperimentConfig::from_json(config_json);
    const auto f = hpd::generate_polynomial(config.polynomial, config.seed);
    std::ostringstream out;
    out << "method,p,sigma,T_or_samples,value,stderr\n";
    auto emit = [&](const hpd::MeanEstimate& est) {
      const char* method = est.method == hpd::MeanMethod::exact2
                               ? "exact2"
                               : est.method == hpd::MeanMethod::time_average ? "time-average"
                                                                             : "monte-carlo";
      out << method << ',' << hpd::format_double(est.p) << ','
          << hpd::format_double(est.sigma) << ','
          << hpd::format_double(est.horizon_or_samples) << ','
          << hpd::format_double(est.value) << ',' << hpd::format_double(est.error) << '\n';
    };
    for (const double p : config.p_values) {
      for (const double sigma : config.sigma_grid) {
        if (p == 2.0) emit(hpd::exact_mean_2(f, sigma));
        // M_p(sigma, f) through the torus mean of the shifted polynomial
        auto est = hpd::mc_torus_mean(hpd::translate_h(f, sigma), p, config.mc_samples,
                                      config.seed);
        est.sigma = sigma;
        emit(est);
      }
      const double T = std::min(config.T, 2000.0);
      const auto steps = 2 * std::max<uint64_t>(hpd::time_mean_min_steps(f, T), 64);
      emit(hpd::time_mean(f, config.sigma_grid.front(), p, T, steps));
    }
    rc = out_string(out.str(), out_csv);
  });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_riesz_csv(const char* config_json, char** out_csv) {
  if (auto st = require(config_json && out_csv, "hpd_riesz_csv: null argument")) return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] {
    const auto config = hpd::ExperimentConfig::from_json(config_json);
    const auto f = hpd::generate_polynomial(config.polynomial, config.seed);
    const std::complex<double> s{0.5, 0.0};
    const std::vector<uint32_t> Ns = {100, 1000, 10000, 100000};
    std::ostringstream out;
    out << "N,k,sigma,t,abs_error,bound\n";
    for (const double k : {2.0, 3.0, 3.5}) {
      const auto errors = hpd::convergence_study(f, k, s, Ns);
      for (std::size_t i = 0; i < Ns.size(); ++i) {
        out << Ns[i] << ',' << hpd::format_double(k) << ',' << hpd::format_double(s.real())
            << ',' << hpd::format_double(s.imag()) << ',' << hpd::format_double(errors[i])
            << ',' << hpd::format_double(0.0) << '\n';
      }
    }
    // One contour instance with its reported bound.
    hpd::RieszParams params(100, 3.5);
    const auto contour = hpd::riesz_contour(f, params, s);
    const auto direct = hpd::riesz_mean(f, params, s);
    out << params.N << ',' << hpd::format_double(params.k) << ','
        << hpd::format_double(s.real()) << ',' << hpd::format_double(s.imag()) << ','
        << hpd::format_double(std::abs(contour.value - direct)) << ','
        << hpd::format_double(contour.bound()) << '\n';
    rc = out_string(out.str(), out_csv);
  });
  return st != HPD_OK ? st : rc;
}

hpd_status hpd_poisson_csv(const char* config_json, char** out_csv) {
  if (auto st = require(config_json && out_csv, "hpd_poisson_csv: null argument")) return st;
  hpd_status rc = HPD_OK;
  auto st = guarded([&] {
    const auto config = hpd::ExperimentConfig::from_json(config_json);
    const auto f = hpd::generate_polynomial(config.polynomial, config.seed);
    const hpd::SpfTable spf(std::max<uint32_t>(f.length(), 2));
    const auto J = std::max<uint32_t>(
        1, static_cast<uint32_t>(hpd::prime_count_upto(std::max<uint32_t>(f.length(), 2))));
    const auto chi = hpd::sample_haar(J, config.seed);
    const double ln_n = std::log(static_cast<double>(std::max<uint32_t>(f.length(), 2)));
    const auto cert = hpd::estimate_Cf(f, chi, 2.0, std::min(config.T, 1000.0),
                                       0.9 * std::numbers::pi / (10.0 * ln_n));
    const auto g = hpd::vertical_limit(f, chi, spf);
    std::ostringstream out;
    out << "check,point,measured,bound,margin,pass\n";
    const std::array<std::complex<double>, 3> points = {
        std::complex<double>{0.8, 0.3}, {0.2, 0.0}, {0.1, 5.0}};
    for (const auto sc : points) {
      hpd::PoissonQuadratureSpec spec;
      spec.step = sc.real() / 12.0;
      spec.trunc_T = 1592.0 * sc.real();
      const auto pv =
          hpd::poisson_extend(f, chi, hpd::HalfPlanePoint(sc.real(), sc.imag()), cert, spec, spf);
      const double measured = std::abs(pv.value - hpd::eval(g, sc));
      const double bound = pv.bound();
      out << "extend_vs_direct," << hpd::format_double(sc.real()) << '+'
          << hpd::format_double(sc.imag()) << "i," << hpd::format_double(measured) << ','
          << hpd::format_double(bound) << ',' << hpd::format_double(bound - measured) << ','
          << (measured <= bound ? "pass" : "fail") << '\n';
    }
    rc = out_string(out.str(), out_csv);
  });
  return st != HPD_OK ? st : rc;
}

}  // extern "C"
