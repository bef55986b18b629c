#include "hpdirichlet/series.hpp"

#include "hpdirichlet/coverage.hpp"
#include "hpdirichlet/numeric.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hpd {

namespace {

std::shared_ptr<const std::vector<double>> build_log_table(std::size_t n) {
  auto table = std::make_shared<std::vector<double>>(n);
  for (std::size_t i = 0; i < n; ++i) (*table)[i] = std::log(static_cast<double>(i + 1));
  return table;
}

void require_finite(const std::vector<std::complex<double>>& coeffs) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!std::isfinite(coeffs[i].real()) || !std::isfinite(coeffs[i].imag()))
      throw std::invalid_argument("DirichletPolynomial: coefficient a_" +
                                  std::to_string(i + 1) + " is not finite");
  }
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double sigma_, double t_) : sigma(sigma_), t(t_) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma) || !std::isfinite(t))
    throw std::invalid_argument("HalfPlanePoint: requires finite sigma >= 0");
}

DirichletPolynomial::DirichletPolynomial()
    : coeffs_(1, std::complex<double>{0.0, 0.0}), log_n_(build_log_table(1)) {}

DirichletPolynomial::DirichletPolynomial(std::vector<std::complex<double>> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("DirichletPolynomial: needs at least one coefficient");
  require_finite(coeffs);
  coeffs_ = std::move(coeffs);
  log_n_ = build_log_table(coeffs_.size());
}

DirichletPolynomial::DirichletPolynomial(std::vector<std::complex<double>> coeffs,
                                         std::shared_ptr<const std::vector<double>> logs)
    : coeffs_(std::move(coeffs)), log_n_(std::move(logs)) {}

DirichletPolynomial DirichletPolynomial::unit_coefficient(std::uint32_t n,
                                                          std::complex<double> value,
                                                          std::uint32_t length) {
  if (n == 0) throw std::invalid_argument("unit_coefficient: index starts at 1");
  std::vector<std::complex<double>> coeffs(std::max(n, std::max(length, 1u)));
  coeffs[n - 1] = value;
  return DirichletPolynomial(std::move(coeffs));
}

std::uint32_t DirichletPolynomial::length() const noexcept {
  return static_cast<std::uint32_t>(coeffs_.size());
}

std::complex<double> DirichletPolynomial::coefficient(std::uint32_t n) const {
  if (n == 0 || n > coeffs_.size())
    throw std::out_of_range("coefficient: index " + std::to_string(n) + " outside 1.." +
                            std::to_string(coeffs_.size()));
  return coeffs_[n - 1];
}

std::span<const std::complex<double>> DirichletPolynomial::coefficients() const noexcept {
  return coeffs_;
}

std::span<const double> DirichletPolynomial::log_table() const noexcept { return *log_n_; }

double DirichletPolynomial::abs_sum() const noexcept {
  KahanSum s;
  for (const auto& a : coeffs_) s.add(std::abs(a));
  return s.value();
}

double DirichletPolynomial::abs2_sum() const noexcept {
  KahanSum s;
  for (const auto& a : coeffs_) s.add(std::norm(a));
  return s.value();
}

std::string DirichletPolynomial::to_json() const {
  nlohmann::json j;
  j["n_max"] = coeffs_.size();
  auto& arr = j["coeffs"] = nlohmann::json::array();
  for (const auto& a : coeffs_) arr.push_back({a.real(), a.imag()});
  return j.dump();
}

DirichletPolynomial DirichletPolynomial::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_max") || !j.contains("coeffs"))
    throw std::invalid_argument("polynomial JSON: expected { n_max, coeffs }");
  const auto n_max = j.at("n_max").get<std::uint64_t>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || arr.size() != n_max)
    throw std::invalid_argument("polynomial JSON: coeffs length must equal n_max");
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("polynomial JSON: each coefficient is [re, im]");
    coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  return DirichletPolynomial(std::move(coeffs));
}

namespace detail {

std::complex<double> eval_sum(std::span<const std::complex<double>> coeffs,
                              std::span<const double> logs,
                              std::complex<double> s) noexcept {
  const double sigma = s.real();
  const double t = s.imag();
  KahanComplexSum sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double ln = logs[i];
    const double damp = std::exp(-sigma * ln);
    sum.add(coeffs[i] * (damp * cis(-t * ln)));
  }
  return sum.value();
}

std::complex<double> boundary_sum(std::span<const std::complex<double>> coeffs,
                                  std::span<const double> logs, double t) noexcept {
  KahanComplexSum sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    sum.add(coeffs[i] * cis(-t * logs[i]));
  return sum.value();
}

}  // namespace detail

std::complex<double> eval(const DirichletPolynomial& f, std::complex<double> s) {
  coverage::mark(coverage::Op::series_eval);
  return detail::eval_sum(f.coefficients(), f.log_table(), s);
}

std::complex<double> eval(const DirichletPolynomial& f, HalfPlanePoint s) {
  return eval(f, s.to_complex());
}

DirichletPolynomial translate_h(const DirichletPolynomial& f, double kappa) {
  coverage::mark(coverage::Op::series_translate_h);
  if (!(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("translate_h: requires finite kappa >= 0");
  std::vector<std::complex<double>> coeffs(f.coeffs_);
  const auto& logs = *f.log_n_;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= std::exp(-kappa * logs[i]);
  return DirichletPolynomial(std::move(coeffs), f.log_n_);
}

DirichletPolynomial translate_v(const DirichletPolynomial& f, double tau) {
  coverage::mark(coverage::Op::series_translate_v);
  if (!std::isfinite(tau)) throw std::invalid_argument("translate_v: tau must be finite");
  std::vector<std::complex<double>> coeffs(f.coeffs_);
  const auto& logs = *f.log_n_;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= cis(-tau * logs[i]);
  return DirichletPolynomial(std::move(coeffs), f.log_n_);
}

DirichletPolynomial dirichlet_product(const DirichletPolynomial& f,
                                      const DirichletPolynomial& g) {
  const std::uint64_t nf = f.length(), ng = g.length();
  const std::uint64_t nk = nf * ng;
  if (nk > 8'000'000ull)
    throw std::invalid_argument("dirichlet_product: result degree too large");
  std::vector<std::complex<double>> out(nk);
  const auto fa = f.coefficients();
  const auto gb = g.coefficients();
  for (std::uint64_t m = 1; m <= nf; ++m) {
    const auto am = fa[m - 1];
    if (am == std::complex<double>{}) continue;
    for (std::uint64_t n = 1; n <= ng; ++n) out[m * n - 1] += am * gb[n - 1];
  }
  return DirichletPolynomial(std::move(out));
}

}  // namespace hpd
