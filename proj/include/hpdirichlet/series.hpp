#pragma once

// Finite ordinary Dirichlet polynomials f(s) = sum_{n=1}^{N} a_n n^{-s},
// evaluated by compensated direct summation. Everything here is an immutable
// value; evaluation is pure and safe from any number of threads.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hpd {

// A point s = sigma + it of the closed right half-plane (sigma >= 0).
// Operations that need an interior point check in_interior() themselves.
struct HalfPlanePoint {
  double sigma = 0.0;
  double t = 0.0;
  HalfPlanePoint() = default;
  HalfPlanePoint(double sigma_, double t_);  // rejects sigma < 0 or non-finite
  bool in_interior(double kappa = 0.0) const noexcept { return sigma > kappa; }
  std::complex<double> to_complex() const noexcept { return {sigma, t}; }
  double abs() const noexcept { return std::hypot(sigma, t); }
};

class DirichletPolynomial {
public:
  DirichletPolynomial();  // the zero polynomial of declared length 1
  // Coefficients are dense, index i holds a_{i+1}. Rejects empty input and
  // non-finite components. Trailing zeros are kept; they define the length.
  explicit DirichletPolynomial(std::vector<std::complex<double>> coeffs);

  // a_n = value, all other coefficients zero; length = max(n, length).
  static DirichletPolynomial unit_coefficient(std::uint32_t n, std::complex<double> value,
                                              std::uint32_t length = 0);

  std::uint32_t length() const noexcept;  // declared N
  std::complex<double> coefficient(std::uint32_t n) const;  // 1-based
  std::span<const std::complex<double>> coefficients() const noexcept;
  // ln 1 .. ln N. Built once and shared across translates of the same family.
  std::span<const double> log_table() const noexcept;

  double abs_sum() const noexcept;   // sum |a_n|
  double abs2_sum() const noexcept;  // sum |a_n|^2

  // { "n_max": N, "coeffs": [[re, im], ...] }
  std::string to_json() const;
  static DirichletPolynomial from_json(const std::string& text);

private:
  DirichletPolynomial(std::vector<std::complex<double>> coeffs,
                      std::shared_ptr<const std::vector<double>> logs);
  std::vector<std::complex<double>> coeffs_;
  std::shared_ptr<const std::vector<double>> log_n_;
  friend DirichletPolynomial translate_h(const DirichletPolynomial&, double);
  friend DirichletPolynomial translate_v(const DirichletPolynomial&, double);
};

// sum a_n n^{-s}, ascending n with Kahan compensation.
std::complex<double> eval(const DirichletPolynomial& f, std::complex<double> s);
std::complex<double> eval(const DirichletPolynomial& f, HalfPlanePoint s);

// Horizontal translation: coefficients a_n n^{-kappa}; kappa >= 0.
DirichletPolynomial translate_h(const DirichletPolynomial& f, double kappa);

// Vertical translation: coefficients a_n n^{-i tau}; moduli preserved.
DirichletPolynomial translate_v(const DirichletPolynomial& f, double tau);

// Dirichlet convolution (f*g)_k = sum_{mn=k} a_m b_n; degree N_f * N_g.
DirichletPolynomial dirichlet_product(const DirichletPolynomial& f,
                                      const DirichletPolynomial& g);

namespace detail {
// Hot-path kernels without operation accounting.
std::complex<double> eval_sum(std::span<const std::complex<double>> coeffs,
                              std::span<const double> logs,
                              std::complex<double> s) noexcept;
// sum c_n exp(-i t ln n); quadratures predamp coefficients and call this.
std::complex<double> boundary_sum(std::span<const std::complex<double>> coeffs,
                                  std::span<const double> logs, double t) noexcept;
}  // namespace detail

}  // namespace hpd
