#pragma once

// Riesz means of first kind
//
//   R_N^k f(s) = sum_{n<N} a_n (1 - ln n / ln N)^k n^{-s},
//
// their vertical-line contour representation, and the Hankel kernel identity
// as a numeric check.

#include "hpdirichlet/series.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hpd {

struct RieszParams {
  std::uint32_t N;        // smoothing length, >= 2
  double k;               // order, > 0 (the contour form needs k > 1)
  double contour_x = 0.0;   // contour abscissa; <= 0 means "use k"
  double y_cutoff = 0.0;    // contour truncation; <= 0 means auto from the tail target
  RieszParams(std::uint32_t N_, double k_);
  double abscissa() const noexcept { return contour_x > 0.0 ? contour_x : k; }
};

// The n = N term has weight exactly 0 and is dropped.
std::complex<double> riesz_mean(const DirichletPolynomial& f, const RieszParams& params,
                                std::complex<double> s);

struct ContourValue {
  std::complex<double> value;
  double tail_bound = 0.0;  // truncation of the contour beyond |y| = cutoff
  double quad_error = 0.0;  // refinement estimate of the Simpson error
  double bound() const noexcept { return tail_bound + quad_error; }
};

// Gamma(k+1) int f(s + z/ln N) e^z z^{-(k+1)} dy / 2pi over |y| <= cutoff,
// z = x + iy. Requires k > 1, sigma > 0, x > 0.
ContourValue riesz_contour(const DirichletPolynomial& f, const RieszParams& params,
                           std::complex<double> s);

// | Gamma(k+1) int_{|y|<=cutoff} e^{u(x+iy)} (x+iy)^{-(k+1)} dy / 2pi - target |
// with target u^k for u >= 0 and 0 for u < 0. Requires k > 1, x > 0.
double hankel_residual(double u, double k, double x, double y_cutoff);

// |R_N^k f(s) - f(s)| along an increasing list of N.
std::vector<double> convergence_study(const DirichletPolynomial& f, double k,
                                      std::complex<double> s,
                                      std::span<const std::uint32_t> N_list);

}  // namespace hpd
