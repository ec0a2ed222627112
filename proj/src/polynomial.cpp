#include "trigfit/polynomial.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigfit/errors.hpp"
#include "trigfit/fft.hpp"

namespace trigfit {

TrigPolynomial::TrigPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 == 0) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient vector must have odd length");
  }
}

TrigPolynomial TrigPolynomial::zero(int degree) {
  return TrigPolynomial(std::vector<Complex>(2 * static_cast<std::size_t>(degree) + 1));
}

Complex TrigPolynomial::coefficient(int k) const {
  const int m = degree();
  if (k < -m || k > m) return {};
  return coeffs_[static_cast<std::size_t>(k + m)];
}

Complex TrigPolynomial::operator()(double x) const {
  const int m = degree();
  Complex sum{};
  for (int k = -m; k <= m; ++k) {
    sum += coeffs_[static_cast<std::size_t>(k + m)] *
           std::polar(1.0, 2.0 * std::numbers::pi * k * x);
  }
  return sum;
}

double weighted_residual(const SampleSet1D& samples, const TrigPolynomial& poly) {
  const auto x = samples.points();
  const auto s = samples.values();
  const auto w = samples.weights();
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) sum += std::norm(poly(x[j]) - s[j]) * w[j];
  return sum;
}

std::vector<Complex> evaluate_on_grid(const TrigPolynomial& poly, std::size_t n) {
  const int m = poly.degree();
  if (n < 2 * static_cast<std::size_t>(m) + 1) {
    throw Error(ErrorCode::GridTooSmall, "grid of " + std::to_string(n) +
                                             " points cannot resolve degree " + std::to_string(m));
  }
  std::vector<Complex> grid(n);
  const long ln = static_cast<long>(n);
  for (int k = -m; k <= m; ++k) grid[static_cast<std::size_t>(((k % ln) + ln) % ln)] = poly.coefficient(k);
  fft::transform(grid, fft::Direction::backward);
  return grid;
}

}  // namespace trigfit
