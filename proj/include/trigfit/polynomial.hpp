#pragma once

#include <complex>
#include <span>
#include <vector>

#include "trigfit/sampling.hpp"

namespace trigfit {

/// p(x) = sum_{k=-M}^{M} c_k e^{2 pi i k x}, coefficients stored from k = -M.
class TrigPolynomial {
 public:
  TrigPolynomial() : coeffs_(1, Complex{}) {}
  explicit TrigPolynomial(std::vector<Complex> coeffs);

  static TrigPolynomial zero(int degree);

  int degree() const { return static_cast<int>(coeffs_.size() / 2); }
  std::span<const Complex> coefficients() const { return coeffs_; }
  Complex coefficient(int k) const;

  Complex operator()(double x) const;

 private:
  std::vector<Complex> coeffs_;
};

/// sum_j |p(x_j) - s_j|^2 w_j by direct evaluation, O(rM).
double weighted_residual(const SampleSet1D& samples, const TrigPolynomial& poly);

/// p(j/n) for j = 0..n-1 via a zero-padded inverse DFT. Requires n >= 2M+1.
std::vector<Complex> evaluate_on_grid(const TrigPolynomial& poly, std::size_t n);

}  // namespace trigfit
