#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "trigfit/sampling.hpp"

namespace trigfit::fixtures {

// Jittered grid: x_j = (j + 1/2 + U(-a, a)) / r, so every periodic gap is at
// most (1 + 2a)/r.
inline std::vector<double> jittered_points(std::size_t r, double jitter, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-jitter, jitter);
  std::vector<double> x(r);
  for (std::size_t j = 0; j < r; ++j) x[j] = (static_cast<double>(j) + 0.5 + d(rng)) / static_cast<double>(r);
  return x;
}

// Sorted uniform random points in [0,1) with a minimum separation.
inline std::vector<double> random_points(std::size_t r, std::mt19937_64& rng, double min_gap = 1e-4) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  for (;;) {
    std::vector<double> x(r);
    for (auto& v : x) v = d(rng);
    std::sort(x.begin(), x.end());
    bool ok = true;
    for (std::size_t j = 1; j < r; ++j) ok = ok && x[j] - x[j - 1] > min_gap;
    if (r > 1) ok = ok && x[0] + 1.0 - x[r - 1] > min_gap;
    if (ok) return x;
  }
}

inline std::vector<double> uniform_grid(std::size_t r) {
  std::vector<double> x(r);
  for (std::size_t j = 0; j < r; ++j) x[j] = static_cast<double>(j) / static_cast<double>(r);
  return x;
}

// Coefficients c_{-M..M} drawn uniformly from the unit disk.
inline std::vector<Complex> random_coeffs(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rad(0.0, 1.0), ang(0.0, 2.0 * M_PI);
  std::vector<Complex> c(2 * static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = std::polar(std::sqrt(rad(rng)), ang(rng));
  return c;
}

inline std::vector<Complex> random_values(std::size_t r, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<Complex> v(r);
  for (auto& s : v) s = {d(rng), d(rng)};
  return v;
}

inline Complex eval_direct(const std::vector<Complex>& c, double x) {
  const int m = static_cast<int>(c.size() / 2);
  Complex s{};
  for (int k = -m; k <= m; ++k) s += c[static_cast<std::size_t>(k + m)] * std::polar(1.0, 2.0 * M_PI * k * x);
  return s;
}

inline std::vector<Complex> sample(const std::vector<Complex>& c, const std::vector<double>& x) {
  std::vector<Complex> v;
  v.reserve(x.size());
  for (double xi : x) v.push_back(eval_direct(c, xi));
  return v;
}

inline double rel_err(const std::vector<Complex>& a, const Eigen::VectorXcd& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b(static_cast<Eigen::Index>(i)));
    den += std::norm(b(static_cast<Eigen::Index>(i)));
  }
  return std::sqrt(num / den);
}

inline double dist(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace trigfit::fixtures
