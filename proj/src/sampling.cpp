#include "trigfit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trigfit/errors.hpp"

namespace trigfit {

void check_points(std::span<const double> points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateSet, "empty sampling set");
  for (std::size_t j = 0; j < points.size(); ++j) {
    const double x = points[j];
    if (!(x >= 0.0 && x < 1.0)) {
      throw Error(ErrorCode::OutOfDomain,
                  "point " + std::to_string(j) + " = " + std::to_string(x) + " outside [0,1)");
    }
    if (j > 0 && !(x > points[j - 1])) {
      throw Error(ErrorCode::NonMonotonePoints,
                  "points not strictly increasing at index " + std::to_string(j));
    }
  }
}

std::vector<double> voronoi_weights(std::span<const double> points) {
  const std::size_t r = points.size();
  if (r == 0) throw Error(ErrorCode::DegenerateSet, "no points");
  std::vector<double> w(r);
  for (std::size_t j = 0; j < r; ++j) {
    const double prev = j == 0 ? points[r - 1] - 1.0 : points[j - 1];
    const double next = j + 1 == r ? points[0] + 1.0 : points[j + 1];
    w[j] = 0.5 * (next - prev);
  }
  return w;
}

std::vector<double> uniform_weights(std::size_t count) {
  if (count == 0) throw Error(ErrorCode::DegenerateSet, "no points");
  return std::vector<double>(count, 1.0 / static_cast<double>(count));
}

double mesh_norm(std::span<const double> points) {
  if (points.empty()) return 1.0;
  double gap = points.front() + 1.0 - points.back();
  for (std::size_t j = 1; j < points.size(); ++j) gap = std::max(gap, points[j] - points[j - 1]);
  return gap;
}

SampleSet1D SampleSet1D::validate(std::vector<double> points, std::vector<Complex> values,
                                  std::optional<std::vector<double>> weights) {
  if (points.empty()) throw Error(ErrorCode::DegenerateSet, "empty sampling set");
  if (values.size() != points.size()) {
    throw Error(ErrorCode::LengthMismatch, "points and values differ in length");
  }
  check_points(points);
  std::vector<double> w;
  if (weights) {
    if (weights->size() != points.size()) {
      throw Error(ErrorCode::LengthMismatch, "points and weights differ in length");
    }
    w = std::move(*weights);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!(w[j] > 0.0) || !std::isfinite(w[j])) {
        throw Error(ErrorCode::NonPositiveWeight, "weight " + std::to_string(j) + " not positive");
      }
    }
  } else {
    w = voronoi_weights(points);
  }
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidArgument, "non-finite sample value");
    }
  }
  return SampleSet1D(std::move(points), std::move(values), std::move(w));
}

SampleSet1D SampleSet1D::with_uniform_weights(std::vector<double> points,
                                              std::vector<Complex> values) {
  auto w = uniform_weights(points.size());
  return validate(std::move(points), std::move(values), std::move(w));
}

double SampleSet1D::weighted_energy() const {
  double sigma = 0.0;
  for (std::size_t j = 0; j < points_.size(); ++j) sigma += std::norm(values_[j]) * weights_[j];
  return sigma;
}

NoiseSpec::NoiseSpec(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in [0,1)");
  }
}

}  // namespace trigfit
