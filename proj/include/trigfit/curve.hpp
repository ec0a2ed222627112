#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "trigfit/levinson.hpp"

namespace trigfit {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Contour points ordered along a closed curve. At least three points, no two
/// cyclically consecutive points coincide.
class BoundaryPoints {
 public:
  explicit BoundaryPoints(std::vector<Point2> xy);

  const std::vector<Point2>& xy() const { return xy_; }
  std::size_t size() const { return xy_.size(); }

 private:
  std::vector<Point2> xy_;
};

struct CurveParam {
  std::vector<double> u;  // u_1 = 0, strictly increasing, u_r < 1
  double length = 0.0;    // total chord length including the closing chord
};

using ChordMetric = std::function<double(const Point2&, const Point2&)>;

double euclidean_chord(const Point2& a, const Point2& b);

/// Cumulative chord-length parameter normalized by the closed-contour length.
CurveParam parameterize(const BoundaryPoints& points, const ChordMetric& metric = euclidean_chord);

struct CurveFitOptions {
  std::optional<int> max_degree;
  /// Fit at exactly this degree instead of the adaptive search.
  std::optional<int> fixed_degree;
  /// Contour samples; default is max(256, next power of two >= 2N0+1).
  std::optional<std::size_t> grid_size;
  ChordMetric metric = euclidean_chord;
};

struct CurveFit {
  FitResult fit;
  CurveParam param;
  std::vector<Point2> contour;  // p(j/n), real part x, imaginary part y
};

/// Default evaluation grid for a degree-M fit.
std::size_t default_grid_size(int degree);

CurveFit fit_curve(const BoundaryPoints& points, const NoiseSpec& noise,
                   const CurveFitOptions& options = {});

}  // namespace trigfit
