#include "trigfit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trigfit/fft.hpp"

namespace trigfit {

BoundaryPoints::BoundaryPoints(std::vector<Point2> xy) : xy_(std::move(xy)) {
  if (xy_.size() < 3) {
    throw Error(ErrorCode::DegenerateSet, "a closed contour needs at least 3 points");
  }
  for (const auto& p : xy_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::InvalidArgument, "non-finite contour point");
    }
  }
}

double euclidean_chord(const Point2& a, const Point2& b) { return std::hypot(b.x - a.x, b.y - a.y); }

CurveParam parameterize(const BoundaryPoints& points, const ChordMetric& metric) {
  const auto& xy = points.xy();
  const std::size_t r = xy.size();
  CurveParam param;
  param.u.resize(r);
  param.u[0] = 0.0;
  for (std::size_t j = 1; j < r; ++j) {
    const double d = metric(xy[j - 1], xy[j]);
    if (!(d > 0.0)) {
      throw Error(ErrorCode::ZeroChord, "points " + std::to_string(j - 1) + " and " +
                                            std::to_string(j) + " coincide");
    }
    param.u[j] = param.u[j - 1] + d;
  }
  const double closing = metric(xy[r - 1], xy[0]);
  if (!(closing > 0.0)) {
    throw Error(ErrorCode::ZeroChord, "last point coincides with the first");
  }
  param.length = param.u[r - 1] + closing;
  for (auto& u : param.u) u /= param.length;
  return param;
}

std::size_t default_grid_size(int degree) {
  return std::max<std::size_t>(256, fft::next_pow2(2 * static_cast<std::size_t>(degree) + 1));
}

CurveFit fit_curve(const BoundaryPoints& points, const NoiseSpec& noise,
                   const CurveFitOptions& options) {
  CurveFit out;
  out.param = parameterize(points, options.metric);

  std::vector<Complex> values;
  values.reserve(points.size());
  for (const auto& p : points.xy()) values.emplace_back(p.x, p.y);
  auto samples = SampleSet1D::validate(out.param.u, std::move(values));

  if (options.fixed_degree) {
    const int m = *options.fixed_degree;
    auto coeffs = solve_fixed_degree(samples, m, &out.fit.ops);
    out.fit.poly = TrigPolynomial(std::move(coeffs));
    const double sigma = samples.weighted_energy();
    const double eps = sigma > 0.0
                           ? weighted_residual(samples, out.fit.poly) / sigma
                           : 0.0;
    out.fit.achieved_eps = std::sqrt(eps);
    out.fit.converged = out.fit.achieved_eps <= noise.epsilon();
    out.fit.residual_history = {{m, eps}};
  } else {
    out.fit = fit(samples, noise, FitOptions{options.max_degree, false});
  }

  const auto grid =
      evaluate_on_grid(out.fit.poly, options.grid_size.value_or(default_grid_size(out.fit.degree())));
  out.contour.reserve(grid.size());
  for (const auto& z : grid) out.contour.push_back({z.real(), z.imag()});
  return out;
}

}  // namespace trigfit
