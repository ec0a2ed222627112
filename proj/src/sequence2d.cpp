#include "trigfit/sequence2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "parallel.hpp"
#include "trigfit/fft.hpp"
#include "trigfit/oracle.hpp"

namespace trigfit {
namespace {

Complex phasor(long k, double x) {
  return std::polar(1.0, 2.0 * std::numbers::pi * std::fmod(static_cast<double>(k) * x, 1.0));
}

int max_line_degree(const std::vector<LineFit>& fits) {
  int m = 0;
  for (const auto& f : fits)
    if (f.usable()) m = std::max(m, f.fit->degree());
  return m;
}

}  // namespace

void LineSampleGrid::check() const {
  if (line_positions.size() != per_line_samples.size()) {
    throw Error(ErrorCode::LengthMismatch, "one sample set per line position is required");
  }
  check_points(line_positions);
  for (double t : target_lines) {
    if (!(t >= 0.0 && t < 1.0)) {
      throw Error(ErrorCode::OutOfDomain, "target line " + std::to_string(t) + " outside [0,1)");
    }
  }
}

std::vector<LineFit> fit_lines(const LineSampleGrid& grid, const NoiseSpec& noise,
                               std::optional<int> max_line_degree, unsigned threads) {
  grid.check();
  std::vector<LineFit> fits(grid.line_positions.size());
  detail::parallel_for(fits.size(), threads, [&](std::size_t j) {
    LineFit& out = fits[j];
    out.tau = grid.line_positions[j];
    const auto& samples = grid.per_line_samples[j];
    if (samples.size() < 3) {
      out.error = ErrorCode::DegreeTooLarge;
      out.reason = "line has " + std::to_string(samples.size()) +
                   " samples, a degree-1 contour needs 3";
      return;
    }
    FitOptions opts;
    if (max_line_degree) opts.max_degree = std::min(*max_line_degree, samples.max_degree());
    try {
      out.fit = fit(samples, noise, opts);
    } catch (const Error& e) {
      out.error = e.code();
      out.reason = e.what();
    }
  });
  return fits;
}

int default_cross_degree(const std::vector<LineFit>& fits) {
  const auto usable = std::count_if(fits.begin(), fits.end(), [](const LineFit& f) { return f.usable(); });
  if (usable == 0) return 0;
  return std::min(static_cast<int>((usable - 1) / 2), max_line_degree(fits));
}

std::size_t default_u_grid(const std::vector<LineFit>& fits) {
  return fft::next_pow2(4 * static_cast<std::size_t>(max_line_degree(fits)) + 1);
}

SequenceResult recover_cross(const LineSampleGrid& grid, std::vector<LineFit> fits,
                             int cross_degree, std::size_t u_grid_size, unsigned threads) {
  grid.check();
  if (cross_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative cross degree");

  std::vector<double> taus;
  std::vector<std::vector<Complex>> columns;  // per usable line, values on the u-grid
  for (const auto& f : fits) {
    if (!f.usable()) continue;
    taus.push_back(f.tau);
    columns.push_back(evaluate_on_grid(f.fit->poly, u_grid_size));
  }
  const std::size_t lines = taus.size();
  if (lines == 0 || 2 * static_cast<std::size_t>(cross_degree) + 1 > lines) {
    throw Error(ErrorCode::DegreeTooLarge, "cross degree " + std::to_string(cross_degree) +
                                               " needs " + std::to_string(2 * cross_degree + 1) +
                                               " usable lines, have " + std::to_string(lines));
  }

  // The one Toeplitz system shared by every u-column.
  ToeplitzSystem system(SampleSet1D::validate(taus, std::vector<Complex>(lines)));
  const GsFactor factor = gs_factorize(system, cross_degree);
  const auto w = system.samples().weights();

  const long m = cross_degree;
  const std::size_t dim = 2 * static_cast<std::size_t>(m) + 1;
  std::vector<Complex> phase(dim * lines);  // w_j e^{2 pi i k tau_j}, k = -m..m
  for (long k = -m; k <= m; ++k)
    for (std::size_t j = 0; j < lines; ++j)
      phase[static_cast<std::size_t>(k + m) * lines + j] = w[j] * phasor(k, taus[j]);
  std::vector<Complex> target_phase(grid.target_lines.size() * dim);
  for (std::size_t i = 0; i < grid.target_lines.size(); ++i)
    for (long k = -m; k <= m; ++k)
      target_phase[i * dim + static_cast<std::size_t>(k + m)] = phasor(k, grid.target_lines[i]);

  SequenceResult result;
  result.cross_degree = cross_degree;
  result.u_grid_size = u_grid_size;
  result.recovered_lines.assign(grid.target_lines.size(), std::vector<Complex>(u_grid_size));
  result.column_coefficients.assign(u_grid_size, {});

  detail::parallel_for(u_grid_size, threads, [&](std::size_t col) {
    std::vector<Complex> b(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      Complex sum{};
      for (std::size_t j = 0; j < lines; ++j) sum += columns[j][col] * phase[k * lines + j];
      b[k] = sum;
    }
    auto v = gs_apply(factor, b);
    std::reverse(v.begin(), v.end());  // Gram-order solution -> c_{-m..m}
    for (std::size_t i = 0; i < grid.target_lines.size(); ++i) {
      Complex sum{};
      for (std::size_t k = 0; k < dim; ++k) sum += v[k] * target_phase[i * dim + k];
      result.recovered_lines[i][col] = sum;
    }
    result.column_coefficients[col] = std::move(v);
  });
  result.per_line_fits = std::move(fits);
  return result;
}

Complex Poly2D::operator()(double tau, double u) const {
  const int m = degree;
  const std::size_t dim = 2 * static_cast<std::size_t>(m) + 1;
  Complex sum{};
  for (int j = -m; j <= m; ++j) {
    Complex inner{};
    for (int k = -m; k <= m; ++k) inner += coeffs[static_cast<std::size_t>(j + m) * dim + static_cast<std::size_t>(k + m)] * phasor(k, u);
    sum += inner * phasor(j, tau);
  }
  return sum;
}

double Poly2D::norm_sq() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return s;
}

Poly2D Poly2D::separable(std::span<const Complex> tau_coeffs, std::span<const Complex> u_coeffs) {
  if (tau_coeffs.size() != u_coeffs.size() || tau_coeffs.size() % 2 == 0) {
    throw Error(ErrorCode::DimensionMismatch, "separable factors must share an odd length");
  }
  Poly2D p;
  p.degree = static_cast<int>(tau_coeffs.size() / 2);
  p.coeffs.reserve(tau_coeffs.size() * u_coeffs.size());
  for (const auto& a : tau_coeffs)
    for (const auto& b : u_coeffs) p.coeffs.push_back(a * b);
  return p;
}

bool FrameBoundsReport::within_bounds(double rel_tol) const {
  for (std::size_t i = 0; i < energies.size(); ++i) {
    const double e = energies[i];
    const double n = norms[i];
    if (e < lower * n * (1.0 - rel_tol) || e > upper * n * (1.0 + rel_tol)) return false;
    if (mesh_lower && (e < *mesh_lower * n * (1.0 - rel_tol) || e > *mesh_upper * n * (1.0 + rel_tol))) {
      return false;
    }
  }
  return true;
}

double line_sampled_energy(const LineSampleGrid& grid, const Poly2D& poly) {
  const auto wtau = voronoi_weights(grid.line_positions);
  double energy = 0.0;
  for (std::size_t j = 0; j < grid.line_positions.size(); ++j) {
    const auto& set = grid.per_line_samples[j];
    double line = 0.0;
    for (std::size_t k = 0; k < set.size(); ++k) {
      line += std::norm(poly(grid.line_positions[j], set.points()[k])) * set.weights()[k];
    }
    energy += wtau[j] * line;
  }
  return energy;
}

FrameBoundsReport frame_bounds_check(const LineSampleGrid& grid, int degree,
                                     std::span<const Poly2D> polys) {
  grid.check();
  FrameBoundsReport report;
  const auto wtau = voronoi_weights(grid.line_positions);
  const auto across = oracle::spectrum(oracle::build(grid.line_positions, wtau, degree));

  double a1 = INFINITY, b1 = 0.0;
  for (const auto& set : grid.per_line_samples) {
    const auto along = oracle::spectrum(oracle::build(set, degree));
    a1 = std::min(a1, along.lambda_min);
    b1 = std::max(b1, along.lambda_max);
    report.delta1 = std::max(report.delta1, mesh_norm(set.points()));
  }
  report.delta2 = mesh_norm(grid.line_positions);
  report.lower = a1 * across.lambda_min;
  report.upper = b1 * across.lambda_max;
  if (oracle::condition_bound_line(report.delta1, report.delta2, degree)) {
    const double lo = (1.0 - report.delta1) * (1.0 - report.delta2);
    const double hi = (1.0 + report.delta1) * (1.0 + report.delta2);
    report.mesh_lower = lo * lo;
    report.mesh_upper = hi * hi;
  }

  for (const auto& p : polys) {
    report.norms.push_back(p.norm_sq());
    report.energies.push_back(line_sampled_energy(grid, p));
  }
  return report;
}

}  // namespace trigfit
