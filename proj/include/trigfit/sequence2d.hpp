#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigfit/levinson.hpp"
#include "trigfit/toeplitz.hpp"

namespace trigfit {

/// Samples collected along lines tau_j = const. Along each line the u-samples
/// form a 1-D set; the lines themselves are a nonuniform set on the tau-circle.
struct LineSampleGrid {
  std::vector<double> line_positions;
  std::vector<SampleSet1D> per_line_samples;
  std::vector<double> target_lines;

  /// Throws on unsorted line positions, out-of-domain targets or a size mismatch.
  void check() const;
};

struct LineFit {
  double tau = 0.0;
  std::optional<FitResult> fit;  // empty when the line was dropped
  std::optional<ErrorCode> error;
  std::string reason;

  bool usable() const { return fit.has_value(); }
};

/// Independent 1-D fit per line. Failing lines are reported, not thrown.
/// A line needs at least three samples so it can carry a degree-1 contour.
std::vector<LineFit> fit_lines(const LineSampleGrid& grid, const NoiseSpec& noise,
                               std::optional<int> max_line_degree = std::nullopt,
                               unsigned threads = 1);

struct SequenceResult {
  std::vector<LineFit> per_line_fits;
  int cross_degree = 0;
  std::size_t u_grid_size = 0;
  /// recovered_lines[i][m] = p(target_lines[i], m/n).
  std::vector<std::vector<Complex>> recovered_lines;
  /// tau-coefficients for every u-grid column, kept for inspection.
  std::vector<std::vector<Complex>> column_coefficients;
};

/// Default cross degree: floor((usable - 1)/2), capped at the largest
/// per-line degree.
int default_cross_degree(const std::vector<LineFit>& fits);

/// Default u-grid: next power of two >= 4 * (max per-line degree) + 1.
std::size_t default_u_grid(const std::vector<LineFit>& fits);

/// Resamples every usable line fit onto a shared u-grid, then solves one
/// tau-direction Toeplitz system per grid column with a single shared
/// Gohberg-Semencul factor and evaluates the result at the target lines.
SequenceResult recover_cross(const LineSampleGrid& grid, std::vector<LineFit> fits,
                             int cross_degree, std::size_t u_grid_size, unsigned threads = 1);

/// Coefficients of a 2-D trigonometric polynomial, c(j, k) multiplies
/// e^{2 pi i (j tau + k u)}, j,k = -M..M, stored row-major with j outermost.
struct Poly2D {
  int degree = 0;
  std::vector<Complex> coeffs;

  Complex operator()(double tau, double u) const;
  double norm_sq() const;
  static Poly2D separable(std::span<const Complex> tau_coeffs, std::span<const Complex> u_coeffs);
};

struct FrameBoundsReport {
  std::vector<double> energies;  // weighted sampled energy per polynomial
  std::vector<double> norms;     // ||p||^2 = sum |c_jk|^2
  double lower = 0.0;          // A1 * A2 from dense per-coordinate spectra
  double upper = 0.0;          // B1 * B2
  double delta1 = 0.0;         // largest along-line mesh norm
  double delta2 = 0.0;         // mesh norm of the line positions
  std::optional<double> mesh_lower;  // (1-d1)^2 (1-d2)^2 when both d < 1/(2M)
  std::optional<double> mesh_upper;

  /// lower ||p||^2 <= energy <= upper ||p||^2 for every polynomial, and the
  /// same against the mesh-norm bounds when they apply.
  bool within_bounds(double rel_tol = 1e-12) const;
};

/// Sampled energy sum_j w_j sum_k w_jk |p(tau_j, u_jk)|^2.
double line_sampled_energy(const LineSampleGrid& grid, const Poly2D& poly);

/// Checks the frame inequality for every polynomial against the product of
/// per-coordinate spectral bounds at degree M.
FrameBoundsReport frame_bounds_check(const LineSampleGrid& grid, int degree,
                                     std::span<const Poly2D> polys);

}  // namespace trigfit
