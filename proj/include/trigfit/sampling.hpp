#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace trigfit {

using Complex = std::complex<double>;

enum class WeightMode { voronoi, uniform, file };

/// Nonuniform samples of a 1-periodic function on [0,1).
///
/// Points are strictly increasing, every weight is positive, and all three
/// sequences share the same length. Instances are immutable once validated.
class SampleSet1D {
 public:
  /// Validates the inputs. When `weights` is empty, Voronoi weights are used.
  static SampleSet1D validate(std::vector<double> points, std::vector<Complex> values,
                              std::optional<std::vector<double>> weights = std::nullopt);

  /// Same checks as validate() but with w_j = 1/r.
  static SampleSet1D with_uniform_weights(std::vector<double> points,
                                          std::vector<Complex> values);

  std::span<const double> points() const { return points_; }
  std::span<const Complex> values() const { return values_; }
  std::span<const double> weights() const { return weights_; }
  std::size_t size() const { return points_.size(); }

  /// Largest degree M with 2M+1 <= r.
  int max_degree() const { return static_cast<int>((points_.size() - 1) / 2); }

  /// Weighted squared data norm sum_j |s_j|^2 w_j.
  double weighted_energy() const;

 private:
  SampleSet1D(std::vector<double> p, std::vector<Complex> v, std::vector<double> w)
      : points_(std::move(p)), values_(std::move(v)), weights_(std::move(w)) {}

  std::vector<double> points_;
  std::vector<Complex> values_;
  std::vector<double> weights_;
};

/// Relative noise level of the data in the weighted norm, 0 <= epsilon < 1.
class NoiseSpec {
 public:
  explicit NoiseSpec(double epsilon);
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

/// Throws unless points are strictly increasing inside [0,1).
void check_points(std::span<const double> points);

/// w_j = (x_{j+1} - x_{j-1}) / 2 with periodic neighbours x_0 = x_r - 1 and
/// x_{r+1} = x_1 + 1. The weights telescope to exactly one full period.
std::vector<double> voronoi_weights(std::span<const double> points);

std::vector<double> uniform_weights(std::size_t count);

/// Largest gap between periodic neighbours, including the wrap gap.
double mesh_norm(std::span<const double> points);

}  // namespace trigfit
