#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "trigfit/sampling.hpp"

// Slow dense reference implementations. Nothing here touches the Toeplitz
// moment code or the recursion, so the two can be checked against each other.
namespace trigfit::oracle {

inline constexpr int kMaxOracleDegree = 64;

struct DenseSystem {
  Eigen::MatrixXcd vandermonde;  // r x (2M+1), columns k = -M..M
  Eigen::VectorXd weights;
  int degree = 0;
};

DenseSystem build(std::span<const double> points, std::span<const double> weights, int degree);
DenseSystem build(const SampleSet1D& samples, int degree);

/// V^* W V.
Eigen::MatrixXcd gram(const DenseSystem& system);

/// Minimizer of sum_j |p(x_j) - s_j|^2 w_j via column-pivoted QR of W^{1/2} V.
Eigen::VectorXcd dense_lsq(const DenseSystem& system, std::span<const Complex> values);

/// Pivoted LU solve of a general square system.
Eigen::VectorXcd dense_solve(const Eigen::MatrixXcd& matrix, const Eigen::VectorXcd& rhs);

struct Spectrum {
  double lambda_min;
  double lambda_max;
  double cond;
};

Spectrum spectrum(const DenseSystem& system);
Spectrum spectrum(const Eigen::MatrixXcd& hermitian);

/// ((1+gamma)/(1-gamma))^2 when gamma < 1/(2M), otherwise nullopt.
std::optional<double> condition_bound_1d(double gamma, int degree);

/// ((1+2M gamma)/(1-2M gamma))^2 when 2M gamma < 1: the frame-bound form
/// with the degree kept in the constants. Holds for every such set.
std::optional<double> condition_bound_1d_scaled(double gamma, int degree);

/// Product bound for line-type sampling with per-coordinate mesh norms.
std::optional<double> condition_bound_line(double delta1, double delta2, int degree);

/// ||I - T_M||_F for the given weights.
double frobenius_objective(std::span<const double> points, std::span<const double> weights,
                           int degree);

/// sum_j |p(x_j)|^2 w_j by direct evaluation.
double sampled_energy(std::span<const double> points, std::span<const double> weights,
                      std::span<const Complex> coeffs);

/// sum_j |p(x_j) - s_j|^2 w_j by direct evaluation.
double residual_energy(const SampleSet1D& samples, std::span<const Complex> coeffs);

}  // namespace trigfit::oracle
