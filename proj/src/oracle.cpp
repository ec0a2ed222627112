#include "trigfit/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigfit/errors.hpp"

namespace trigfit::oracle {

DenseSystem build(std::span<const double> points, std::span<const double> weights, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (degree > kMaxOracleDegree) {
    throw Error(ErrorCode::DegreeTooLarge, "oracle limited to degree " +
                                               std::to_string(kMaxOracleDegree));
  }
  if (points.size() != weights.size()) {
    throw Error(ErrorCode::LengthMismatch, "points and weights differ in length");
  }
  const Eigen::Index r = static_cast<Eigen::Index>(points.size());
  const Eigen::Index n = 2 * degree + 1;
  DenseSystem sys;
  sys.degree = degree;
  sys.vandermonde.resize(r, n);
  sys.weights.resize(r);
  for (Eigen::Index j = 0; j < r; ++j) {
    sys.weights(j) = weights[static_cast<std::size_t>(j)];
    for (Eigen::Index c = 0; c < n; ++c) {
      const double k = static_cast<double>(c - degree);
      const double angle = 2.0 * std::numbers::pi * k * points[static_cast<std::size_t>(j)];
      sys.vandermonde(j, c) = Complex(std::cos(angle), std::sin(angle));
    }
  }
  return sys;
}

DenseSystem build(const SampleSet1D& samples, int degree) {
  return build(samples.points(), samples.weights(), degree);
}

Eigen::MatrixXcd gram(const DenseSystem& system) {
  const Eigen::MatrixXcd weighted = system.weights.cast<Complex>().asDiagonal() * system.vandermonde;
  return system.vandermonde.adjoint() * weighted;
}

Eigen::VectorXcd dense_lsq(const DenseSystem& system, std::span<const Complex> values) {
  const Eigen::Index r = system.vandermonde.rows();
  if (static_cast<Eigen::Index>(values.size()) != r) {
    throw Error(ErrorCode::LengthMismatch, "values do not match the sampling set");
  }
  if (system.vandermonde.cols() > r) {
    throw Error(ErrorCode::DegreeTooLarge, "2M+1 exceeds the number of samples");
  }
  const Eigen::VectorXd root = system.weights.cwiseSqrt();
  const Eigen::MatrixXcd a = root.cast<Complex>().asDiagonal() * system.vandermonde;
  Eigen::VectorXcd rhs(r);
  for (Eigen::Index j = 0; j < r; ++j) rhs(j) = root(j) * values[static_cast<std::size_t>(j)];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  if (qr.rank() < a.cols()) throw Error(ErrorCode::RankDeficient, "weighted Vandermonde is rank deficient");
  return qr.solve(rhs);
}

Eigen::VectorXcd dense_solve(const Eigen::MatrixXcd& matrix, const Eigen::VectorXcd& rhs) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(matrix);
  if (!lu.isInvertible()) throw Error(ErrorCode::RankDeficient, "singular matrix");
  return lu.solve(rhs);
}

Spectrum spectrum(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hermitian, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  Spectrum s{ev.minCoeff(), ev.maxCoeff(), 0.0};
  s.cond = s.lambda_min > 0.0 ? s.lambda_max / s.lambda_min : INFINITY;
  return s;
}

Spectrum spectrum(const DenseSystem& system) { return spectrum(gram(system)); }

std::optional<double> condition_bound_1d(double gamma, int degree) {
  if (degree > 0 && !(2.0 * degree * gamma < 1.0)) return std::nullopt;
  if (gamma >= 1.0) return std::nullopt;
  const double q = (1.0 + gamma) / (1.0 - gamma);
  return q * q;
}

std::optional<double> condition_bound_1d_scaled(double gamma, int degree) {
  const double g = 2.0 * std::max(degree, 0) * gamma;
  if (!(g < 1.0) || gamma >= 1.0) return std::nullopt;
  const double q = (1.0 + g) / (1.0 - g);
  return q * q;
}

std::optional<double> condition_bound_line(double delta1, double delta2, int degree) {
  auto b1 = condition_bound_1d(delta1, degree);
  auto b2 = condition_bound_1d(delta2, degree);
  if (!b1 || !b2) return std::nullopt;
  return *b1 * *b2;
}

double frobenius_objective(std::span<const double> points, std::span<const double> weights,
                           int degree) {
  const auto sys = build(points, weights, degree);
  const Eigen::MatrixXcd t = gram(sys);
  return (Eigen::MatrixXcd::Identity(t.rows(), t.cols()) - t).norm();
}

double sampled_energy(std::span<const double> points, std::span<const double> weights,
                      std::span<const Complex> coeffs) {
  const int m = static_cast<int>(coeffs.size() / 2);
  double energy = 0.0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    Complex p{};
    for (int k = -m; k <= m; ++k) {
      const double angle = 2.0 * std::numbers::pi * k * points[j];
      p += coeffs[static_cast<std::size_t>(k + m)] * Complex(std::cos(angle), std::sin(angle));
    }
    energy += std::norm(p) * weights[j];
  }
  return energy;
}

double residual_energy(const SampleSet1D& samples, std::span<const Complex> coeffs) {
  const auto x = samples.points();
  const auto w = samples.weights();
  const auto s = samples.values();
  const int m = static_cast<int>(coeffs.size() / 2);
  double energy = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Complex p{};
    for (int k = -m; k <= m; ++k) {
      const double angle = 2.0 * std::numbers::pi * k * x[j];
      p += coeffs[static_cast<std::size_t>(k + m)] * Complex(std::cos(angle), std::sin(angle));
    }
    energy += std::norm(p - s[j]) * w[j];
  }
  return energy;
}

}  // namespace trigfit::oracle
