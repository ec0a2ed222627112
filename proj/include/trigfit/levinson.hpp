#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "trigfit/errors.hpp"
#include "trigfit/polynomial.hpp"
#include "trigfit/sampling.hpp"
#include "trigfit/toeplitz.hpp"

namespace trigfit {

// Breakdown is declared when beta_l <= kBreakdownBeta * t_0 or when the last
// reflection coefficient reaches |alpha| >= 1 - kBreakdownAlpha.
inline constexpr double kBreakdownBeta = 1e-13;
inline constexpr double kBreakdownAlpha = 1e-13;

// fit() recomputes eps directly when the O(level) identity drops below this.
inline constexpr double kIdentityFloor = 1e-12;

/// Carry of the two-step Levinson recursion at dimension `level`.
///
/// For odd level 2M+1 the solution holds c_{-M..M}; for even level 2M+2 it
/// holds c_{-M..M+1}. `yw` solves T_level y = -[t_1..t_level]^T and `beta` is
/// t_0 + [t_1..t_level] conj(yw), so beta > 0 certifies T_{level+1} as
/// positive definite.
struct LevinsonState {
  int level = 0;
  std::vector<Complex> yw;
  std::vector<Complex> sol;
  std::vector<Complex> rhs;
  std::vector<Complex> moments;  // t_1..t_level
  double t0 = 0.0;
  double beta = 0.0;
  Complex alpha{};
  double sigma = 0.0;
  double eps = 1.0;

  /// Lowest frequency index held by sol/rhs.
  int low_index() const { return -((level - 1) / 2); }
};

/// Dimension-one state: c = b_0/t_0, y = -t_1/t_0, beta_1 = (1-|alpha_0|^2) t_0.
LevinsonState initial_state(double t0, Complex t1, Complex b0, double sigma,
                            OpCounts* ops = nullptr);

/// level -> level+1 for odd level: appends the top-frequency unknown
/// c_{(level+1)/2} (right-hand side extended below). `t_next` is t_{level+1}
/// and is used to advance the Yule-Walker solution.
LevinsonState step_odd(const LevinsonState& state, Complex t_next, Complex b_next,
                       OpCounts* ops = nullptr);

/// level -> level+1 for even level: prepends the bottom-frequency unknown
/// c_{-level/2}, completing degree level/2, and refreshes `eps`.
LevinsonState step_even(const LevinsonState& state, Complex t_next, Complex b_next,
                        OpCounts* ops = nullptr);

/// |sigma - Re<b, c>| / sigma for a completed (odd) level, in O(level).
double residual_sq(const LevinsonState& state, OpCounts* ops = nullptr);

struct FitOptions {
  std::optional<int> max_degree;
  bool keep_level_solutions = false;
};

struct FitResult {
  TrigPolynomial poly;
  /// sqrt(eps_l) at the returned degree: ||p(x_j) - s_j||_w / ||s||_w.
  double achieved_eps = 0.0;
  bool converged = false;
  /// (degree, eps_l) for every completed degree, eps_l squared-relative.
  std::vector<std::pair<int, double>> residual_history;
  /// Filled only when FitOptions::keep_level_solutions is set.
  std::vector<TrigPolynomial> level_solutions;
  OpCounts ops;

  int degree() const { return poly.degree(); }
};

/// Raised when the recursion loses positive definiteness. Carries the
/// residual history and the deepest completed solution.
class BreakdownError : public Error {
 public:
  BreakdownError(int level, std::vector<std::pair<int, double>> history, TrigPolynomial last);

  int level() const { return level_; }
  const std::vector<std::pair<int, double>>& history() const { return history_; }
  const TrigPolynomial& last_solution() const { return last_; }

 private:
  int level_;
  std::vector<std::pair<int, double>> history_;
  TrigPolynomial last_;
};

/// Minimal-degree weighted least-squares fit: climbs M = 0, 1, ... and stops
/// at the first degree whose weighted relative residual is <= epsilon. The
/// interpolation level 2M+1 = r always counts as converged.
FitResult fit(const SampleSet1D& samples, const NoiseSpec& noise, const FitOptions& options = {});

/// Coefficients c_{-M..M} of the degree-M weighted least-squares polynomial,
/// ignoring any stopping rule.
std::vector<Complex> solve_fixed_degree(const SampleSet1D& samples, int degree,
                                        OpCounts* ops = nullptr);

/// Nested solve of T_M v = rhs on an existing system, rhs(k) for k = -M..M,
/// v returned in the same index order. Since T_M = [t_{k-l}] is the Gram
/// matrix of e^{-2 pi i k x}, the least-squares coefficient c_k is v_{-k}.
std::vector<Complex> solve_nested(ToeplitzSystem& system, int degree,
                                  const std::function<Complex(long)>& rhs,
                                  OpCounts* ops = nullptr);

}  // namespace trigfit
