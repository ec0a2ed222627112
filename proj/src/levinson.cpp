#include "trigfit/levinson.hpp"

#include <cmath>
#include <string>

namespace trigfit {
namespace {

void check_pivot(const LevinsonState& s) {
  if (!(s.beta > kBreakdownBeta * s.t0) || std::abs(s.alpha) >= 1.0 - kBreakdownAlpha) {
    throw BreakdownError(s.level, {}, TrigPolynomial{});
  }
}

// y^{(l)} -> y^{(l+1)} using t_{l+1}; also appends t_{l+1} to the moment list.
void advance_yule_walker(LevinsonState& s, Complex t_next, OpCounts* ops) {
  const std::size_t l = s.yw.size();
  Complex acc = t_next;
  for (std::size_t i = 0; i < l; ++i) acc += s.moments[i] * s.yw[l - 1 - i];
  const Complex alpha = -acc / s.beta;
  std::vector<Complex> next(l + 1);
  for (std::size_t i = 0; i < l; ++i) next[i] = s.yw[i] + alpha * std::conj(s.yw[l - 1 - i]);
  next[l] = alpha;
  s.yw = std::move(next);
  s.alpha = alpha;
  s.beta = (1.0 - std::norm(alpha)) * s.beta;
  s.moments.push_back(t_next);
  if (ops) ops->recursion += 2 * l;
}

// T_M = [t_{k-l}] with b_k = sum s_j w_j e^{2 pi i k x_j} is the Gram system of
// the basis e^{-2 pi i k x}; flipping the solution gives the coefficients of
// p(x) = sum c_k e^{2 pi i k x}.
TrigPolynomial flipped(const std::vector<Complex>& sol) {
  return TrigPolynomial(std::vector<Complex>(sol.rbegin(), sol.rend()));
}

}  // namespace

BreakdownError::BreakdownError(int level, std::vector<std::pair<int, double>> history,
                               TrigPolynomial last)
    : Error(ErrorCode::Breakdown,
            "Toeplitz recursion lost positive definiteness at dimension " + std::to_string(level)),
      level_(level),
      history_(std::move(history)),
      last_(std::move(last)) {}

LevinsonState initial_state(double t0, Complex t1, Complex b0, double sigma, OpCounts* ops) {
  LevinsonState s;
  s.level = 1;
  s.t0 = t0;
  s.sigma = sigma;
  s.sol = {b0 / t0};
  s.rhs = {b0};
  s.alpha = -t1 / t0;
  s.yw = {s.alpha};
  s.moments = {t1};
  s.beta = (1.0 - std::norm(s.alpha)) * t0;
  s.eps = residual_sq(s, ops);
  return s;
}

LevinsonState step_odd(const LevinsonState& state, Complex t_next, Complex b_next,
                       OpCounts* ops) {
  if (state.level % 2 != 1) {
    throw Error(ErrorCode::InvalidArgument, "step_odd requires an odd level");
  }
  check_pivot(state);
  LevinsonState s = state;
  const std::size_t l = s.sol.size();

  // v = (b - t^T E c) / beta, c <- c + v E conj(y), then append v.
  Complex inner{};
  for (std::size_t i = 0; i < l; ++i) inner += s.moments[i] * s.sol[l - 1 - i];
  const Complex v = (b_next - inner) / s.beta;
  for (std::size_t i = 0; i < l; ++i) s.sol[i] += v * std::conj(state.yw[l - 1 - i]);
  s.sol.push_back(v);
  s.rhs.push_back(b_next);
  if (ops) ops->recursion += 2 * l;

  advance_yule_walker(s, t_next, ops);
  s.level += 1;
  return s;
}

LevinsonState step_even(const LevinsonState& state, Complex t_next, Complex b_next,
                        OpCounts* ops) {
  if (state.level % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "step_even requires an even level");
  }
  check_pivot(state);
  LevinsonState s = state;
  const std::size_t l = s.sol.size();

  // t_0 + t^* y equals beta because T is Hermitian.
  Complex inner{};
  for (std::size_t i = 0; i < l; ++i) inner += std::conj(s.moments[i]) * s.sol[i];
  const Complex v = (b_next - inner) / s.beta;
  std::vector<Complex> sol(l + 1);
  sol[0] = v;
  for (std::size_t i = 0; i < l; ++i) sol[i + 1] = s.sol[i] + v * state.yw[i];
  s.sol = std::move(sol);
  s.rhs.insert(s.rhs.begin(), b_next);
  if (ops) ops->recursion += 2 * l;

  advance_yule_walker(s, t_next, ops);
  s.level += 1;
  s.eps = residual_sq(s, ops);
  return s;
}

double residual_sq(const LevinsonState& state, OpCounts* ops) {
  if (state.sigma == 0.0) return 0.0;
  double projected = 0.0;
  for (std::size_t i = 0; i < state.sol.size(); ++i) {
    projected += (state.rhs[i] * std::conj(state.sol[i])).real();
  }
  if (ops) ops->recursion += state.sol.size();
  return std::abs(state.sigma - projected) / state.sigma;
}

std::vector<Complex> solve_nested(ToeplitzSystem& system, int degree,
                                  const std::function<Complex(long)>& rhs, OpCounts* ops) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (degree > system.max_level()) {
    throw Error(ErrorCode::DegreeTooLarge,
                "degree " + std::to_string(degree) + " needs 2M+1 <= " +
                    std::to_string(system.samples().size()));
  }
  LevinsonState s = initial_state(system.t0(), system.t(1), rhs(0), 0.0, ops);
  for (int m = 0; m < degree; ++m) {
    s = step_odd(s, system.t(s.level + 1), rhs(m + 1), ops);
    s = step_even(s, system.t(s.level + 1), rhs(-(m + 1)), ops);
  }
  return s.sol;
}

std::vector<Complex> solve_fixed_degree(const SampleSet1D& samples, int degree, OpCounts* ops) {
  ToeplitzSystem system(samples);
  OpCounts local;
  auto sol = solve_nested(system, degree, [&system](long k) { return system.b(k); }, &local);
  if (ops) {
    ops->moments += system.ops().moments;
    ops->recursion += local.recursion;
  }
  return std::vector<Complex>(sol.rbegin(), sol.rend());
}

FitResult fit(const SampleSet1D& samples, const NoiseSpec& noise, const FitOptions& options) {
  const int ceiling = samples.max_degree();
  const int max_degree = options.max_degree.value_or(ceiling);
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative max degree");
  if (max_degree > ceiling) {
    throw Error(ErrorCode::DegreeTooLarge,
                "max degree " + std::to_string(max_degree) + " needs 2M+1 <= " +
                    std::to_string(samples.size()));
  }

  ToeplitzSystem system(samples);
  FitResult result;
  if (system.sigma() == 0.0) {
    result.poly = TrigPolynomial::zero(0);
    result.converged = true;
    result.residual_history = {{0, 0.0}};
    if (options.keep_level_solutions) result.level_solutions = {result.poly};
    result.ops.moments = system.ops().moments;
    return result;
  }

  const double target = noise.epsilon();
  const std::size_t r = samples.size();
  OpCounts rec;
  std::uint64_t direct_ops = 0;
  LevinsonState s = initial_state(system.t0(), system.t(1), system.b(0), system.sigma(), &rec);
  int m = 0;
  TrigPolynomial completed;
  try {
    for (;;) {
      completed = flipped(s.sol);
      // Below this the identity only resolves cancellation noise.
      if (s.eps < kIdentityFloor) {
        s.eps = weighted_residual(samples, completed) / system.sigma();
        direct_ops += r * static_cast<std::size_t>(2 * m + 1);
      }
      result.residual_history.emplace_back(m, s.eps);
      if (options.keep_level_solutions) result.level_solutions.push_back(completed);
      const bool interpolating = 2 * static_cast<std::size_t>(m) + 1 == r;
      if (std::sqrt(s.eps) <= target || interpolating) {
        result.converged = true;
        break;
      }
      if (m == max_degree) break;
      s = step_odd(s, system.t(s.level + 1), system.b(m + 1), &rec);
      s = step_even(s, system.t(s.level + 1), system.b(-(m + 1)), &rec);
      ++m;
    }
  } catch (const BreakdownError& e) {
    throw BreakdownError(e.level(), result.residual_history, completed);
  }

  result.poly = std::move(completed);
  result.achieved_eps = std::sqrt(s.eps);
  result.ops.moments = system.ops().moments + direct_ops;
  result.ops.recursion = rec.recursion;
  return result;
}

}  // namespace trigfit
