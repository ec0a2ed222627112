#include <gtest/gtest.h>

#include "support.hpp"
#include "trigfit/levinson.hpp"
#include "trigfit/oracle.hpp"

using namespace trigfit;
using fixtures::random_coeffs;
using fixtures::random_points;
using fixtures::random_values;

namespace {

// Dense [t_{i-j}] of dimension n from the system's moments.
Eigen::MatrixXcd dense_dim(ToeplitzSystem& sys, std::size_t n) {
  Eigen::MatrixXcd out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          sys.t(static_cast<long>(i) - static_cast<long>(j));
  return out;
}

Eigen::VectorXcd vec(const std::vector<Complex>& v) {
  return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Walks the recursion by hand, checking every state against dense algebra.
void check_walk(ToeplitzSystem& sys, int degree) {
  LevinsonState s = initial_state(sys.t0(), sys.t(1), sys.b(0), sys.sigma());
  for (int m = 0; m < degree; ++m) {
    for (int half = 0; half < 2; ++half) {
      const double beta_prev = s.beta;
      const Complex alpha_prev = s.alpha;
      s = half == 0 ? step_odd(s, sys.t(s.level + 1), sys.b(m + 1))
                    : step_even(s, sys.t(s.level + 1), sys.b(-(m + 1)));
      const auto n = static_cast<std::size_t>(s.level);
      ASSERT_EQ(s.sol.size(), n);
      ASSERT_EQ(s.yw.size(), n);
      ASSERT_EQ(s.rhs.size(), n);
      const auto t = dense_dim(sys, n);
      const Eigen::VectorXcd res = t * vec(s.sol) - vec(s.rhs);
      EXPECT_LE(res.norm(), 1e-10 * vec(s.rhs).norm() + 1e-300);
      Eigen::VectorXcd tv(n);
      for (std::size_t i = 0; i < n; ++i) tv(static_cast<Eigen::Index>(i)) = sys.t(static_cast<long>(i) + 1);
      EXPECT_LE((t * vec(s.yw) + tv).norm(), 1e-10 * tv.norm());
      // beta recurrence and direct definition
      EXPECT_NEAR(s.beta, (1.0 - std::norm(s.alpha)) * beta_prev, 1e-12 * beta_prev);
      const Complex direct = sys.t0() + (tv.transpose() * vec(s.yw).conjugate()).value();
      EXPECT_NEAR(direct.real(), s.beta, 1e-10 * sys.t0());
      EXPECT_NEAR(direct.imag(), 0.0, 1e-10 * sys.t0());
      EXPECT_LT(std::abs(alpha_prev), 1.0);
    }
  }
}

}  // namespace

TEST(StepOdd, IdentitySystemDecouples) {
  const std::size_t r = 7;
  std::mt19937_64 rng(1);
  auto s = SampleSet1D::with_uniform_weights(fixtures::uniform_grid(r), random_values(r, rng));
  ToeplitzSystem sys(s);
  auto st = initial_state(sys.t0(), sys.t(1), sys.b(0), sys.sigma());
  st = step_odd(st, sys.t(2), sys.b(1));
  ASSERT_EQ(st.level, 2);
  EXPECT_NEAR(std::abs(st.sol[0] - sys.b(0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(st.sol[1] - sys.b(1)), 0.0, 1e-14);
  for (const auto& y : st.yw) EXPECT_LE(std::abs(y), 1e-14);
  EXPECT_LE(std::abs(st.alpha), 1e-14);
  EXPECT_NEAR(st.beta, 1.0, 1e-14);

  st = step_even(st, sys.t(3), sys.b(-1));
  EXPECT_NEAR(std::abs(st.sol[0] - sys.b(-1)), 0.0, 1e-14);
}

TEST(StepOdd, TwoByTwoClosedForm) {
  // t0 = 1, t1 = 0.5, b = [1, 1] -> c = [2/3, 2/3].
  LevinsonState st = initial_state(1.0, 0.5, 1.0, 1.0);
  st = step_odd(st, 0.0, 1.0);
  EXPECT_NEAR(std::abs(st.sol[0] - 2.0 / 3.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(st.sol[1] - 2.0 / 3.0), 0.0, 1e-15);
}

TEST(StepEven, ThreePointVoronoiMatchesDense) {
  auto s = SampleSet1D::validate({0, 0.3, 0.7}, {Complex(1, 2), Complex(-0.5, 0.1), Complex(0.3, -1)});
  ToeplitzSystem sys(s);
  auto st = initial_state(sys.t0(), sys.t(1), sys.b(0), sys.sigma());
  st = step_odd(st, sys.t(2), sys.b(1));
  st = step_even(st, sys.t(3), sys.b(-1));
  const auto expect = oracle::dense_lsq(oracle::build(s, 1), s.values());
  std::vector<Complex> c(st.sol.rbegin(), st.sol.rend());
  EXPECT_LE(fixtures::rel_err(c, expect), 1e-10);
  // interpolation: residual vanishes
  EXPECT_LE(residual_sq(st), 1e-10);
}

TEST(StepEven, ZeroRhsStaysZero) {
  std::mt19937_64 rng(2);
  auto s = SampleSet1D::validate(random_points(11, rng), std::vector<Complex>(11));
  ToeplitzSystem sys(s);
  auto st = initial_state(sys.t0(), sys.t(1), sys.b(0), sys.sigma());
  for (int m = 0; m < 5; ++m) {
    st = step_odd(st, sys.t(st.level + 1), sys.b(m + 1));
    st = step_even(st, sys.t(st.level + 1), sys.b(-(m + 1)));
    for (const auto& c : st.sol) EXPECT_EQ(c, Complex{});
  }
}

TEST(Steps, RejectWrongParity) {
  LevinsonState st = initial_state(1.0, 0.5, 1.0, 1.0);
  EXPECT_THROW(step_even(st, 0.0, 1.0), Error);
  st = step_odd(st, 0.0, 1.0);
  EXPECT_THROW(step_odd(st, 0.0, 1.0), Error);
}

TEST(Steps, BreakdownWhenNotPositiveDefinite) {
  // t1 = t0 makes T_2 singular: beta_1 = 0.
  LevinsonState st = initial_state(1.0, 1.0, 1.0, 1.0);
  try {
    step_odd(st, 0.0, 1.0);
    FAIL() << "expected breakdown";
  } catch (const BreakdownError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Breakdown);
    EXPECT_EQ(e.level(), 1);
  }
}

TEST(Steps, WalkAgainstDenseAlgebra) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t r = 9 + rng() % 30;
    ToeplitzSystem sys(SampleSet1D::validate(fixtures::jittered_points(r, 0.4, rng), random_values(r, rng)));
    check_walk(sys, std::min(sys.max_level(), 8));
  }
}

TEST(ResidualSq, MatchesDirectEvaluationAtEveryLevel) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 5 + rng() % 40;
    auto s = SampleSet1D::validate(fixtures::jittered_points(r, 0.4, rng), random_values(r, rng));
    auto res = fit(s, NoiseSpec(0.0), FitOptions{std::min(s.max_degree(), 10), true});
    const double sigma = s.weighted_energy();
    ASSERT_EQ(res.level_solutions.size(), res.residual_history.size());
    for (std::size_t i = 0; i < res.level_solutions.size(); ++i) {
      const double direct = oracle::residual_energy(s, res.level_solutions[i].coefficients());
      EXPECT_LE(std::abs(res.residual_history[i].second * sigma - direct), 1e-10 * sigma);
    }
  }
}

TEST(ResidualSq, NoiseFreeExactAtTrueDegree) {
  std::mt19937_64 rng(5);
  auto c = random_coeffs(3, rng);
  auto x = fixtures::jittered_points(17, 0.3, rng);
  auto s = SampleSet1D::validate(x, fixtures::sample(c, x));
  auto res = fit(s, NoiseSpec(0.0), FitOptions{3, false});
  EXPECT_LE(res.residual_history.back().second, 1e-12);
}

TEST(Fit, ExactLowDegreeRecovery) {
  auto x = fixtures::uniform_grid(7);
  std::vector<Complex> v;
  for (double xi : x) v.push_back(std::polar(1.0, 2 * M_PI * xi));
  auto res = fit(SampleSet1D::validate(x, v), NoiseSpec(1e-6));
  EXPECT_TRUE(res.converged);
  ASSERT_EQ(res.degree(), 1);
  EXPECT_LE(std::abs(res.poly.coefficient(-1)), 1e-10);
  EXPECT_LE(std::abs(res.poly.coefficient(0)), 1e-10);
  EXPECT_LE(std::abs(res.poly.coefficient(1) - 1.0), 1e-10);
  EXPECT_LE(res.achieved_eps, 1e-6);
}

TEST(Fit, NoiseFreeRandomPolynomialStopsAtOrBelowTrueDegree) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int nstar = static_cast<int>(rng() % 6);
    auto c = random_coeffs(nstar, rng);
    auto x = fixtures::jittered_points(31, 0.4, rng);
    if (nstar > 0) ASSERT_LT(mesh_norm(x), 1.0 / (2.0 * nstar));
    auto res = fit(SampleSet1D::validate(x, fixtures::sample(c, x)), NoiseSpec(1e-8));
    EXPECT_TRUE(res.converged);
    EXPECT_LE(res.degree(), nstar);
    std::vector<Complex> got(c.size());
    for (int k = -nstar; k <= nstar; ++k) got[static_cast<std::size_t>(k + nstar)] = res.poly.coefficient(k);
    EXPECT_LE(fixtures::dist(got, c), 1e-8);
  }
}

TEST(Fit, ZeroEpsilonInterpolates) {
  std::mt19937_64 rng(7);
  auto x = fixtures::jittered_points(11, 0.3, rng);
  auto s = SampleSet1D::validate(x, random_values(11, rng));
  auto res = fit(s, NoiseSpec(0.0));
  EXPECT_TRUE(res.converged);
  EXPECT_EQ(res.degree(), 5);
  const auto dense = oracle::dense_lsq(oracle::build(s, 5), s.values());
  std::vector<Complex> c(res.poly.coefficients().begin(), res.poly.coefficients().end());
  EXPECT_LE(fixtures::rel_err(c, dense), 1e-8);
  for (std::size_t j = 0; j < 11; ++j) EXPECT_LE(std::abs(res.poly(x[j]) - s.values()[j]), 1e-8);
}

TEST(Fit, EvenSampleCountWithZeroEpsilonDoesNotConverge) {
  std::mt19937_64 rng(8);
  auto x = fixtures::jittered_points(10, 0.3, rng);
  auto res = fit(SampleSet1D::validate(x, random_values(10, rng)), NoiseSpec(0.0));
  EXPECT_FALSE(res.converged);
  EXPECT_EQ(res.degree(), 4);
}

TEST(Fit, ZeroData) {
  auto res = fit(SampleSet1D::validate({0.1, 0.5, 0.9}, std::vector<Complex>(3)), NoiseSpec(0.1));
  EXPECT_TRUE(res.converged);
  EXPECT_EQ(res.degree(), 0);
  EXPECT_EQ(res.poly.coefficient(0), Complex{});
}

TEST(Fit, MaxDegreeCapReturnsBestEffort) {
  std::mt19937_64 rng(9);
  auto x = fixtures::jittered_points(41, 0.3, rng);
  auto s = SampleSet1D::validate(x, fixtures::sample(random_coeffs(8, rng), x));
  auto res = fit(s, NoiseSpec(1e-10), FitOptions{3, false});
  EXPECT_FALSE(res.converged);
  EXPECT_EQ(res.degree(), 3);
  EXPECT_EQ(res.residual_history.size(), 4u);
  EXPECT_THROW(fit(s, NoiseSpec(0.1), FitOptions{21, false}), Error);
}

TEST(Fit, ResidualMonotoneOverDegrees) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 11 + rng() % 40;
    auto s = SampleSet1D::validate(random_points(r, rng, 1e-3), random_values(r, rng));
    auto res = fit(s, NoiseSpec(0.0), FitOptions{std::min(s.max_degree(), 12), false});
    for (std::size_t i = 1; i < res.residual_history.size(); ++i) {
      EXPECT_LE(res.residual_history[i].second, res.residual_history[i - 1].second + 1e-12);
      EXPECT_GE(res.residual_history[i].second, 0.0);
      EXPECT_LE(res.residual_history[i].second, 1.0 + 1e-12);
    }
  }
}

TEST(SolveFixedDegree, DegreeZeroIsWeightedMean) {
  std::mt19937_64 rng(11);
  auto s = SampleSet1D::validate(random_points(13, rng), random_values(13, rng));
  Complex num{};
  double den = 0.0;
  for (std::size_t j = 0; j < 13; ++j) {
    num += s.values()[j] * s.weights()[j];
    den += s.weights()[j];
  }
  auto c = solve_fixed_degree(s, 0);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], num / den);
}

TEST(SolveFixedDegree, MatchesDenseOracle) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 3 + rng() % 60;
    auto s = SampleSet1D::validate(random_points(r, rng, 1e-3), random_values(r, rng));
    const int m = static_cast<int>(rng() % static_cast<unsigned>(std::min(s.max_degree(), 15) + 1));
    const auto sys = oracle::build(s, m);
    if (oracle::spectrum(sys).cond > 1e6) continue;
    ++checked;
    EXPECT_LE(fixtures::rel_err(solve_fixed_degree(s, m), oracle::dense_lsq(sys, s.values())), 1e-8);
  }
  EXPECT_GT(checked, 40);
}

TEST(SolveFixedDegree, FullDimensionInterpolates) {
  std::mt19937_64 rng(13);
  auto x = fixtures::jittered_points(15, 0.3, rng);
  auto s = SampleSet1D::validate(x, random_values(15, rng));
  TrigPolynomial p(solve_fixed_degree(s, 7));
  for (std::size_t j = 0; j < 15; ++j) EXPECT_LE(std::abs(p(x[j]) - s.values()[j]), 1e-8);
  EXPECT_THROW(solve_fixed_degree(s, 8), Error);
}

TEST(Nesting, LowerDegreeSystemIsCentralBlock) {
  std::mt19937_64 rng(14);
  auto s = SampleSet1D::validate(random_points(25, rng), random_values(25, rng));
  ToeplitzSystem a(s), b(s);
  for (int m = 0; m < 6; ++m) {
    const auto small = a.dense(m);
    const auto big = b.dense(m + 1);
    const std::size_t n = 2 * static_cast<std::size_t>(m) + 1, nb = n + 2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(small[i * n + j], big[(i + 1) * nb + (j + 1)]);
    for (long k = -m; k <= m; ++k) EXPECT_EQ(a.b(k), rhs_entry(s, k));
  }
}

TEST(EvaluateOnGrid, Basics) {
  TrigPolynomial c3(std::vector<Complex>{3.0});
  for (const auto& v : evaluate_on_grid(c3, 5)) EXPECT_NEAR(std::abs(v - 3.0), 0.0, 1e-15);

  TrigPolynomial e1(std::vector<Complex>{0.0, 0.0, 1.0});
  const auto g = evaluate_on_grid(e1, 4);
  const Complex expect[] = {1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(g[static_cast<std::size_t>(j)] - expect[j]), 0.0, 1e-15);

  EXPECT_THROW(evaluate_on_grid(TrigPolynomial(std::vector<Complex>(7)), 6), Error);
}

TEST(EvaluateOnGrid, MatchesDirectSummation) {
  std::mt19937_64 rng(15);
  auto c = random_coeffs(20, rng);
  const auto g = evaluate_on_grid(TrigPolynomial(c), 64);
  for (std::size_t j = 0; j < 64; ++j) {
    EXPECT_NEAR(std::abs(g[j] - fixtures::eval_direct(c, static_cast<double>(j) / 64.0)), 0.0, 1e-12);
  }
}
