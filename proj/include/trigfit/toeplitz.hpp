#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "trigfit/sampling.hpp"

namespace trigfit {

/// Arithmetic-operation tallies, in complex multiply-adds.
///
/// `moments` counts sample-side work: the O(r) sums behind t_k and b_k and any
/// direct residual evaluation;
/// `recursion` counts the Levinson updates (inner products, vector updates
/// and residual evaluations).
struct OpCounts {
  std::uint64_t moments = 0;
  std::uint64_t recursion = 0;

  std::uint64_t total() const { return moments + recursion; }
};

/// t_k = sum_j w_j e^{2 pi i k x_j}; t_{-k} = conj(t_k).
Complex moment(const SampleSet1D& samples, long k);

/// b_k = sum_j s_j w_j e^{2 pi i k x_j}.
Complex rhs_entry(const SampleSet1D& samples, long k);

/// Moments and right-hand sides of the nested normal equations T_M c = b.
///
/// Entries are computed on first request and cached, so a recursion that
/// climbs from degree M to M+1 only pays for the two new moments and the two
/// new right-hand side entries. Only t_k for k >= 0 is stored; negative
/// indices are served by conjugation, which makes every T_M exactly
/// Hermitian. Lazy caching mutates internal state, so one instance must not
/// be shared between threads while it is still growing.
class ToeplitzSystem {
 public:
  explicit ToeplitzSystem(SampleSet1D samples);

  const SampleSet1D& samples() const { return samples_; }

  Complex t(long k);
  Complex b(long k);

  double t0() const { return t0_; }
  double sigma() const { return sigma_; }
  int max_level() const { return samples_.max_degree(); }

  /// Dense (2M+1)x(2M+1) matrix [t_{k-l}], row-major, rows k = -M..M.
  std::vector<Complex> dense(int degree);

  const OpCounts& ops() const { return ops_; }
  OpCounts& ops() { return ops_; }

 private:
  SampleSet1D samples_;
  double t0_;
  double sigma_;
  std::vector<Complex> moments_;   // t_0, t_1, ...
  std::vector<Complex> rhs_pos_;   // b_0, b_1, ...
  std::vector<Complex> rhs_neg_;   // b_{-1}, b_{-2}, ...
  OpCounts ops_;
};

/// First column of T_M^{-1} together with the transforms that apply the
/// Gohberg-Semencul representation
///
///   T^{-1} = (L L^* - V V^*) / z_0
///
/// where L is lower-triangular Toeplitz with first column z and V is
/// lower-triangular Toeplitz with first column [0, conj(z_n-1), ..., conj(z_1)].
/// Each triangular product is a truncated circular convolution of length
/// next_pow2(2n). Immutable after construction.
class GsFactor {
 public:
  GsFactor(std::vector<Complex> first_column, int degree);

  int degree() const { return degree_; }
  std::span<const Complex> z() const { return z_; }
  std::size_t embedding_size() const { return embed_; }

 private:
  friend std::vector<Complex> gs_apply(const GsFactor&, std::span<const Complex>);

  int degree_;
  std::vector<Complex> z_;
  std::size_t embed_;
  // DFTs of the circulant first columns embedding L, L^*, V and V^*.
  std::vector<Complex> lower_, lower_adj_, shifted_, shifted_adj_;
};

/// Runs the Levinson recursion on T_M z = e_1 and wraps the result.
GsFactor gs_factorize(ToeplitzSystem& system, int degree);

/// T_M^{-1} b via two pairs of triangular-Toeplitz products.
std::vector<Complex> gs_apply(const GsFactor& factor, std::span<const Complex> b);

}  // namespace trigfit
