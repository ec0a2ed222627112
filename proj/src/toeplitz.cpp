#include "trigfit/toeplitz.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigfit/errors.hpp"
#include "trigfit/fft.hpp"
#include "trigfit/levinson.hpp"

namespace trigfit {
namespace {

// e^{2 pi i k x}, reducing k*x modulo one before the trig call.
Complex phasor(long k, double x) {
  double turns = std::fmod(static_cast<double>(k) * x, 1.0);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

}  // namespace

Complex moment(const SampleSet1D& samples, long k) {
  const auto x = samples.points();
  const auto w = samples.weights();
  Complex sum{};
  for (std::size_t j = 0; j < x.size(); ++j) sum += w[j] * phasor(k, x[j]);
  return sum;
}

Complex rhs_entry(const SampleSet1D& samples, long k) {
  const auto x = samples.points();
  const auto w = samples.weights();
  const auto s = samples.values();
  Complex sum{};
  for (std::size_t j = 0; j < x.size(); ++j) sum += s[j] * w[j] * phasor(k, x[j]);
  return sum;
}

ToeplitzSystem::ToeplitzSystem(SampleSet1D samples) : samples_(std::move(samples)) {
  t0_ = 0.0;
  for (double w : samples_.weights()) t0_ += w;
  sigma_ = samples_.weighted_energy();
  moments_.push_back(Complex(t0_, 0.0));
  ops_.moments += samples_.size();
}

Complex ToeplitzSystem::t(long k) {
  if (k < 0) return std::conj(t(-k));
  while (moments_.size() <= static_cast<std::size_t>(k)) {
    moments_.push_back(moment(samples_, static_cast<long>(moments_.size())));
    ops_.moments += samples_.size();
  }
  return moments_[static_cast<std::size_t>(k)];
}

Complex ToeplitzSystem::b(long k) {
  auto& cache = k >= 0 ? rhs_pos_ : rhs_neg_;
  const std::size_t idx = static_cast<std::size_t>(k >= 0 ? k : -k - 1);
  while (cache.size() <= idx) {
    const long next = static_cast<long>(cache.size());
    cache.push_back(rhs_entry(samples_, k >= 0 ? next : -next - 1));
    ops_.moments += samples_.size();
  }
  return cache[idx];
}

std::vector<Complex> ToeplitzSystem::dense(int degree) {
  const std::size_t n = 2 * static_cast<std::size_t>(degree) + 1;
  std::vector<Complex> mat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      mat[i * n + l] = t(static_cast<long>(i) - static_cast<long>(l));
  return mat;
}

GsFactor::GsFactor(std::vector<Complex> first_column, int degree)
    : degree_(degree), z_(std::move(first_column)) {
  const std::size_t n = 2 * static_cast<std::size_t>(degree) + 1;
  if (z_.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "first column length does not match degree");
  }
  if (z_[0] == Complex{}) throw Error(ErrorCode::ZeroPivot, "z_0 vanishes");
  embed_ = fft::next_pow2(2 * n);

  lower_.assign(embed_, Complex{});
  lower_adj_.assign(embed_, Complex{});
  shifted_.assign(embed_, Complex{});
  shifted_adj_.assign(embed_, Complex{});
  // L: first column z. L^*: circulant with c_0 = conj z_0, c_{N-k} = conj z_k.
  // V: first column [0, conj z_{n-1}, ..., conj z_1].
  for (std::size_t k = 0; k < n; ++k) {
    lower_[k] = z_[k];
    lower_adj_[k == 0 ? 0 : embed_ - k] = std::conj(z_[k]);
  }
  for (std::size_t k = 1; k < n; ++k) {
    const Complex v = std::conj(z_[n - k]);
    shifted_[k] = v;
    shifted_adj_[embed_ - k] = std::conj(v);
  }
  for (auto* col : {&lower_, &lower_adj_, &shifted_, &shifted_adj_}) {
    fft::transform(*col, fft::Direction::forward);
  }
}

GsFactor gs_factorize(ToeplitzSystem& system, int degree) {
  if (degree < 0 || degree > system.max_level()) {
    throw Error(ErrorCode::DegreeTooLarge,
                "degree " + std::to_string(degree) + " needs more than " +
                    std::to_string(system.samples().size()) + " samples");
  }
  const long first = -degree;
  std::vector<Complex> z;
  try {
    z = solve_nested(system, degree,
                     [first](long k) { return k == first ? Complex(1.0) : Complex{}; });
  } catch (const BreakdownError& e) {
    throw Error(ErrorCode::SingularSystem, e.what());
  }
  return GsFactor(std::move(z), degree);
}

std::vector<Complex> gs_apply(const GsFactor& factor, std::span<const Complex> b) {
  const std::size_t n = factor.z_.size();
  if (b.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side has length " +
                                                  std::to_string(b.size()) + ", expected " +
                                                  std::to_string(n));
  }
  const std::size_t big = factor.embed_;
  const double scale = 1.0 / static_cast<double>(big);

  std::vector<Complex> spec(big);
  std::copy(b.begin(), b.end(), spec.begin());
  fft::transform(spec, fft::Direction::forward);

  // Truncated circular product: keep the first n entries of IDFT(a .* spec),
  // zero-pad and transform back.
  auto half_product = [&](const std::vector<Complex>& adj) {
    std::vector<Complex> tmp(big);
    for (std::size_t i = 0; i < big; ++i) tmp[i] = adj[i] * spec[i];
    fft::transform(tmp, fft::Direction::backward);
    for (std::size_t i = 0; i < n; ++i) tmp[i] *= scale;
    std::fill(tmp.begin() + static_cast<long>(n), tmp.end(), Complex{});
    fft::transform(tmp, fft::Direction::forward);
    return tmp;
  };
  const auto left = half_product(factor.lower_adj_);
  const auto right = half_product(factor.shifted_adj_);

  std::vector<Complex> acc(big);
  for (std::size_t i = 0; i < big; ++i) {
    acc[i] = factor.lower_[i] * left[i] - factor.shifted_[i] * right[i];
  }
  fft::transform(acc, fft::Direction::backward);

  const Complex denom = factor.z_[0] * static_cast<double>(big);
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = acc[i] / denom;
  return x;
}

}  // namespace trigfit
