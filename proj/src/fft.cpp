#include "trigfit/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace trigfit::fft {
namespace {

// FFTW's planner is not thread-safe, fftw_execute_dft is.
std::mutex plan_mutex;

struct PlanCache {
  std::map<std::pair<std::size_t, int>, fftw_plan> plans;
  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }
};

fftw_plan plan_for(std::size_t n, int sign) {
  static PlanCache cache;
  std::lock_guard lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  if (auto it = cache.plans.find(key); it != cache.plans.end()) return it->second;
  std::vector<std::complex<double>> scratch(n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.plans.emplace(key, plan);
  return plan;
}

}  // namespace

void transform(std::span<std::complex<double>> data, Direction dir) {
  if (data.size() <= 1) return;
  const int sign = dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan_for(data.size(), sign), buf, buf);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace trigfit::fft
