#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace trigfit::fft {

enum class Direction { forward, backward };

// Unnormalized in-place DFT of arbitrary length backed by FFTW.
//   forward:  X_k = sum_j x_j e^{-2 pi i jk/n}
//   backward: x_j = sum_k X_k e^{+2 pi i jk/n}
// Plans are cached per (length, direction); executing is safe from several
// threads at once.
void transform(std::span<std::complex<double>> data, Direction dir);

std::size_t next_pow2(std::size_t n);

}  // namespace trigfit::fft
