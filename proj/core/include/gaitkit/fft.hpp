#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gait {

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

/// In-place iterative radix-2 FFT. data.size() must be a power of two.
/// inverse=true applies the conjugate transform including the 1/N factor.
void fft(std::vector<std::complex<double>>& data, bool inverse = false);

/// FFT of a real signal zero-padded to `nfft` (power of two, >= x.size()).
std::vector<std::complex<double>> rfft(const std::vector<double>& x, std::size_t nfft);

}  // namespace gait
