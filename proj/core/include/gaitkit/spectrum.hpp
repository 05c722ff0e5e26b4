#pragma once

#include <cstddef>
#include <vector>

namespace gait {

/// One-sided power spectrum on a Hann-windowed, zero-padded (next pow2) FFT,
/// rescaled so the bins sum to the mean squared value of the input
/// (Parseval-consistent band sums).
struct Periodogram {
    std::vector<double> power;  // bin powers, sum == mean(x^2)
    double bin_hz = 0.0;        // frequency step
    std::size_t nfft = 0;

    double frequency(std::size_t bin) const { return static_cast<double>(bin) * bin_hz; }
    /// Sum of bin powers with frequency in [lo_hz, hi_hz].
    double band_power(double lo_hz, double hi_hz) const;
};

Periodogram periodogram(const std::vector<double>& x, double sample_rate);

/// Unbiased autocorrelation of the mean-removed signal, normalized by lag 0.
/// Returns lags 0..max_lag inclusive.
std::vector<double> normalized_autocorrelation(const std::vector<double>& x, std::size_t max_lag);

/// Indices of local maxima (strictly rising into, non-rising out of).
std::vector<std::size_t> local_maxima(const std::vector<double>& v);

}  // namespace gait
