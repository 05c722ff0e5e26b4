#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace gait {

/// Daubechies-4 analysis pyramid with periodic boundary handling
/// (odd-length inputs repeat their last sample before each split).
struct DwtDecomposition {
    /// Detail coefficients per level, finest first, then the final approximation.
    std::vector<std::vector<double>> details;
    std::vector<double> approximation;
};

DwtDecomposition dwt_db4(const std::vector<double>& x, int levels);

/// Mean squared coefficient per band: `levels` detail bands (finest first)
/// followed by the approximation band.
std::vector<double> dwt_band_mean_energy(const DwtDecomposition& d);

}  // namespace gait
