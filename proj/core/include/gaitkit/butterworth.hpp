#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "gaitkit/types.hpp"

namespace gait {

/// One second-order section, direct form II transposed.
struct Biquad {
    double b0 = 1, b1 = 0, b2 = 0;  // numerator
    double a1 = 0, a2 = 0;          // denominator (a0 normalized to 1)
};

/// Even-order Butterworth low-pass as a cascade of biquads
/// (bilinear transform with cutoff prewarping).
class ButterworthLowpass {
public:
    ButterworthLowpass(int order, double cutoff_hz, double sample_rate_hz);

    /// Single causal pass with steady-state initial conditions at x[0].
    std::vector<double> filter(const std::vector<double>& x) const;

    /// Forward-backward pass (zero phase, squared magnitude response).
    /// Odd-reflection edge padding; output length equals input length.
    std::vector<double> filtfilt(const std::vector<double>& x) const;

    /// |H| of a single pass at frequency f.
    double gain_at(double f_hz) const;

    int order() const { return order_; }
    double cutoff_hz() const { return cutoff_hz_; }
    double sample_rate_hz() const { return sample_rate_hz_; }

private:
    std::vector<double> run_cascade(const std::vector<double>& x) const;

    int order_;
    double cutoff_hz_;
    double sample_rate_hz_;
    std::vector<Biquad> sections_;
};

/// The pipeline's fixed accel smoothing contract: 4th order, 7 Hz, zero phase.
/// Throws UnsupportedRate unless x.sample_rate == 100 Hz.
TimeSeries lowpass7hz(const TimeSeries& x);

/// Causal single-pass variant for streaming/windowed use (same contract otherwise).
TimeSeries lowpass7hz_causal(const TimeSeries& x);

}  // namespace gait
