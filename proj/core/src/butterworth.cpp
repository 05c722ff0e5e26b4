#include "gaitkit/butterworth.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gaitkit/errors.hpp"

namespace gait {

ButterworthLowpass::ButterworthLowpass(int order, double cutoff_hz, double sample_rate_hz)
    : order_(order), cutoff_hz_(cutoff_hz), sample_rate_hz_(sample_rate_hz) {
    if (order < 2 || order % 2 != 0) throw UsageError("ButterworthLowpass: order must be even, >= 2");
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < sample_rate_hz / 2.0))
        throw UsageError("ButterworthLowpass: cutoff must lie in (0, Nyquist)");

    const double K = 2.0 * sample_rate_hz;
    const double wc = K * std::tan(M_PI * cutoff_hz / sample_rate_hz);  // prewarped analog cutoff

    for (int k = 0; k < order / 2; ++k) {
        // analog pole pair of the Butterworth circle
        double theta = M_PI * (2.0 * k + 1.0) / (2.0 * order) + M_PI / 2.0;
        std::complex<double> p = wc * std::exp(std::complex<double>(0.0, theta));
        // analog biquad wc^2 / (s^2 - 2 Re(p) s + |p|^2), bilinear s = K (1-z^-1)/(1+z^-1)
        double as1 = -2.0 * p.real();
        double as2 = std::norm(p);
        double a0 = K * K + as1 * K + as2;
        Biquad q;
        q.b0 = wc * wc / a0;
        q.b1 = 2.0 * wc * wc / a0;
        q.b2 = wc * wc / a0;
        q.a1 = (2.0 * as2 - 2.0 * K * K) / a0;
        q.a2 = (as2 - as1 * K + K * K) / a0;
        sections_.push_back(q);
    }
}

namespace {

// Steady-state DF2T delay registers for a constant input x0, so a causal pass
// starts without a step transient.
std::array<double, 2> steady_state(const Biquad& q, double x0) {
    // z = A z + B x0 with A = [[-a1, 1], [-a2, 0]]
    double b1 = q.b1 - q.a1 * q.b0;
    double b2 = q.b2 - q.a2 * q.b0;
    // solve (I - A) z = B x0
    double det = (1.0 + q.a1) + q.a2;  // det([[1+a1, -1],[a2, 1]])
    double z0 = ((b1 + b2) / det) * x0;
    double z1 = ((b2 * (1.0 + q.a1) - b1 * q.a2) / det) * x0;
    return {z0, z1};
}

}  // namespace

std::vector<double> ButterworthLowpass::run_cascade(const std::vector<double>& x) const {
    std::vector<double> y = x;
    for (const auto& q : sections_) {
        auto z = steady_state(q, y.empty() ? 0.0 : y.front());
        for (double& v : y) {
            double w = q.b0 * v + z[0];
            z[0] = q.b1 * v - q.a1 * w + z[1];
            z[1] = q.b2 * v - q.a2 * w;
            v = w;
        }
    }
    return y;
}

std::vector<double> ButterworthLowpass::filter(const std::vector<double>& x) const {
    if (x.empty()) throw EmptySignal("ButterworthLowpass::filter: empty input");
    return run_cascade(x);
}

std::vector<double> ButterworthLowpass::filtfilt(const std::vector<double>& x) const {
    if (x.empty()) throw EmptySignal("ButterworthLowpass::filtfilt: empty input");
    const std::size_t n = x.size();
    const std::size_t pad = std::min<std::size_t>(3 * (static_cast<std::size_t>(order_) + 1), n - 1);

    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 1; i <= pad; ++i) ext.push_back(2.0 * x.back() - x[n - 1 - i]);

    auto y = run_cascade(ext);
    std::reverse(y.begin(), y.end());
    y = run_cascade(y);
    std::reverse(y.begin(), y.end());

    return std::vector<double>(y.begin() + static_cast<std::ptrdiff_t>(pad),
                               y.begin() + static_cast<std::ptrdiff_t>(pad + n));
}

double ButterworthLowpass::gain_at(double f_hz) const {
    std::complex<double> z = std::exp(std::complex<double>(0.0, -2.0 * M_PI * f_hz / sample_rate_hz_));
    std::complex<double> g(1.0, 0.0);
    for (const auto& q : sections_) {
        g *= (q.b0 + q.b1 * z + q.b2 * z * z) / (1.0 + q.a1 * z + q.a2 * z * z);
    }
    return std::abs(g);
}

namespace {

const ButterworthLowpass& contract_filter() {
    static const ButterworthLowpass f(4, 7.0, 100.0);
    return f;
}

void check_rate(const TimeSeries& x) {
    if (x.sample_rate != 100.0)
        throw UnsupportedRate("lowpass7hz: contract requires 100 Hz input, got " +
                              std::to_string(x.sample_rate));
}

}  // namespace

TimeSeries lowpass7hz(const TimeSeries& x) {
    check_rate(x);
    return {contract_filter().filtfilt(x.values), x.sample_rate, x.label};
}

TimeSeries lowpass7hz_causal(const TimeSeries& x) {
    check_rate(x);
    return {contract_filter().filter(x.values), x.sample_rate, x.label};
}

}  // namespace gait
