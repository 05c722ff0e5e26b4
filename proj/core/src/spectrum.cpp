#include "gaitkit/spectrum.hpp"

#include <cmath>

#include "gaitkit/errors.hpp"
#include "gaitkit/fft.hpp"

namespace gait {

double Periodogram::band_power(double lo_hz, double hi_hz) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < power.size(); ++k) {
        double f = frequency(k);
        if (f >= lo_hz && f <= hi_hz) sum += power[k];
    }
    return sum;
}

Periodogram periodogram(const std::vector<double>& x, double sample_rate) {
    if (x.empty()) throw EmptySignal("periodogram: empty input");
    const std::size_t n = x.size();
    const std::size_t nfft = next_pow2(n);

    std::vector<double> windowed(n);
    double msq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double w = n > 1 ? 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) /
                                                static_cast<double>(n - 1))
                         : 1.0;
        windowed[i] = x[i] * w;
        msq += x[i] * x[i];
    }
    msq /= static_cast<double>(n);

    auto spec = rfft(windowed, nfft);
    Periodogram out;
    out.nfft = nfft;
    out.bin_hz = sample_rate / static_cast<double>(nfft);
    out.power.resize(nfft / 2 + 1);
    double total = 0.0;
    for (std::size_t k = 0; k < out.power.size(); ++k) {
        double p = std::norm(spec[k]);
        if (k != 0 && k != nfft / 2) p *= 2.0;  // one-sided doubling
        out.power[k] = p;
        total += p;
    }
    if (total > 0.0) {
        double scale = msq / total;
        for (auto& p : out.power) p *= scale;
    }
    return out;
}

std::vector<double> normalized_autocorrelation(const std::vector<double>& x, std::size_t max_lag) {
    const std::size_t n = x.size();
    if (n == 0) throw EmptySignal("autocorrelation: empty input");
    if (max_lag >= n) throw SignalTooShort("autocorrelation: max_lag >= length");

    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);

    const std::size_t nfft = next_pow2(2 * n);
    std::vector<std::complex<double>> d(nfft);
    for (std::size_t i = 0; i < n; ++i) d[i] = x[i] - mean;
    fft(d);
    for (auto& c : d) c = std::norm(c);
    fft(d, true);

    std::vector<double> r(max_lag + 1);
    for (std::size_t lag = 0; lag <= max_lag; ++lag)
        r[lag] = d[lag].real() / static_cast<double>(n - lag);  // unbiased
    if (r[0] <= 0.0) throw ZeroVariance("autocorrelation: constant signal");
    double r0 = r[0];
    for (auto& v : r) v /= r0;
    return r;
}

std::vector<std::size_t> local_maxima(const std::vector<double>& v) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] > v[i - 1] && v[i] >= v[i + 1]) idx.push_back(i);
    }
    return idx;
}

}  // namespace gait
