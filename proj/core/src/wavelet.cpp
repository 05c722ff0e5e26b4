#include "gaitkit/wavelet.hpp"

#include <cmath>

#include "gaitkit/errors.hpp"

namespace gait {

namespace {

struct Db4 {
    std::array<double, 4> h;  // scaling (low pass)
    std::array<double, 4> g;  // wavelet (high pass)
    Db4() {
        const double s3 = std::sqrt(3.0);
        const double s2 = std::sqrt(2.0);
        h = {(1.0 + s3) / (4.0 * s2), (3.0 + s3) / (4.0 * s2), (3.0 - s3) / (4.0 * s2),
             (1.0 - s3) / (4.0 * s2)};
        g = {h[3], -h[2], h[1], -h[0]};
    }
};

}  // namespace

DwtDecomposition dwt_db4(const std::vector<double>& x, int levels) {
    if (x.size() < static_cast<std::size_t>(1) << levels)
        throw SignalTooShort("dwt_db4: need at least 2^levels samples");
    static const Db4 w;

    DwtDecomposition out;
    std::vector<double> a = x;
    for (int lev = 0; lev < levels; ++lev) {
        if (a.size() % 2 != 0) a.push_back(a.back());
        const std::size_t n = a.size();
        const std::size_t half = n / 2;
        std::vector<double> approx(half), detail(half);
        for (std::size_t i = 0; i < half; ++i) {
            double lo = 0.0, hi = 0.0;
            for (std::size_t j = 0; j < 4; ++j) {
                double v = a[(2 * i + j) % n];
                lo += v * w.h[j];
                hi += v * w.g[j];
            }
            approx[i] = lo;
            detail[i] = hi;
        }
        out.details.push_back(std::move(detail));
        a = std::move(approx);
    }
    out.approximation = std::move(a);
    return out;
}

std::vector<double> dwt_band_mean_energy(const DwtDecomposition& d) {
    std::vector<double> bands;
    bands.reserve(d.details.size() + 1);
    auto mean_sq = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double c : v) s += c * c;
        return v.empty() ? 0.0 : s / static_cast<double>(v.size());
    };
    for (const auto& det : d.details) bands.push_back(mean_sq(det));
    bands.push_back(mean_sq(d.approximation));
    return bands;
}

}  // namespace gait
