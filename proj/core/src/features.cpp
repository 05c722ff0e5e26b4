#include "gaitkit/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gaitkit/errors.hpp"
#include "gaitkit/fft.hpp"
#include "gaitkit/spectrum.hpp"
#include "gaitkit/wavelet.hpp"

namespace gait {

namespace {

constexpr double kStepLoS = 0.3, kStepHiS = 1.0;
constexpr double kStrideLoS = 0.6, kStrideHiS = 2.0;
constexpr double kPeakFloor = 0.2;
constexpr double kDominanceFrac = 0.4;
constexpr double kBandLoHz = 0.5, kBandHiHz = 5.0;
constexpr int kHarmonics = 5;  // fundamental + 4
constexpr int kDwtLevels = 5;

}  // namespace

std::string SignalId::name() const {
    if (kind == Kind::Accel)
        return to_string(placement) + "_" + std::string(1, static_cast<char>('x' + axis));
    return to_string(joint);
}

const std::array<SignalId, kNumSignals>& all_signals() {
    static const auto table = [] {
        std::array<SignalId, kNumSignals> t{};
        std::size_t i = 0;
        for (auto p : all_placements())
            for (int ax = 0; ax < 3; ++ax)
                t[i++] = SignalId{SignalId::Kind::Accel, p, ax, JointId::LeftHip};
        for (auto j : all_joints())
            t[i++] = SignalId{SignalId::Kind::Joint, SensorPlacement::Pelvis, 0, j};
        return t;
    }();
    return table;
}

std::size_t signal_index(const SignalId& s) {
    if (s.kind == SignalId::Kind::Accel)
        return static_cast<std::size_t>(s.placement) * 3 + static_cast<std::size_t>(s.axis);
    return kNumPlacements * 3 + static_cast<std::size_t>(s.joint);
}

std::optional<SignalId> signal_from_name(const std::string& name) {
    for (const auto& s : all_signals())
        if (s.name() == name) return s;
    return std::nullopt;
}

const std::array<FeatureId, kNumFeatures>& all_features() {
    static const std::array<FeatureId, kNumFeatures> t = {
        FeatureId::MI,  FeatureId::PAF, FeatureId::StepPeriod,
        FeatureId::StridePeriod, FeatureId::Regularity, FeatureId::APC,
        FeatureId::SE,  FeatureId::SMNR, FeatureId::WE};
    return t;
}

std::string to_string(FeatureId f) {
    switch (f) {
        case FeatureId::MI: return "MI";
        case FeatureId::PAF: return "PAF";
        case FeatureId::StepPeriod: return "StepPeriod";
        case FeatureId::StridePeriod: return "StridePeriod";
        case FeatureId::Regularity: return "Regularity";
        case FeatureId::APC: return "APC";
        case FeatureId::SE: return "SE";
        case FeatureId::SMNR: return "SMNR";
        case FeatureId::WE: return "WE";
    }
    return "?";
}

std::optional<FeatureId> feature_from_string(const std::string& s) {
    for (auto f : all_features())
        if (to_string(f) == s) return f;
    return std::nullopt;
}

std::string feature_column_name(const SignalId& s, FeatureId f) {
    return s.name() + "_" + to_string(f);
}

const std::vector<std::string>& all_feature_column_names() {
    static const auto names = [] {
        std::vector<std::string> v;
        v.reserve(kNumFeatureColumns);
        for (const auto& s : all_signals())
            for (auto f : all_features()) v.push_back(feature_column_name(s, f));
        return v;
    }();
    return names;
}

// ---- extractors -----------------------------------------------------------

double movement_intensity(const TimeSeries& x) {
    if (x.values.empty()) throw EmptySignal("movement_intensity: empty signal");
    double s = 0.0;
    for (double v : x.values) s += v * v;
    return std::sqrt(s / static_cast<double>(x.values.size()));
}

double paf(const TimeSeries& x) {
    if (x.values.empty()) throw EmptySignal("paf: empty signal");
    const double n = static_cast<double>(x.values.size());
    double mean = 0.0;
    for (double v : x.values) mean += v;
    mean /= n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : x.values) {
        double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    if (m2 <= 0.0) throw ZeroVariance("paf: constant signal");
    return m3 / std::pow(m2, 1.5);
}

GaitPeriods detect_periods(const TimeSeries& x) {
    GaitPeriods out;
    const double fs = x.sample_rate;
    const auto max_lag = static_cast<std::size_t>(std::lround(kStrideHiS * fs));
    if (x.values.size() <= max_lag) return out;

    std::vector<double> rho;
    try {
        rho = normalized_autocorrelation(x.values, max_lag);
    } catch (const Error&) {
        return out;  // constant signal: no periodicity
    }

    const auto lo = static_cast<std::size_t>(std::lround(kStepLoS * fs));
    auto peaks = local_maxima(rho);
    std::erase_if(peaks, [&](std::size_t i) { return i < lo || i > max_lag; });
    if (peaks.empty()) return out;

    double strongest = 0.0;
    for (auto i : peaks) strongest = std::max(strongest, rho[i]);
    const double threshold = std::max(kPeakFloor, kDominanceFrac * strongest);
    std::erase_if(peaks, [&](std::size_t i) { return rho[i] < threshold; });
    if (peaks.empty()) return out;

    const auto step_hi = static_cast<std::size_t>(std::lround(kStepHiS * fs));
    const auto stride_lo = static_cast<std::size_t>(std::lround(kStrideLoS * fs));

    std::size_t step_lag = 0;
    for (auto i : peaks) {
        if (i <= step_hi) {
            step_lag = i;
            out.step_s = static_cast<double>(i) / fs;
            break;
        }
    }
    for (auto i : peaks) {
        if (i > step_lag && i >= stride_lo && i <= max_lag) {
            out.stride_s = static_cast<double>(i) / fs;
            out.regularity = std::clamp(rho[i], 0.0, 1.0);
            break;
        }
    }
    return out;
}

double step_period(const TimeSeries& x) {
    auto p = detect_periods(x);
    if (!p.step_s) throw NoPeriodicity("step_period: no dominant peak in [0.3, 1.0] s");
    return *p.step_s;
}

double stride_period(const TimeSeries& x) {
    auto p = detect_periods(x);
    if (!p.stride_s) throw NoPeriodicity("stride_period: no dominant peak in [0.6, 2.0] s");
    return *p.stride_s;
}

double regularity(const TimeSeries& x) {
    auto p = detect_periods(x);
    if (!p.regularity) throw NoPeriodicity("regularity: stride period undetected");
    return *p.regularity;
}

double apc(const TimeSeries& x) {
    if (x.values.empty()) throw EmptySignal("apc: empty signal");
    return periodogram(x.values, x.sample_rate).band_power(kBandLoHz, kBandHiHz);
}

double spectral_entropy(const TimeSeries& x) {
    if (x.values.empty()) throw EmptySignal("spectral_entropy: empty signal");
    double mean = 0.0;
    for (double v : x.values) mean += v;
    mean /= static_cast<double>(x.values.size());
    std::vector<double> centered(x.values.size());
    for (std::size_t i = 0; i < x.values.size(); ++i) centered[i] = x.values[i] - mean;

    auto pg = periodogram(centered, x.sample_rate);
    double total = 0.0;
    for (double p : pg.power) total += p;
    if (total <= 0.0) throw ZeroVariance("spectral_entropy: constant signal");
    double h = 0.0;
    for (double p : pg.power) {
        double q = p / total;
        if (q > 0.0) h -= q * std::log(q);
    }
    return h / std::log(static_cast<double>(pg.power.size()));
}

double smnr(const TimeSeries& x) {
    auto periods = detect_periods(x);
    if (!periods.stride_s) throw NoPeriodicity("smnr: stride period undetected");
    auto pg = periodogram(x.values, x.sample_rate);

    const double f0 = 1.0 / *periods.stride_s;
    std::vector<bool> harmonic(pg.power.size(), false);
    for (int k = 1; k <= kHarmonics; ++k) {
        auto center = static_cast<std::ptrdiff_t>(std::lround(k * f0 / pg.bin_hz));
        for (std::ptrdiff_t d = -1; d <= 1; ++d) {
            auto b = center + d;
            if (b >= 0 && b < static_cast<std::ptrdiff_t>(pg.power.size()))
                harmonic[static_cast<std::size_t>(b)] = true;
        }
    }
    double num = 0.0, den = 0.0, total = 0.0;
    for (std::size_t b = 0; b < pg.power.size(); ++b) {
        total += pg.power[b];
        double f = pg.frequency(b);
        if (harmonic[b])
            num += pg.power[b];
        else if (f >= kBandLoHz && f <= kBandHiHz)
            den += pg.power[b];
    }
    den = std::max(den, 1e-12 * total);
    num = std::max(num, 1e-300);
    return 10.0 * std::log10(num / den);
}

double wavelet_energy(const TimeSeries& x) {
    if (x.values.size() < 64) throw SignalTooShort("wavelet_energy: need >= 64 samples");
    auto bands = dwt_band_mean_energy(dwt_db4(x.values, kDwtLevels));
    double total = 0.0;
    for (double e : bands) total += e;
    if (total <= 0.0) return 0.0;
    double h = 0.0;
    for (double e : bands) {
        double p = e / total;
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

// ---- per-trial extraction ---------------------------------------------------

const TimeSeries& signal_series(const TrialSignals& signals, const SignalId& id) {
    if (id.kind == SignalId::Kind::Accel)
        return signals.accel_global[static_cast<std::size_t>(id.placement)]
                                   [static_cast<std::size_t>(id.axis)];
    return signals.joints[static_cast<std::size_t>(id.joint)].angle;
}

namespace {

double compute_feature(const TimeSeries& x, FeatureId f, const GaitPeriods& periods) {
    switch (f) {
        case FeatureId::MI: return movement_intensity(x);
        case FeatureId::PAF: return paf(x);
        case FeatureId::StepPeriod:
            if (!periods.step_s) throw NoPeriodicity("step period undetected");
            return *periods.step_s;
        case FeatureId::StridePeriod:
            if (!periods.stride_s) throw NoPeriodicity("stride period undetected");
            return *periods.stride_s;
        case FeatureId::Regularity:
            if (!periods.regularity) throw NoPeriodicity("stride period undetected");
            return *periods.regularity;
        case FeatureId::APC: return apc(x);
        case FeatureId::SE: return spectral_entropy(x);
        case FeatureId::SMNR: return smnr(x);
        case FeatureId::WE: return wavelet_energy(x);
    }
    throw UsageError("unknown feature");
}

}  // namespace

ExtractionResult extract_features(const TrialSignals& signals, const SubjectMeta& subject) {
    ExtractionResult result;
    FeatureVector fv;
    fv.subject_id = subject.id;
    fv.group = subject.group;
    fv.days_post_op = subject.days_post_op;

    for (const auto& sid : all_signals()) {
        const TimeSeries& x = signal_series(signals, sid);
        auto periods = detect_periods(x);
        for (auto f : all_features()) {
            double v = std::numeric_limits<double>::quiet_NaN();
            try {
                v = compute_feature(x, f, periods);
            } catch (const Error& e) {
                result.issues.push_back({sid, f, e.what()});
                continue;
            }
            if (!std::isfinite(v)) {
                result.issues.push_back({sid, f, "non-finite value"});
                continue;
            }
            fv.values[signal_index(sid) * kNumFeatures + static_cast<std::size_t>(f)] = v;
        }
    }
    if (result.issues.empty()) result.vector = std::move(fv);
    return result;
}

std::vector<WindowFeatures> windowed_features(const TimeSeries& x, std::size_t window,
                                              std::size_t hop) {
    if (window == 0 || hop == 0) throw UsageError("windowed_features: window and hop must be >= 1");
    if (window > x.values.size())
        throw WindowTooLong("windowed_features: window exceeds signal length");

    std::vector<WindowFeatures> out;
    for (std::size_t start = 0; start + window <= x.values.size(); start += hop) {
        WindowFeatures wf;
        wf.window_index = out.size();
        wf.start_sample = start;
        TimeSeries piece{std::vector<double>(x.values.begin() + static_cast<std::ptrdiff_t>(start),
                                             x.values.begin() +
                                                 static_cast<std::ptrdiff_t>(start + window)),
                         x.sample_rate, x.label};
        auto periods = detect_periods(piece);
        for (auto f : all_features()) {
            try {
                double v = compute_feature(piece, f, periods);
                if (std::isfinite(v)) wf.values[static_cast<std::size_t>(f)] = v;
            } catch (const Error&) {
                // left empty
            }
        }
        out.push_back(std::move(wf));
    }
    return out;
}

}  // namespace gait
