#include "gaitkit/kalman.hpp"

#include "gaitkit/errors.hpp"

namespace gait {

JointAngleKf::JointAngleKf(double sample_rate_hz, KfParams params) : p_(params) {
    if (sample_rate_hz <= 0.0) throw UsageError("JointAngleKf: sample rate must be positive");
    ts_ = 1.0 / sample_rate_hz;
    P_ = {p_.p0_angle, 0.0, 0.0, p_.p0_bias};
}

void JointAngleKf::reset(double theta0_deg) {
    theta_ = theta0_deg;
    x_ = {0.0, x_[1]};
}

double JointAngleKf::step(double rate_deg_s, double theta_a_deg) {
    // bias-compensated integration
    theta_ += (rate_deg_s - x_[1]) * ts_;

    // predict: P = F P F^T + Q. The angle-error mean stays zero post-reset
    // because the current bias estimate is already removed from the rate.
    double P00 = P_[0] + ts_ * (P_[2] + P_[1]) + ts_ * ts_ * P_[3] + p_.q_angle;
    double P01 = P_[1] + ts_ * P_[3];
    double P10 = P_[2] + ts_ * P_[3];
    double P11 = P_[3] + p_.q_bias;

    // update with z = theta_int - theta_a observed through H = [1, 0]
    double z = theta_ - theta_a_deg;
    double y = z - x_[0];
    double S = P00 + p_.r_meas;
    double K0 = P00 / S;
    double K1 = P10 / S;
    x_[0] += K0 * y;
    x_[1] += K1 * y;
    double nP00 = (1.0 - K0) * P00;
    double nP01 = (1.0 - K0) * P01;
    double nP10 = P10 - K1 * P00;
    double nP11 = P11 - K1 * P01;
    // enforce symmetry
    P_[0] = nP00;
    P_[1] = 0.5 * (nP01 + nP10);
    P_[2] = P_[1];
    P_[3] = nP11;

    // feed back: subtract the estimated angle error, keep beta, reset the error
    theta_ -= x_[0];
    x_[0] = 0.0;
    return theta_;
}

TimeSeries kf_joint_angle(const TimeSeries& theta_g, const TimeSeries& theta_a, KfParams params,
                          std::vector<double>* bias_trace) {
    if (theta_g.size() != theta_a.size())
        throw DimensionMismatch("kf_joint_angle: series lengths differ");
    if (theta_g.sample_rate != theta_a.sample_rate)
        throw DimensionMismatch("kf_joint_angle: sample rates differ");
    if (theta_g.values.empty()) throw EmptySignal("kf_joint_angle: empty input");

    JointAngleKf kf(theta_g.sample_rate, params);
    const double ts = kf.sample_period();
    TimeSeries out;
    out.sample_rate = theta_g.sample_rate;
    out.label = theta_g.label;
    out.values.resize(theta_g.size());
    if (bias_trace) bias_trace->assign(theta_g.size(), 0.0);

    kf.reset(theta_a.values[0]);
    out.values[0] = theta_a.values[0];
    for (std::size_t i = 1; i < theta_g.size(); ++i) {
        double rate = (theta_g.values[i] - theta_g.values[i - 1]) / ts;
        out.values[i] = kf.step(rate, theta_a.values[i]);
        if (bias_trace) (*bias_trace)[i] = kf.bias();
    }
    return out;
}

}  // namespace gait
