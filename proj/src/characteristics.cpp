#include "twocomp/characteristics.hpp"

#include <cmath>

namespace twocomp {

namespace {

// Spectral point evaluator of the flow, slope, and skew fields of one state.
class StageEvaluator {
  public:
    explicit StageEvaluator(const State& s)
        : u_(s.u), v_(s.v), ux_(s.ux), vx_(s.vx), m_(s.m), n_(s.n) {}

    double flow(double x) const {
        return -0.5 * (u_(x) * v_(x) - ux_(x) * vx_(x));
    }
    double slope_rate(double x) const { // d/dt log q_x along the trajectory
        return -0.5 * (ux_(x) * n_(x) + vx_(x) * m_(x));
    }
    double skew_rate(double x) const {
        return -0.5 * (u_(x) * vx_(x) - ux_(x) * v_(x));
    }

  private:
    Interpolant u_, v_, ux_, vx_, m_, n_;
};

} // namespace

TrajectorySet TrajectorySet::from_seeds(std::vector<double> seeds) {
    TrajectorySet ts;
    ts.positions = seeds;
    ts.seeds = std::move(seeds);
    ts.log_jacobian.assign(ts.seeds.size(), 0.0);
    ts.log_skew.assign(ts.seeds.size(), 0.0);
    return ts;
}

bool TrajectorySet::seeds_strictly_increasing() const {
    for (std::size_t i = 1; i < seeds.size(); ++i)
        if (!(seeds[i] > seeds[i - 1])) return false;
    return true;
}

double flow_speed_at(const State& s, double x) {
    return StageEvaluator(s).flow(x);
}

void advance(TrajectorySet& ts, const StageStates& stages) {
    const double dt = stages.dt;
    const StageEvaluator e1(stages.s1), e2(stages.s2), e3(stages.s3), e4(stages.s4);
    const bool check_order = ts.seeds_strictly_increasing();

    std::vector<double> next_q(ts.positions.size());
    for (std::size_t i = 0; i < ts.positions.size(); ++i) {
        const double q = ts.positions[i];

        const double w1 = e1.flow(q);
        const double j1 = e1.slope_rate(q);
        const double s1 = e1.skew_rate(q);

        const double q2 = q + 0.5 * dt * w1;
        const double w2 = e2.flow(q2);
        const double j2 = e2.slope_rate(q2);
        const double s2 = e2.skew_rate(q2);

        const double q3 = q + 0.5 * dt * w2;
        const double w3 = e3.flow(q3);
        const double j3 = e3.slope_rate(q3);
        const double s3 = e3.skew_rate(q3);

        const double q4 = q + dt * w3;
        const double w4 = e4.flow(q4);
        const double j4 = e4.slope_rate(q4);
        const double s4 = e4.skew_rate(q4);

        next_q[i] = q + dt / 6.0 * ((w1 + 2.0 * w2) + (2.0 * w3 + w4));
        ts.log_jacobian[i] += dt / 6.0 * ((j1 + 2.0 * j2) + (2.0 * j3 + j4));
        ts.log_skew[i] += dt / 6.0 * ((s1 + 2.0 * s2) + (2.0 * s3 + s4));
        if (!std::isfinite(next_q[i]))
            throw NumericError("characteristics: non-finite trajectory position");
    }
    if (check_order) {
        for (std::size_t i = 1; i < next_q.size(); ++i)
            if (!(next_q[i] > next_q[i - 1]))
                throw DiffeomorphismBreakdown(
                    "characteristics: trajectory ordering violated at t = " +
                    std::to_string(stages.s1.t + dt));
    }
    ts.positions = std::move(next_q);
    ts.t = stages.s1.t + dt;
}

std::vector<double> jacobian(const TrajectorySet& ts) {
    std::vector<double> out(ts.log_jacobian.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(ts.log_jacobian[i]);
    return out;
}

InvariantResiduals lagrangian_invariants(const TrajectorySet& ts, const State& s0,
                                         const State& s) {
    const Interpolant m_now(s.m), n_now(s.n), m_init(s0.m), n_init(s0.n);
    InvariantResiduals out;
    out.res_m.resize(ts.positions.size());
    out.res_n.resize(ts.positions.size());
    for (std::size_t i = 0; i < ts.positions.size(); ++i) {
        const double qx = std::exp(ts.log_jacobian[i]);
        const double q = ts.positions[i];
        const double x0 = ts.seeds[i];
        out.res_m[i] = m_now(q) * qx - m_init(x0) * std::exp(ts.log_skew[i]);
        out.res_n[i] = n_now(q) * qx - n_init(x0) * std::exp(-ts.log_skew[i]);
    }
    return out;
}

} // namespace twocomp
