#ifndef TWOCOMP_CHARACTERISTICS_HPP
#define TWOCOMP_CHARACTERISTICS_HPP

#include <vector>

#include "twocomp/evolve.hpp"
#include "twocomp/state.hpp"

namespace twocomp {

/// Trajectory ordering violated: q(t, .) stopped being a diffeomorphism.
struct DiffeomorphismBreakdown : Error {
    using Error::Error;
};

/// Characteristic curves q(t, x) of the advecting flow, co-stepped with the
/// PDE, plus the two exponent accumulators:
///   log_jacobian = log q_x = -1/2 int (ux n + vx m)(s, q) ds,
///   log_skew     = -1/2 int (u vx - ux v)(s, q) ds,
/// so that m(t,q) q_x = m0 exp(log_skew) and n(t,q) q_x = n0 exp(-log_skew).
struct TrajectorySet {
    std::vector<double> seeds;
    std::vector<double> positions;     // unwrapped; ordering is checked on these
    std::vector<double> log_jacobian;
    std::vector<double> log_skew;
    double t = 0.0;

    static TrajectorySet from_seeds(std::vector<double> seeds);
    bool seeds_strictly_increasing() const;
};

/// Advection velocity of the evolved system, -1/2 (uv - ux vx), evaluated at
/// an arbitrary (possibly off-grid) point by trigonometric interpolation.
double flow_speed_at(const State& s, double x);

/// One co-step over the PDE's RK4 substages; positions and accumulators are
/// advanced with the same substage quadrature (Simpson weights). Throws
/// DiffeomorphismBreakdown if ordered trajectories cross.
void advance(TrajectorySet& ts, const StageStates& stages);

/// exp(log_jacobian), the flow Jacobian q_x per trajectory (positive).
std::vector<double> jacobian(const TrajectorySet& ts);

struct InvariantResiduals {
    std::vector<double> res_m;
    std::vector<double> res_n;
};

/// Residuals of the Lagrangian transport identities relative to the initial
/// state s0; zero for exact integration.
InvariantResiduals lagrangian_invariants(const TrajectorySet& ts, const State& s0,
                                         const State& s);

} // namespace twocomp

#endif
