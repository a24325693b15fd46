#ifndef TWOCOMP_STATE_HPP
#define TWOCOMP_STATE_HPP

#include "twocomp/spectral.hpp"

namespace twocomp {

/// Solution pair (m, n) at time t with the derived velocities cached:
/// u = (1-dxx)^{-1} m, v = (1-dxx)^{-1} n, ux = u', vx = v'.
/// The cache is built at construction and never mutated.
struct State {
    double t = 0.0;
    Field m, n;
    Field u, v, ux, vx;

    static State from(Field m0, Field n0, double t0);
};

} // namespace twocomp

#endif
