#ifndef TWOCOMP_EVOLVE_HPP
#define TWOCOMP_EVOLVE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "twocomp/diagnostics.hpp"
#include "twocomp/state.hpp"

namespace twocomp {

struct SolverConfig {
    double b = 0.0;
    double cfl = 0.4;
    double dt_max = 1e-3;
    double t_end = 1.0;
    bool dealias = true;
    double blowup_sup_cap = 1e6;
    double blowup_slope_floor = -1e6;
    int snapshot_every = 0;

    void validate() const;
};

enum class Termination { completed, blowup_sup, blowup_slope, numeric_failure };

const char* to_string(Termination t);

struct Snapshot {
    double t;
    Field m, n, u, v;
};

struct RunResult {
    State final_state;
    Termination termination = Termination::completed;
    std::vector<DiagnosticsRecord> records;
    std::vector<Snapshot> snapshots;
};

/// The four Runge-Kutta substage states of one step from s1.t to s1.t + dt.
struct StageStates {
    const State& s1;
    const State& s2;
    const State& s3;
    const State& s4;
    double dt;
};

using StageObserver = std::function<void(const StageStates&)>;

/// Tendencies of the evolved pair:
///   dm/dt = 1/2 (uv - ux vx) m_x + 1/2 (ux n + vx m) m - 1/2 (u vx - ux v) m + b ux,
///   dn/dt = 1/2 (uv - ux vx) n_x + 1/2 (ux n + vx m) n + 1/2 (u vx - ux v) n + b vx.
/// Products go through the 2/3 rule when dealias is set. The arithmetic is
/// arranged so that swapping (m,n) swaps (dm,dn) bit for bit.
std::pair<Field, Field> rhs(const State& s, double b, bool dealias = true);

/// dt = min(dt_max, cfl * spacing / max(1e-14, max|1/2 (uv - ux vx)|)).
double cfl_dt(const State& s, const SolverConfig& cfg);

/// Classical RK4 step; the observer (if any) sees the four substage states
/// before the combination is formed. Throws NumericError on non-finite results.
State step_rk4(const State& s, double dt, const SolverConfig& cfg,
               const StageObserver& observer = {});

/// CFL-limited RK4 loop with per-step diagnostics, snapshots, and blow-up
/// guards. Termination is reported, never thrown.
RunResult run(const Field& m0, const Field& n0, const SolverConfig& cfg,
              const StageObserver& observer = {});

} // namespace twocomp

#endif
