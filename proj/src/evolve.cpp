#include "twocomp/evolve.hpp"

#include <algorithm>
#include <cmath>

namespace twocomp {

namespace {

Field pointwise(const Field& a, const Field& b) {
    Field out(a.grid);
    for (int i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

Field combine_rk4(const Field& y, double dt, const Field& k1, const Field& k2,
                  const Field& k3, const Field& k4) {
    Field out(y.grid);
    const double w = dt / 6.0;
    for (int i = 0; i < y.size(); ++i)
        out[i] = y[i] + w * ((k1[i] + 2.0 * k2[i]) + (2.0 * k3[i] + k4[i]));
    return out;
}

Field axpy(const Field& y, double a, const Field& x) {
    Field out(y.grid);
    for (int i = 0; i < y.size(); ++i) out[i] = y[i] + a * x[i];
    return out;
}

} // namespace

State State::from(Field m0, Field n0, double t0) {
    require_same_grid(m0, n0);
    State s;
    s.t = t0;
    const Grid1D& g = m0.grid;
    const auto& k = g.wavenumbers();
    const int ny = g.nyquist_index();

    auto velocity_pair = [&](const Field& mom) {
        Spectrum ms = forward(mom);
        Spectrum us = ms;
        for (int j = 0; j <= ny; ++j)
            us.coeff[static_cast<std::size_t>(j)] /=
                1.0 + k[static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)];
        Spectrum dus = us;
        for (int j = 0; j < ny; ++j) {
            const auto c = dus.coeff[static_cast<std::size_t>(j)];
            dus.coeff[static_cast<std::size_t>(j)] = {-k[static_cast<std::size_t>(j)] * c.imag(),
                                                      k[static_cast<std::size_t>(j)] * c.real()};
        }
        dus.coeff[static_cast<std::size_t>(ny)] = 0.0;
        return std::pair<Field, Field>{inverse(us), inverse(dus)};
    };

    auto [u, ux] = velocity_pair(m0);
    auto [v, vx] = velocity_pair(n0);
    s.m = std::move(m0);
    s.n = std::move(n0);
    s.u = std::move(u);
    s.ux = std::move(ux);
    s.v = std::move(v);
    s.vx = std::move(vx);
    return s;
}

void SolverConfig::validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("solver: cfl must be in (0, 1]");
    if (!(dt_max > 0.0)) throw ConfigError("solver: dt_max must be positive");
    if (!(t_end > 0.0)) throw ConfigError("solver: t_end must be positive");
    if (!(blowup_sup_cap > 0.0)) throw ConfigError("solver: sup cap must be positive");
    if (!(blowup_slope_floor < 0.0)) throw ConfigError("solver: slope floor must be negative");
    if (snapshot_every < 0) throw ConfigError("solver: snapshot_every must be >= 0");
}

const char* to_string(Termination t) {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::blowup_sup: return "blowup_sup";
        case Termination::blowup_slope: return "blowup_slope";
        case Termination::numeric_failure: return "numeric_failure";
    }
    return "unknown";
}

std::pair<Field, Field> rhs(const State& s, double b, bool dealias) {
    const Grid1D& g = s.m.grid;
    Field mx = derivative(s.m);
    Field nx = derivative(s.n);

    // With dealiasing on, every factor is truncated to the 2/3 band before a
    // product and the product is truncated again. Base fields are truncated
    // once and reused; first-level products are band-limited by construction,
    // so only the other factor needs the input truncation.
    const int jb = dealias_band(g);
    auto base = [&](const Field& f) { return dealias ? truncate_to_band(f, jb) : f; };
    auto prod = [&](const Field& a, const Field& c) {
        Field p = pointwise(a, c);
        return dealias ? truncate_to_band(p, jb) : p;
    };

    const Field u = base(s.u), v = base(s.v);
    const Field uxt = base(s.ux), vxt = base(s.vx);
    const Field m = base(s.m), n = base(s.n);
    const Field mxt = base(mx), nxt = base(nx);

    Field uv = prod(u, v), uxvx = prod(uxt, vxt);
    Field flow(g);
    for (int i = 0; i < g.n(); ++i) flow[i] = 0.5 * (uv[i] - uxvx[i]);

    Field uxn = prod(uxt, n), vxm = prod(vxt, m);
    Field slope(g);
    for (int i = 0; i < g.n(); ++i) slope[i] = 0.5 * (uxn[i] + vxm[i]);

    Field uvx = prod(u, vxt), uxv = prod(uxt, v);
    Field skew(g);
    for (int i = 0; i < g.n(); ++i) skew[i] = 0.5 * (uvx[i] - uxv[i]);

    Field fm = prod(flow, mxt), fn = prod(flow, nxt);
    Field sm = prod(slope, m), sn = prod(slope, n);
    Field km = prod(skew, m), kn = prod(skew, n);

    Field dm(g), dn(g);
    for (int i = 0; i < g.n(); ++i) {
        dm[i] = ((fm[i] + sm[i]) - km[i]) + b * s.ux[i];
        dn[i] = ((fn[i] + sn[i]) + kn[i]) + b * s.vx[i];
    }
    return {std::move(dm), std::move(dn)};
}

double cfl_dt(const State& s, const SolverConfig& cfg) {
    double speed = 0.0;
    for (int i = 0; i < s.m.size(); ++i) {
        const double a = 0.5 * (s.u[i] * s.v[i] - s.ux[i] * s.vx[i]);
        speed = std::max(speed, std::abs(a));
    }
    return std::min(cfg.dt_max, cfg.cfl * s.m.grid.spacing() / std::max(1e-14, speed));
}

State step_rk4(const State& s, double dt, const SolverConfig& cfg, const StageObserver& observer) {
    if (!(dt > 0.0)) throw UsageError("step_rk4: dt must be positive");

    auto [k1m, k1n] = rhs(s, cfg.b, cfg.dealias);
    State s2 = State::from(axpy(s.m, 0.5 * dt, k1m), axpy(s.n, 0.5 * dt, k1n), s.t + 0.5 * dt);
    auto [k2m, k2n] = rhs(s2, cfg.b, cfg.dealias);
    State s3 = State::from(axpy(s.m, 0.5 * dt, k2m), axpy(s.n, 0.5 * dt, k2n), s.t + 0.5 * dt);
    auto [k3m, k3n] = rhs(s3, cfg.b, cfg.dealias);
    State s4 = State::from(axpy(s.m, dt, k3m), axpy(s.n, dt, k3n), s.t + dt);
    auto [k4m, k4n] = rhs(s4, cfg.b, cfg.dealias);

    if (observer) observer(StageStates{s, s2, s3, s4, dt});

    State out = State::from(combine_rk4(s.m, dt, k1m, k2m, k3m, k4m),
                            combine_rk4(s.n, dt, k1n, k2n, k3n, k4n), s.t + dt);
    if (!out.m.all_finite() || !out.n.all_finite())
        throw NumericError("step_rk4: non-finite state after step");
    return out;
}

RunResult run(const Field& m0, const Field& n0, const SolverConfig& cfg,
              const StageObserver& observer) {
    require_same_grid(m0, n0);
    cfg.validate();

    RunResult res;
    State s = State::from(m0, n0, 0.0);
    res.records.push_back(monitors(s, cfg.b));

    auto snap = [&res](const State& st) {
        res.snapshots.push_back(Snapshot{st.t, st.m, st.n, st.u, st.v});
    };
    if (cfg.snapshot_every > 0) snap(s);

    Termination term = Termination::completed;
    long step_index = 0;
    while (s.t < cfg.t_end - 1e-12) {
        const double dt = std::min(cfl_dt(s, cfg), cfg.t_end - s.t);
        try {
            s = step_rk4(s, dt, cfg, observer);
        } catch (const NumericError&) {
            term = Termination::numeric_failure;
            break;
        }
        ++step_index;
        res.records.push_back(monitors(s, cfg.b, &res.records.back()));
        const DiagnosticsRecord& r = res.records.back();
        if (cfg.snapshot_every > 0 && step_index % cfg.snapshot_every == 0) snap(s);
        if (std::max(r.sup_m, r.sup_n) > cfg.blowup_sup_cap) {
            term = Termination::blowup_sup;
            break;
        }
        if (r.inf_slope < cfg.blowup_slope_floor) {
            term = Termination::blowup_slope;
            break;
        }
    }
    if (cfg.snapshot_every > 0 && res.snapshots.back().t != s.t) snap(s);
    res.final_state = std::move(s);
    res.termination = term;
    return res;
}

} // namespace twocomp
