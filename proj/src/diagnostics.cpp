#include "twocomp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twocomp/errors.hpp"

namespace twocomp {

double h1(const State& s) {
    double acc = 0.0;
    for (int i = 0; i < s.m.size(); ++i)
        acc += s.u[i] * s.v[i] + s.ux[i] * s.vx[i];
    return 0.5 * s.m.grid.spacing() * acc;
}

double h1_un_form(const State& s) {
    double acc = 0.0;
    for (int i = 0; i < s.m.size(); ++i) acc += s.u[i] * s.n[i];
    return 0.5 * s.m.grid.spacing() * acc;
}

double h1_vm_form(const State& s) {
    double acc = 0.0;
    for (int i = 0; i < s.m.size(); ++i) acc += s.v[i] * s.m[i];
    return 0.5 * s.m.grid.spacing() * acc;
}

double h2(const State& s, double b) {
    double acc = 0.0;
    for (int i = 0; i < s.m.size(); ++i) {
        const double u = s.u[i], v = s.v[i], ux = s.ux[i], vx = s.vx[i];
        acc += (u * u * vx + ux * ux * vx - 2.0 * u * ux * v) * s.n[i] +
               2.0 * b * (u * vx - ux * v);
    }
    return 0.25 * s.m.grid.spacing() * acc;
}

DiagnosticsRecord monitors(const State& s, double b, const DiagnosticsRecord* prev) {
    DiagnosticsRecord r;
    r.t = s.t;
    r.h1 = h1(s);
    r.h2 = h2(s, b);
    r.sup_m = s.m.max_abs();
    r.sup_n = s.n.max_abs();
    double inf_slope = s.ux[0] * s.n[0] + s.vx[0] * s.m[0];
    double sup_skew = 0.0;
    for (int i = 0; i < s.m.size(); ++i) {
        inf_slope = std::min(inf_slope, s.ux[i] * s.n[i] + s.vx[i] * s.m[i]);
        sup_skew = std::max(sup_skew, std::abs(s.u[i] * s.vx[i] - s.ux[i] * s.v[i]));
    }
    r.inf_slope = inf_slope;
    r.sup_skew = sup_skew;
    if (prev)
        r.blowup_integral = prev->blowup_integral +
                            0.5 * (r.t - prev->t) * (r.sup_m * r.sup_n + prev->sup_m * prev->sup_n);
    return r;
}

double eta_f(const EtaProblem& p, double t) {
    const double ect = std::exp(p.big_c * t);
    return std::exp(ect - 1.0) * (1.0 / p.n_of_0 + 0.5 * t) +
           0.5 * (p.m_of_0 / p.n_of_0 - 1.0) * t;
}

double eta_fprime(const EtaProblem& p, double t) {
    const double ect = std::exp(p.big_c * t);
    return std::exp(ect - 1.0) *
               (p.big_c / p.n_of_0 * ect + 0.5 * p.big_c * t * ect + 0.5) +
           0.5 * (p.m_of_0 / p.n_of_0 - 1.0);
}

EtaSolution solve_eta(const EtaProblem& p) {
    if (!(p.big_c > 0.0)) throw HypothesisError("eta: C must be positive");
    if (!(p.n_of_0 > 0.0)) throw HypothesisError("eta: N(0) must be positive");
    if (!(p.m_of_0 < -2.0 * p.big_c))
        throw HypothesisError("eta: hypothesis M(0) < -2C not met");

    // f'(0) = C/N0 + M0/(2 N0) < 0 under the hypothesis; f' is increasing
    // with f'(t) -> +infinity, so bracket doubling must find a sign change.
    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (eta_fprime(p, hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 80) throw NumericError("eta: no sign change of f' found");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (eta_fprime(p, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    EtaSolution sol;
    sol.eta = 0.5 * (lo + hi);
    sol.fprime_at_eta = eta_fprime(p, sol.eta);
    sol.f_at_eta = eta_f(p, sol.eta);
    sol.inequality_holds = sol.f_at_eta < 0.0;
    if (!(std::abs(sol.fprime_at_eta) < 1e-10))
        throw NumericError("eta: root residual above tolerance");
    return sol;
}

std::string BlowupReport::summary() const {
    if (trips.empty()) return "no blow-up indicators";
    std::ostringstream os;
    for (std::size_t i = 0; i < trips.size(); ++i) {
        if (i) os << "; ";
        os << trips[i].monitor << " tripped at t=" << trips[i].time
           << " (value " << trips[i].value << ")";
    }
    return os.str();
}

BlowupReport blowup_verdict(const std::vector<DiagnosticsRecord>& records,
                            double sup_cap, double slope_floor) {
    if (records.empty()) throw UsageError("blowup_verdict: empty record sequence");
    BlowupReport rep;
    auto first_trip = [&records](auto pred) -> const DiagnosticsRecord* {
        for (const auto& r : records)
            if (pred(r)) return &r;
        return nullptr;
    };
    if (const auto* r = first_trip([&](const DiagnosticsRecord& x) { return x.sup_m > sup_cap; }))
        rep.trips.push_back({"sup_m", r->t, r->sup_m});
    if (const auto* r = first_trip([&](const DiagnosticsRecord& x) { return x.sup_n > sup_cap; }))
        rep.trips.push_back({"sup_n", r->t, r->sup_n});
    if (const auto* r =
            first_trip([&](const DiagnosticsRecord& x) { return x.inf_slope < slope_floor; }))
        rep.trips.push_back({"inf_slope", r->t, r->inf_slope});
    if (const auto* r = first_trip([&](const DiagnosticsRecord& x) { return x.sup_skew > sup_cap; }))
        rep.trips.push_back({"sup_skew", r->t, r->sup_skew});
    // growth-rate indicator for the Theorem 4.1 integral: flag when the last
    // inter-record rate exceeds 100x the first nonzero rate
    if (records.size() >= 3) {
        double first_rate = 0.0;
        for (std::size_t i = 1; i < records.size(); ++i) {
            const double dt = records[i].t - records[i - 1].t;
            if (dt <= 0.0) continue;
            const double rate =
                (records[i].blowup_integral - records[i - 1].blowup_integral) / dt;
            if (rate > 0.0) {
                first_rate = rate;
                break;
            }
        }
        const auto& a = records[records.size() - 2];
        const auto& bck = records.back();
        const double dt = bck.t - a.t;
        if (first_rate > 0.0 && dt > 0.0) {
            const double last_rate = (bck.blowup_integral - a.blowup_integral) / dt;
            if (last_rate > 100.0 * first_rate)
                rep.trips.push_back({"blowup_integral_rate", bck.t, last_rate});
        }
    }
    return rep;
}

} // namespace twocomp
