#ifndef TWOCOMP_DIAGNOSTICS_HPP
#define TWOCOMP_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "twocomp/state.hpp"

namespace twocomp {

/// One time sample of the conserved quantities and blow-up monitors.
struct DiagnosticsRecord {
    double t = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double sup_m = 0.0;              // ||m||_inf
    double sup_n = 0.0;              // ||n||_inf
    double inf_slope = 0.0;          // min_x (ux n + vx m)
    double sup_skew = 0.0;           // max_x |u vx - ux v|
    double blowup_integral = 0.0;    // running trapezoid of ||m||_inf ||n||_inf
};

/// H1 = 1/2 integral (u v + ux vx).
double h1(const State& s);

/// The two integration-by-parts forms of H1: 1/2 integral u n and 1/2 integral v m.
double h1_un_form(const State& s);
double h1_vm_form(const State& s);

/// H2 = 1/4 integral ((u^2 vx + ux^2 vx - 2 u ux v) n + 2 b (u vx - ux v)).
double h2(const State& s, double b);

/// All monitors by grid scan; blowup_integral advanced by trapezoid from prev.
DiagnosticsRecord monitors(const State& s, double b, const DiagnosticsRecord* prev = nullptr);

/// Inputs of the blow-up time predictor: the exponential-bound constant C > 0,
/// M(0) = inf_x (ux n + vx m)(0), and N(0) = (m+n) at the initial argmin > 0.
struct EtaProblem {
    double big_c;
    double m_of_0;
    double n_of_0;
};

struct EtaSolution {
    double eta;            // unique positive root of f'
    double f_at_eta;       // f(eta); negative iff the sharper inequality holds
    double fprime_at_eta;  // residual of the root solve
    bool inequality_holds; // f(eta) < 0
};

/// f(t) = e^{(e^{Ct}-1)} (1/N0 + t/2) + (M0/N0 - 1) t/2; solves f'(eta) = 0 by
/// bracket doubling then bisection. Requires M0 < -2C (else HypothesisError).
EtaSolution solve_eta(const EtaProblem& p);

double eta_f(const EtaProblem& p, double t);
double eta_fprime(const EtaProblem& p, double t);

struct BlowupTrip {
    std::string monitor;
    double time;
    double value;
};

struct BlowupReport {
    std::vector<BlowupTrip> trips;
    bool any() const { return !trips.empty(); }
    std::string summary() const;
};

/// Descriptive scan of a record series against the configured thresholds.
BlowupReport blowup_verdict(const std::vector<DiagnosticsRecord>& records,
                            double sup_cap, double slope_floor);

} // namespace twocomp

#endif
