#include "twocomp/exact.hpp"

#include <cmath>
#include <string>

#include "twocomp/spectral.hpp"

namespace twocomp {

namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

double peakon_profile(double amp, double xi) { return amp * std::exp(-std::abs(xi)); }

double kink_profile(double amp, double xi) {
    return amp * sgn(xi) * (std::exp(-std::abs(xi)) - 1.0);
}

void check_rel(double lhs, double rhs, const char* what) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    if (std::abs(lhs - rhs) > 1e-12 * scale)
        throw InvalidParameterError(std::string("exact: constraint violated: ") + what);
}

} // namespace

double ExactSolution::speed() const {
    return kind_ == WaveKind::peakon ? peakon().c : kink().c;
}

double ExactSolution::u(double x, double t) const {
    return kind_ == WaveKind::peakon ? peakon_profile(peakon().c1, x - peakon().c * t)
                                     : kink_profile(kink().big_c1, x - kink().c * t);
}

double ExactSolution::v(double x, double t) const {
    return kind_ == WaveKind::peakon ? peakon_profile(peakon().c2, x - peakon().c * t)
                                     : kink_profile(kink().big_c2, x - kink().c * t);
}

void ExactSolution::validate() const {
    if (kind_ == WaveKind::peakon) {
        const auto& p = peakon();
        if (p.c == 0.0 || p.c1 == 0.0 || p.c2 == 0.0)
            throw InvalidParameterError("exact: peakon requires c, c1, c2 != 0");
        check_rel(p.c1 * p.c2, -3.0 * p.c, "c1*c2 = -3c");
    } else {
        const auto& kp = kink();
        if (kp.b == 0.0 || kp.big_c1 == 0.0 || kp.big_c2 == 0.0)
            throw InvalidParameterError("exact: kink requires b, C1, C2 != 0");
        check_rel(kp.c, -0.5 * kp.b, "c = -b/2");
        check_rel(kp.big_c1 * kp.big_c2, -kp.b, "C1*C2 = -b");
    }
}

ExactSolution make_peakon(double c1, double c) {
    if (c1 == 0.0 || !std::isfinite(c1))
        throw InvalidParameterError("exact: peakon c1 must be nonzero and finite");
    if (c == 0.0 || !std::isfinite(c))
        throw InvalidParameterError("exact: peakon c must be nonzero and finite");
    ExactSolution s;
    s.kind_ = WaveKind::peakon;
    s.params_ = PeakonParams{c1, -3.0 * c / c1, c};
    s.validate();
    return s;
}

ExactSolution make_kink(double b, double big_c1) {
    if (b == 0.0 || !std::isfinite(b))
        throw InvalidParameterError("exact: kink b must be nonzero and finite");
    if (big_c1 == 0.0 || !std::isfinite(big_c1))
        throw InvalidParameterError("exact: kink C1 must be nonzero and finite");
    ExactSolution s;
    s.kind_ = WaveKind::kink;
    s.params_ = KinkParams{big_c1, -b / big_c1, b, -0.5 * b};
    s.validate();
    return s;
}

ExactSolution peakon_with_params(const PeakonParams& p) {
    ExactSolution s;
    s.kind_ = WaveKind::peakon;
    s.params_ = p;
    return s;
}

ExactSolution kink_with_params(const KinkParams& p) {
    ExactSolution s;
    s.kind_ = WaveKind::kink;
    s.params_ = p;
    return s;
}

std::pair<Field, Field> sample(const ExactSolution& sol, const Grid1D& grid, double t) {
    const double ct = sol.speed() * t;
    if (!(std::abs(ct) < 0.25 * grid.length()))
        throw DomainError("exact: wave center |c t| = " + std::to_string(std::abs(ct)) +
                          " too close to the periodic seam (limit length/4)");
    Field u(grid), v(grid);
    for (int i = 0; i < grid.n(); ++i) {
        const double x = grid.node(i);
        u[i] = sol.u(x, t);
        v[i] = sol.v(x, t);
    }
    return {std::move(u), std::move(v)};
}

std::pair<Field, Field> induced_momenta(const ExactSolution& sol, const Grid1D& grid, double t) {
    auto [u, v] = sample(sol, grid, t);
    return {helmholtz(u), helmholtz(v)};
}

} // namespace twocomp
