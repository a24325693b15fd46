#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "twocomp/spectral.hpp"

using namespace twocomp;

namespace {

Field sampled(const Grid1D& g, double (*fn)(double)) {
    Field f(g);
    for (int i = 0; i < g.n(); ++i) f[i] = fn(g.node(i));
    return f;
}

Field random_band_limited(const Grid1D& g, int jmax, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;
    Spectrum s{g, std::vector<std::complex<double>>(static_cast<std::size_t>(g.n() / 2 + 1))};
    for (int j = 1; j <= jmax; ++j)
        s.coeff[static_cast<std::size_t>(j)] = {gauss(rng), gauss(rng)};
    return inverse(s);
}

double max_abs_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("make_grid basics") {
    Grid1D g = make_grid(8, 8.0);
    CHECK(g.spacing() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.node(0) == doctest::Approx(-4.0));
    CHECK(g.node(7) == doctest::Approx(3.0));

    Grid1D g2 = make_grid(8, 16.0 * M_PI);
    CHECK(g2.wavenumber(1) == doctest::Approx(0.125).epsilon(1e-15));

    Grid1D g3 = make_grid(4096, 80.0);
    CHECK(g3.spacing() == doctest::Approx(80.0 / 4096).epsilon(1e-15));
    CHECK(std::abs(g3.spacing() * g3.n() - g3.length()) <= 1e-13);

    // antisymmetric wavenumber table (every k has -k except Nyquist)
    for (int j = 1; j < g3.n() / 2; ++j)
        CHECK(g3.wavenumber(j) == -g3.wavenumber(g3.n() - j));

    CHECK_THROWS_AS(make_grid(1000, 10.0), ConfigError);
    CHECK_THROWS_AS(make_grid(4, 10.0), ConfigError);
    CHECK_THROWS_AS(make_grid(256, 0.0), ConfigError);
    CHECK_THROWS_AS(make_grid(256, -3.0), ConfigError);
}

TEST_CASE("derivative of constants and eigenfunctions") {
    Grid1D g = make_grid(256, 20.0);
    Field c(g, 7.0);
    CHECK(derivative(c).max_abs() <= 1e-13);

    Field s(g);
    const double k = 2.0 * M_PI / g.length();
    for (int i = 0; i < g.n(); ++i) s[i] = std::sin(k * g.node(i));
    Field ds = derivative(s);
    for (int i = 0; i < g.n(); ++i)
        CHECK(ds[i] == doctest::Approx(k * std::cos(k * g.node(i))).epsilon(1e-12));
}

TEST_CASE("derivative of a gaussian matches the analytic derivative") {
    Grid1D g = make_grid(4096, 80.0);
    Field f = sampled(g, +[](double x) { return std::exp(-x * x); });
    Field df = derivative(f);
    double err = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        const double x = g.node(i);
        err = std::max(err, std::abs(df[i] - (-2.0 * x * std::exp(-x * x))));
    }
    CHECK(err < 1e-10);
}

TEST_CASE("helmholtz eigenfunctions and inverse pair") {
    Grid1D g = make_grid(512, 40.0);
    Field one(g, 1.0);
    CHECK(max_abs_diff(helmholtz(one), one) <= 1e-13);

    const double k = 2.0 * M_PI * 5 / g.length();
    Field f(g);
    for (int i = 0; i < g.n(); ++i) f[i] = std::cos(k * g.node(i));
    Field hf = helmholtz(f);
    Field hif = helmholtz_inverse(f);
    for (int i = 0; i < g.n(); ++i) {
        CHECK(hf[i] == doctest::Approx((1.0 + k * k) * f[i]).epsilon(1e-12));
        CHECK(hif[i] == doctest::Approx(f[i] / (1.0 + k * k)).epsilon(1e-12));
    }

    Field r = random_band_limited(g, g.n() / 3, 1234);
    Field back = helmholtz(helmholtz_inverse(r));
    CHECK(max_abs_diff(back, r) <= 1e-12 * r.max_abs());
}

TEST_CASE("helmholtz_inverse of a unit impulse approximates exp(-|x|)/2") {
    Grid1D g = make_grid(4096, 80.0);
    Field imp(g);
    imp[g.n() / 2] = 1.0 / g.spacing(); // discrete unit mass at x = 0
    Field u = helmholtz_inverse(imp);
    double err = 0.0;
    for (int i = 0; i < g.n(); ++i) {
        const double x = g.node(i);
        if (std::abs(x) > 0.45 * g.length()) continue; // skip the domain edge
        err = std::max(err, std::abs(u[i] - 0.5 * std::exp(-std::abs(x))));
    }
    CHECK(err < 1e-8);

    Field z(g);
    CHECK(helmholtz_inverse(z).max_abs() == 0.0);
}

TEST_CASE("dealiased product rules") {
    Grid1D g = make_grid(256, 2.0 * M_PI * 8);
    Field z(g);
    Field any = random_band_limited(g, 80, 99);
    CHECK(dealiased_product(z, any).max_abs() == 0.0);

    // 2k inside the retained band: product is exact
    const double k = g.wavenumber(20);
    Field f(g);
    for (int i = 0; i < g.n(); ++i) f[i] = std::cos(k * g.node(i));
    Field p = dealiased_product(f, f);
    for (int i = 0; i < g.n(); ++i)
        CHECK(p[i] == doctest::Approx(0.5 * (1.0 + std::cos(2.0 * k * g.node(i)))).epsilon(1e-12));

    // highest retained mode: constant half kept, doubled frequency removed
    const int jb = dealias_band(g);
    Field hi(g);
    for (int i = 0; i < g.n(); ++i) hi[i] = std::cos(g.wavenumber(jb) * g.node(i));
    Field p2 = dealiased_product(hi, hi);
    Field half(g, 0.5);
    CHECK(max_abs_diff(p2, half) <= 1e-12);

    Grid1D other = make_grid(256, 10.0);
    Field o(other);
    CHECK_THROWS_AS(dealiased_product(f, o), UsageError);
}

TEST_CASE("multipliers commute and Parseval holds") {
    Grid1D g = make_grid(1024, 50.0);
    Field r = random_band_limited(g, 340, 7);

    Field a = derivative(helmholtz_inverse(r));
    Field b = helmholtz_inverse(derivative(r));
    CHECK(max_abs_diff(a, b) <= 1e-12 * r.max_abs());

    const double phys = l2_norm(r);
    const double spec = std::sqrt(spectral_energy(forward(r)));
    CHECK(std::abs(phys - spec) <= 1e-12 * phys);
}

TEST_CASE("trigonometric interpolation is nodal-exact and spectrally accurate") {
    Grid1D g = make_grid(256, 30.0);
    Field r = random_band_limited(g, 60, 42);
    Interpolant ip(r);
    for (int i = 0; i < g.n(); i += 7)
        CHECK(ip(g.node(i)) == doctest::Approx(r[i]).epsilon(1e-12));

    // single mode evaluated off-grid
    const double k = g.wavenumber(9);
    Field f(g);
    for (int i = 0; i < g.n(); ++i) f[i] = std::cos(k * g.node(i));
    Interpolant ipf(f);
    for (double x : {-11.83, -0.113, 2.71828, 14.9}) {
        CHECK(ipf(x) == doctest::Approx(std::cos(k * x)).epsilon(1e-11));
        // periodicity: unwrapped coordinates evaluate identically
        CHECK(ipf(x + g.length()) == doctest::Approx(ipf(x)).epsilon(1e-11));
    }
}
