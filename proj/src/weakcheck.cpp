#include "twocomp/weakcheck.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "twocomp/runtime.hpp"

namespace twocomp {

namespace {

double g2(double z) {
    const double z2 = z * z;
    return z2 < 1.0 ? std::exp(-1.0 / (1.0 - z2)) : 0.0;
}

double g2_prime(double z) {
    const double z2 = z * z;
    if (z2 >= 1.0) return 0.0;
    const double d = 1.0 - z2;
    return g2(z) * (-2.0 * z / (d * d));
}

// Adaptive Simpson with Richardson control; integrands here are C-infinity
// away from at most one marked kink, which callers split at.
double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

double integrate_split(const std::function<double(double)>& f, double a, double b,
                       double split, double tol) {
    if (split > a && split < b)
        return integrate(f, a, split, 0.5 * tol) + integrate(f, split, b, 0.5 * tol);
    return integrate(f, a, b, tol);
}

constexpr double kInnerTol = 1e-13;
constexpr double kOuterTol = 1e-12;

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// ---- peakon ----------------------------------------------------------------
//
// Measure decomposition (hand-derived): m = 2 c1 delta(x - ct), n = 2 c2 delta,
// with no absolutely continuous part. Crest cofactor values:
//   uv          -> c1 c2                      (continuous),
//   ux vx       -> c1 c2 / 3                  (both factors jump with the atom;
//                                              chain-rule average
//                                              (a1 a2 + b1 b2)/2 - (b1-a1)(b2-a2)/6),
//   u vx - ux v -> 0                          (identically zero off-crest and the
//                                              half-values of ux, vx vanish).
// The half-value of ux*vx (average of one-sided limits, = c1 c2) is NOT used:
// that convention balances the family for no wave speed at all, while the
// chain-rule value is the limit under smooth regularization.

struct PeakonPieces {
    double delta_m;          // atom mass of m
    double delta_n;
    double transport_crest;  // 1/2 (uv - ux vx) at the crest
    double skew_crest;       // 1/2 (u vx - ux v) at the crest
};

PeakonPieces peakon_pieces(const PeakonParams& p) {
    const double prod = p.c1 * p.c2;
    return {2.0 * p.c1, 2.0 * p.c2, 0.5 * (prod - prod / 3.0), 0.0};
}

WeakResidual peakon_residual(const PeakonParams& p, const TestFunction& tf) {
    const PeakonPieces pc = peakon_pieces(p);
    const double lo = tf.t_center - tf.t_width, hi = tf.t_center + tf.t_width;

    auto along = [&](const std::function<double(double, double)>& f) {
        return integrate([&](double t) { return f(t, p.c * t); }, lo, hi, kOuterTol);
    };
    const double term_t = along([&](double t, double x) { return tf.dt(t, x); });
    const double term_x = along([&](double t, double x) { return -pc.transport_crest * tf.dx(t, x); });
    const double term_s_m = along([&](double t, double x) { return -pc.skew_crest * tf(t, x); });

    WeakResidual r;
    r.r_m = std::abs(pc.delta_m * (term_t + term_x + term_s_m));
    r.r_n = std::abs(pc.delta_n * (term_t + term_x - term_s_m));
    const double abs_t = along([&](double t, double x) { return std::abs(tf.dt(t, x)); });
    const double abs_x =
        along([&](double t, double x) { return std::abs(pc.transport_crest * tf.dx(t, x)); });
    r.scale_m = std::abs(pc.delta_m) * std::max(abs_t, abs_x);
    r.scale_n = std::abs(pc.delta_n) * std::max(abs_t, abs_x);
    return r;
}

// ---- kink ------------------------------------------------------------------
//
// Measure decomposition (hand-derived): u = C1 s(xi)(E-1) is C^1 with
// Lipschitz u_x = -C1 E, so u_xx = C1 s E is bounded (a jump, no atom) and
//   m = u - u_xx = -C1 sgn(xi),   n = -C2 sgn(xi),   xi = x - ct.
// Every pairing term is absolutely continuous; quadrature splits at x = ct.

struct KinkIntegrands {
    const KinkParams* p;
    const TestFunction* tf;

    double m_at(double xi) const { return -p->big_c1 * sgn(xi); }
    double n_at(double xi) const { return -p->big_c2 * sgn(xi); }
    double transport(double xi) const {
        return 0.5 * p->big_c1 * p->big_c2 * (1.0 - 2.0 * std::exp(-std::abs(xi)));
    }
    double ux_at(double xi) const { return -p->big_c1 * std::exp(-std::abs(xi)); }
    double vx_at(double xi) const { return -p->big_c2 * std::exp(-std::abs(xi)); }
};

WeakResidual kink_residual(const KinkParams& p, const TestFunction& tf, double b) {
    const KinkIntegrands ki{&p, &tf};
    const double tlo = tf.t_center - tf.t_width, thi = tf.t_center + tf.t_width;
    const double xlo = tf.x_center - tf.x_width, xhi = tf.x_center + tf.x_width;

    // which: 0 signed m-form, 1..3 absolute individual m-terms,
    //        4 signed n-form, 5..7 absolute individual n-terms
    auto xint = [&](double t, int which) {
        const double ct = p.c * t;
        auto f = [&](double x) -> double {
            const double xi = x - ct;
            switch (which) {
                case 0:
                    return ki.m_at(xi) * tf.dt(t, x) - ki.transport(xi) * ki.m_at(xi) * tf.dx(t, x) +
                           b * ki.ux_at(xi) * tf(t, x);
                case 1: return std::abs(ki.m_at(xi) * tf.dt(t, x));
                case 2: return std::abs(ki.transport(xi) * ki.m_at(xi) * tf.dx(t, x));
                case 3: return std::abs(b * ki.ux_at(xi) * tf(t, x));
                case 4:
                    return ki.n_at(xi) * tf.dt(t, x) - ki.transport(xi) * ki.n_at(xi) * tf.dx(t, x) +
                           b * ki.vx_at(xi) * tf(t, x);
                case 5: return std::abs(ki.n_at(xi) * tf.dt(t, x));
                case 6: return std::abs(ki.transport(xi) * ki.n_at(xi) * tf.dx(t, x));
                default: return std::abs(b * ki.vx_at(xi) * tf(t, x));
            }
        };
        return integrate_split(f, xlo, xhi, ct, kInnerTol);
    };
    auto tint = [&](int which) {
        return integrate([&](double t) { return xint(t, which); }, tlo, thi, kOuterTol);
    };

    WeakResidual r;
    r.r_m = std::abs(tint(0));
    r.scale_m = std::max({tint(1), tint(2), tint(3)});
    r.r_n = std::abs(tint(4));
    r.scale_n = std::max({tint(5), tint(6), tint(7)});
    return r;
}

} // namespace

double TestFunction::operator()(double t, double x) const {
    return g2((t - t_center) / t_width) * g2((x - x_center) / x_width);
}

double TestFunction::dt(double t, double x) const {
    return g2_prime((t - t_center) / t_width) / t_width * g2((x - x_center) / x_width);
}

double TestFunction::dx(double t, double x) const {
    return g2((t - t_center) / t_width) * g2_prime((x - x_center) / x_width) / x_width;
}

void TestFunction::validate() const {
    if (!(t_width > 0.0) || !(x_width > 0.0))
        throw InvalidParameterError("weakcheck: test function widths must be positive");
}

WeakResidual distributional_residual(const ExactSolution& sol, const TestFunction& tf, double b) {
    tf.validate();
    if (sol.kind() == WaveKind::peakon) {
        if (b != 0.0)
            throw InvalidParameterError("weakcheck: the peakon family requires b = 0");
        return peakon_residual(sol.peakon(), tf);
    }
    if (b != sol.kink().b)
        throw InvalidParameterError("weakcheck: b does not match the kink's own b");
    return kink_residual(sol.kink(), tf, b);
}

double signed_residual_m(const ExactSolution& sol, const TestFunction& tf, double b) {
    tf.validate();
    if (sol.kind() == WaveKind::peakon) {
        if (b != 0.0)
            throw InvalidParameterError("weakcheck: the peakon family requires b = 0");
        const PeakonParams& p = sol.peakon();
        const PeakonPieces pc = peakon_pieces(p);
        const double lo = tf.t_center - tf.t_width, hi = tf.t_center + tf.t_width;
        const double val = integrate(
            [&](double t) {
                const double x = p.c * t;
                return tf.dt(t, x) - pc.transport_crest * tf.dx(t, x) - pc.skew_crest * tf(t, x);
            },
            lo, hi, kOuterTol);
        return pc.delta_m * val;
    }
    if (b != sol.kink().b)
        throw InvalidParameterError("weakcheck: b does not match the kink's own b");
    const KinkParams& p = sol.kink();
    const KinkIntegrands ki{&p, &tf};
    const double tlo = tf.t_center - tf.t_width, thi = tf.t_center + tf.t_width;
    const double xlo = tf.x_center - tf.x_width, xhi = tf.x_center + tf.x_width;
    return integrate(
        [&](double t) {
            const double ct = p.c * t;
            auto f = [&](double x) {
                const double xi = x - ct;
                return ki.m_at(xi) * tf.dt(t, x) - ki.transport(xi) * ki.m_at(xi) * tf.dx(t, x) +
                       b * ki.ux_at(xi) * tf(t, x);
            };
            return integrate_split(f, xlo, xhi, ct, kInnerTol);
        },
        tlo, thi, kOuterTol);
}

RecoveredValue recover_free_parameter(const std::function<ExactSolution(double)>& family,
                                      double b, const TestFunction& tf, double lo, double hi,
                                      int scan_points) {
    auto eval = [&](double p) { return signed_residual_m(family(p), tf, b); };
    RecoveredValue out;
    double prev_x = lo, prev_v = eval(lo);
    for (int i = 1; i <= scan_points; ++i) {
        const double x = lo + (hi - lo) * i / scan_points;
        const double v = eval(x);
        if (prev_v == 0.0) {
            out.found = true;
            out.value = prev_x;
            return out;
        }
        if (prev_v * v < 0.0) {
            double a = prev_x, c = x, fa = prev_v;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (a + c);
                const double fm = eval(mid);
                if (fm == 0.0) {
                    a = c = mid;
                    break;
                }
                if (fa * fm < 0.0) {
                    c = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            out.found = true;
            out.value = 0.5 * (a + c);
            return out;
        }
        prev_x = x;
        prev_v = v;
    }
    if (prev_v == 0.0) {
        out.found = true;
        out.value = prev_x;
    }
    return out;
}

RecoveredValue recover_peakon_speed(double c1, double c2, const TestFunction& tf) {
    auto family = [c1, c2](double c) { return peakon_with_params({c1, c2, c}); };
    const double bound = std::max(2.0, 2.0 * std::abs(c1 * c2));
    return recover_free_parameter(family, 0.0, tf, -bound, bound);
}

RecoveredValue recover_kink_speed(double b, double big_c1, const TestFunction& tf) {
    auto family = [b, big_c1](double c) {
        return kink_with_params({big_c1, -b / big_c1, b, c});
    };
    const double bound = std::max(2.0, 2.0 * std::abs(b));
    return recover_free_parameter(family, b, tf, -bound, bound);
}

RecoveredValue recover_kink_big_c2(double b, double big_c1, const TestFunction& tf) {
    auto family = [b, big_c1](double c2) {
        return kink_with_params({big_c1, c2, b, -0.5 * b});
    };
    const double target = -b / big_c1;
    const double span = std::max(2.0, 2.0 * std::abs(target));
    return recover_free_parameter(family, b, tf, target - span, target + span);
}

std::vector<WeakResidual> residual_table(const ExactSolution& sol,
                                         const std::vector<TestFunction>& tfs, double b) {
    std::vector<WeakResidual> out(tfs.size());
    parallel_for_indexed(static_cast<int>(tfs.size()), [&](int i) {
        out[static_cast<std::size_t>(i)] =
            distributional_residual(sol, tfs[static_cast<std::size_t>(i)], b);
    });
    return out;
}

std::vector<TestFunction> standard_test_functions(const ExactSolution& sol, int count) {
    std::vector<TestFunction> tfs;
    tfs.reserve(static_cast<std::size_t>(count));
    const double c = sol.speed();
    for (int i = 0; i < count; ++i) {
        TestFunction tf;
        tf.t_center = 0.1 * (i % 3) - 0.1;
        tf.t_width = 0.8 + 0.1 * (i % 4);
        // keep the wave trajectory inside the spatial support
        tf.x_center = c * tf.t_center + 0.4 * std::sin(1.7 * i + 0.3);
        tf.x_width = (1.2 + 0.25 * (i % 5)) + std::abs(c) * tf.t_width;
        tfs.push_back(tf);
    }
    return tfs;
}

int worker_thread_cap() {
    static const int cap = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw <= 0) hw = 1;
        if (const char* env = std::getenv("TWOCOMP_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, hw));
        }
        return hw;
    }();
    return cap;
}

void parallel_for_indexed(int count, const std::function<void(int)>& fn) {
    const int threads = std::min(worker_thread_cap(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace twocomp
