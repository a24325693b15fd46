#include "twocomp/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace twocomp {

namespace {

// FFTW plans per grid size. The planner is not thread-safe, so creation is
// serialized; new-array execution on distinct buffers is safe concurrently.
// Plans are made with FFTW_UNALIGNED so std::vector storage is acceptable.
class PlanRegistry {
  public:
    struct Plans {
        fftw_plan r2c = nullptr;
        fftw_plan c2r = nullptr;
    };

    static Plans get(int n) {
        static PlanRegistry reg;
        std::lock_guard<std::mutex> lock(reg.mutex_);
        auto it = reg.plans_.find(n);
        if (it != reg.plans_.end()) return it->second;

        std::vector<double> re(static_cast<std::size_t>(n));
        std::vector<std::complex<double>> cx(static_cast<std::size_t>(n / 2 + 1));
        Plans p;
        p.r2c = fftw_plan_dft_r2c_1d(n, re.data(), reinterpret_cast<fftw_complex*>(cx.data()),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
        p.c2r = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(cx.data()), re.data(),
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
        reg.plans_.emplace(n, p);
        return p;
    }

  private:
    PlanRegistry() = default;
    std::mutex mutex_;
    std::map<int, Plans> plans_;
};

std::vector<std::complex<double>> forward_raw(const Field& f) {
    const int n = f.grid.n();
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n / 2 + 1));
    std::vector<double> in(f.values);
    fftw_execute_dft_r2c(PlanRegistry::get(n).r2c, in.data(),
                         reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

Field inverse_raw(const Grid1D& g, std::vector<std::complex<double>> coeff) {
    // c2r overwrites its input, hence the by-value copy.
    const int n = g.n();
    Field out(g);
    fftw_execute_dft_c2r(PlanRegistry::get(n).c2r,
                         reinterpret_cast<fftw_complex*>(coeff.data()), out.values.data());
    const double inv_n = 1.0 / n;
    for (double& v : out.values) v *= inv_n;
    return out;
}

void zero_above(std::vector<std::complex<double>>& coeff, int jmax) {
    for (std::size_t j = static_cast<std::size_t>(jmax) + 1; j < coeff.size(); ++j)
        coeff[j] = 0.0;
}

} // namespace

Grid1D make_grid(int n_points, double length) { return Grid1D(n_points, length); }

Spectrum forward(const Field& f) { return Spectrum{f.grid, forward_raw(f)}; }

Field inverse(const Spectrum& s) { return inverse_raw(s.grid, s.coeff); }

Field derivative(const Field& f) {
    auto c = forward_raw(f);
    const auto& k = f.grid.wavenumbers();
    for (int j = 0; j < f.grid.n() / 2; ++j) {
        const std::complex<double> cj = c[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(j)] =
            std::complex<double>(-k[static_cast<std::size_t>(j)] * cj.imag(),
                                 k[static_cast<std::size_t>(j)] * cj.real());
    }
    c[static_cast<std::size_t>(f.grid.n() / 2)] = 0.0; // Nyquist derivative zeroed
    return inverse_raw(f.grid, std::move(c));
}

Field helmholtz(const Field& f) {
    auto c = forward_raw(f);
    const auto& k = f.grid.wavenumbers();
    for (int j = 0; j <= f.grid.n() / 2; ++j)
        c[static_cast<std::size_t>(j)] *= 1.0 + k[static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)];
    return inverse_raw(f.grid, std::move(c));
}

Field helmholtz_inverse(const Field& f) {
    auto c = forward_raw(f);
    const auto& k = f.grid.wavenumbers();
    for (int j = 0; j <= f.grid.n() / 2; ++j)
        c[static_cast<std::size_t>(j)] /= 1.0 + k[static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)];
    return inverse_raw(f.grid, std::move(c));
}

Field truncate_to_band(const Field& f, int jmax) {
    auto c = forward_raw(f);
    zero_above(c, jmax);
    return inverse_raw(f.grid, std::move(c));
}

void truncate_to_band_inplace(Spectrum& s, int jmax) { zero_above(s.coeff, jmax); }

Field dealiased_product(const Field& f, const Field& g) {
    require_same_grid(f, g);
    const int jmax = dealias_band(f.grid);
    auto cf = forward_raw(f);
    auto cg = forward_raw(g);
    zero_above(cf, jmax);
    zero_above(cg, jmax);
    Field ft = inverse_raw(f.grid, std::move(cf));
    Field gt = inverse_raw(g.grid, std::move(cg));
    for (int i = 0; i < f.size(); ++i) ft[i] *= gt[i];
    auto cp = forward_raw(ft);
    zero_above(cp, jmax);
    return inverse_raw(f.grid, std::move(cp));
}

double l2_norm(const Field& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(f.grid.spacing() * s);
}

double spectral_energy(const Spectrum& s) {
    const int n = s.grid.n();
    double e = std::norm(s.coeff[0]);
    for (int j = 1; j < n / 2; ++j) e += 2.0 * std::norm(s.coeff[static_cast<std::size_t>(j)]);
    e += std::norm(s.coeff[static_cast<std::size_t>(n / 2)]);
    return e * s.grid.spacing() / n;
}

Interpolant::Interpolant(const Field& f) : grid_(f.grid), coeff_(forward_raw(f)) {}

double Interpolant::operator()(double x) const {
    const int n = grid_.n();
    const double theta = 2.0 * M_PI * (x + 0.5 * grid_.length()) / grid_.length();
    const std::complex<double> w = std::polar(1.0, theta);
    std::complex<double> p = w;
    double acc = coeff_[0].real();
    for (int j = 1; j < n / 2; ++j) {
        // re-anchor the phase recurrence periodically to cap rounding drift
        if ((j & 63) == 0) p = std::polar(1.0, j * theta);
        acc += 2.0 * (coeff_[static_cast<std::size_t>(j)].real() * p.real() -
                      coeff_[static_cast<std::size_t>(j)].imag() * p.imag());
        p *= w;
    }
    acc += coeff_[static_cast<std::size_t>(n / 2)].real() * std::cos(0.5 * n * theta);
    return acc / n;
}

} // namespace twocomp
