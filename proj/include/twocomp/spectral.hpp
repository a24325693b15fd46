#ifndef TWOCOMP_SPECTRAL_HPP
#define TWOCOMP_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "twocomp/grid.hpp"

namespace twocomp {

/// Half-complex spectrum of a real field: coefficients for modes j = 0..n/2
/// in DFT normalization (inverse divides by n).
struct Spectrum {
    Grid1D grid;
    std::vector<std::complex<double>> coeff;
};

Grid1D make_grid(int n_points, double length);

Spectrum forward(const Field& f);
Field inverse(const Spectrum& s);

/// Spectral d/dx: mode j multiplied by i*k_j, Nyquist coefficient zeroed.
Field derivative(const Field& f);

/// (1 - d^2/dx^2): multiplier 1 + k^2.
Field helmholtz(const Field& f);

/// (1 - d^2/dx^2)^{-1}: multiplier 1/(1 + k^2); convolution with the
/// periodized kernel exp(-|x|)/2.
Field helmholtz_inverse(const Field& f);

/// Pointwise product under the 2/3 rule: both factors truncated to modes
/// |j| <= n/3 before multiplying, the product truncated again.
Field dealiased_product(const Field& f, const Field& g);

/// Zero all modes with |j| > jmax.
Field truncate_to_band(const Field& f, int jmax);
void truncate_to_band_inplace(Spectrum& s, int jmax);

inline int dealias_band(const Grid1D& g) { return g.n() / 3; }

/// L2 norm with the spacing weight: sqrt(h * sum f_i^2).
double l2_norm(const Field& f);

/// Spectral-side energy sum matching l2_norm(f)^2 (Parseval).
double spectral_energy(const Spectrum& s);

/// Trigonometric interpolant of a real field; exact at the nodes and
/// periodic in x. Safe to evaluate at unwrapped coordinates.
class Interpolant {
  public:
    explicit Interpolant(const Field& f);
    double operator()(double x) const;

  private:
    Grid1D grid_;
    std::vector<std::complex<double>> coeff_;
};

} // namespace twocomp

#endif
