#ifndef TWOCOMP_BESOV_HPP
#define TWOCOMP_BESOV_HPP

#include <vector>

#include "twocomp/grid.hpp"

namespace twocomp {

/// Smooth low-frequency cutoff pinned to one explicit bump quotient so all
/// norms are reproducible bit for bit:
///   chi(k) = g((4/3 - |k|)/(1/3)) / (g((4/3 - |k|)/(1/3)) + g((|k| - 1)/(1/3))),
///   g(t) = exp(-1/t) for t > 0, else 0.
/// chi = 1 on |k| <= 1 and 0 on |k| >= 4/3.
double chi_cutoff(double k);

/// phi(k) = chi(k/2) - chi(k), supported in the ring 3/4 <= |k| <= 8/3.
double phi_ring(double k);

/// Sampled dyadic partition for one grid: chi(k_j) and phi(2^{-q} k_j) for
/// q = 0..q_max, with q_max the largest ring fitting under the Nyquist mode.
struct DyadicPartition {
    Grid1D grid;
    int q_max = 0;
    std::vector<double> chi;                    // per mode j = 0..n/2
    std::vector<std::vector<double>> phi_per_q; // [q][j]
    double covered_band() const;                // (3/4) 2^q_max
};

/// Builds and verifies the partition (sum-to-one within 1e-12 on the covered
/// band). Throws ConfigError when the grid is too small for q_max >= 1.
DyadicPartition build_partition(const Grid1D& grid);

/// Frequency-localized piece Delta_q f: chi(D) for q = -1, phi(2^{-q} D) for
/// q in [0, q_max], the zero field for q <= -2. q > q_max is out of band.
Field dyadic_block(const Field& f, int q, const DyadicPartition& part);

/// S_q f = chi(2^{-q} D) f for 0 <= q <= q_max + 1.
Field low_freq_cutoff(const Field& f, int q, const DyadicPartition& part);

enum class Lp { two, inf };
enum class Lr { one, two, inf };

struct BesovIndex {
    double s = 0.0;
    Lp p = Lp::two;
    Lr r = Lr::two;
};

/// || (2^{qs} ||Delta_q f||_{L^p})_{q = -1..q_max} ||_{l^r}.
double besov_norm(const Field& f, const BesovIndex& idx, const DyadicPartition& part);

/// Per-block weighted norms 2^{qs} ||Delta_q f||_{L^p}, indexed q = -1..q_max.
std::vector<double> besov_block_table(const Field& f, double s, Lp p,
                                      const DyadicPartition& part);

/// Direct Fourier-multiplier H^s norm: (sum (1+k^2)^s |f_hat|^2 weights)^{1/2}.
double sobolev_norm(const Field& f, double s);

/// Fraction of the L2 energy carried by modes above the covered band, where
/// the truncated partition no longer sums to one. Callers should warn when
/// this is not negligible.
double above_band_energy_fraction(const Field& f, const DyadicPartition& part);

} // namespace twocomp

#endif
