#include "twocomp/besov.hpp"

#include <cmath>
#include <string>

#include "twocomp/spectral.hpp"

namespace twocomp {

namespace {

double bump_g(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

Field apply_half_spectrum_multiplier(const Field& f, const std::vector<double>& mul) {
    Spectrum s = forward(f);
    for (std::size_t j = 0; j < s.coeff.size(); ++j) s.coeff[j] *= mul[j];
    return inverse(s);
}

double lp_norm(const Field& f, Lp p) {
    return p == Lp::two ? l2_norm(f) : f.max_abs();
}

} // namespace

double chi_cutoff(double k) {
    const double a = std::abs(k);
    const double g1 = bump_g((4.0 / 3.0 - a) * 3.0);
    const double g2 = bump_g((a - 1.0) * 3.0);
    const double den = g1 + g2;
    return den > 0.0 ? g1 / den : 0.0;
}

double phi_ring(double k) { return chi_cutoff(0.5 * k) - chi_cutoff(k); }

double DyadicPartition::covered_band() const { return 0.75 * std::pow(2.0, q_max); }

DyadicPartition build_partition(const Grid1D& grid) {
    const double k_nyquist = M_PI / grid.spacing();
    const int q_max = static_cast<int>(std::floor(std::log2(k_nyquist * 3.0 / 8.0)));
    if (q_max < 1)
        throw ConfigError("besov: grid too small, no dyadic ring fits under Nyquist");

    DyadicPartition part;
    part.grid = grid;
    part.q_max = q_max;
    const int half = grid.n() / 2;
    part.chi.resize(static_cast<std::size_t>(half) + 1);
    for (int j = 0; j <= half; ++j)
        part.chi[static_cast<std::size_t>(j)] = chi_cutoff(grid.wavenumber(j));
    part.phi_per_q.resize(static_cast<std::size_t>(q_max) + 1);
    for (int q = 0; q <= q_max; ++q) {
        auto& row = part.phi_per_q[static_cast<std::size_t>(q)];
        row.resize(static_cast<std::size_t>(half) + 1);
        const double scale = std::pow(2.0, -q);
        for (int j = 0; j <= half; ++j)
            row[static_cast<std::size_t>(j)] = phi_ring(scale * grid.wavenumber(j));
    }

    // partition-of-unity check on the covered band
    const double band = part.covered_band();
    for (int j = 0; j <= half; ++j) {
        if (std::abs(grid.wavenumber(j)) > band) continue;
        double sum = part.chi[static_cast<std::size_t>(j)];
        for (int q = 0; q <= q_max; ++q) sum += part.phi_per_q[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)];
        if (std::abs(sum - 1.0) > 1e-12)
            throw NumericError("besov: partition of unity failed at mode " + std::to_string(j));
    }
    return part;
}

Field dyadic_block(const Field& f, int q, const DyadicPartition& part) {
    if (!f.grid.same_as(part.grid)) throw UsageError("besov: field/partition grid mismatch");
    if (q <= -2) return Field(f.grid);
    if (q > part.q_max)
        throw DomainError("besov: block q = " + std::to_string(q) + " above q_max = " +
                          std::to_string(part.q_max));
    if (q == -1) return apply_half_spectrum_multiplier(f, part.chi);
    return apply_half_spectrum_multiplier(f, part.phi_per_q[static_cast<std::size_t>(q)]);
}

Field low_freq_cutoff(const Field& f, int q, const DyadicPartition& part) {
    if (!f.grid.same_as(part.grid)) throw UsageError("besov: field/partition grid mismatch");
    if (q < 0 || q > part.q_max + 1)
        throw DomainError("besov: cutoff q = " + std::to_string(q) + " out of range");
    const int half = f.grid.n() / 2;
    std::vector<double> mul(static_cast<std::size_t>(half) + 1);
    const double scale = std::pow(2.0, -q);
    for (int j = 0; j <= half; ++j)
        mul[static_cast<std::size_t>(j)] = chi_cutoff(scale * f.grid.wavenumber(j));
    return apply_half_spectrum_multiplier(f, mul);
}

std::vector<double> besov_block_table(const Field& f, double s, Lp p,
                                      const DyadicPartition& part) {
    std::vector<double> table;
    table.reserve(static_cast<std::size_t>(part.q_max) + 2);
    for (int q = -1; q <= part.q_max; ++q)
        table.push_back(std::pow(2.0, q * s) * lp_norm(dyadic_block(f, q, part), p));
    return table;
}

double besov_norm(const Field& f, const BesovIndex& idx, const DyadicPartition& part) {
    const auto table = besov_block_table(f, idx.s, idx.p, part);
    switch (idx.r) {
        case Lr::one: {
            double acc = 0.0;
            for (double w : table) acc += w;
            return acc;
        }
        case Lr::two: {
            double acc = 0.0;
            for (double w : table) acc += w * w;
            return std::sqrt(acc);
        }
        case Lr::inf: {
            double acc = 0.0;
            for (double w : table) acc = std::max(acc, w);
            return acc;
        }
    }
    throw ConfigError("besov: unsupported l^r exponent");
}

double sobolev_norm(const Field& f, double s) {
    Spectrum sp = forward(f);
    const Grid1D& g = f.grid;
    const int half = g.n() / 2;
    double acc = std::pow(1.0 + g.wavenumber(0) * g.wavenumber(0), s) * std::norm(sp.coeff[0]);
    for (int j = 1; j < half; ++j) {
        const double k = g.wavenumber(j);
        acc += 2.0 * std::pow(1.0 + k * k, s) * std::norm(sp.coeff[static_cast<std::size_t>(j)]);
    }
    const double kny = g.wavenumber(half);
    acc += std::pow(1.0 + kny * kny, s) * std::norm(sp.coeff[static_cast<std::size_t>(half)]);
    return std::sqrt(acc * g.spacing() / g.n());
}

double above_band_energy_fraction(const Field& f, const DyadicPartition& part) {
    Spectrum sp = forward(f);
    const Grid1D& g = f.grid;
    const double band = part.covered_band();
    const int half = g.n() / 2;
    double total = 0.0, above = 0.0;
    for (int j = 0; j <= half; ++j) {
        const double w = (j == 0 || j == half) ? 1.0 : 2.0;
        const double e = w * std::norm(sp.coeff[static_cast<std::size_t>(j)]);
        total += e;
        if (std::abs(g.wavenumber(j)) > band) above += e;
    }
    return total > 0.0 ? above / total : 0.0;
}

} // namespace twocomp
