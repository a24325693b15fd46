#ifndef TWOCOMP_EXACT_HPP
#define TWOCOMP_EXACT_HPP

#include <utility>
#include <variant>

#include "twocomp/grid.hpp"

namespace twocomp {

/// Peaked traveling pair u = c1 e^{-|x-ct|}, v = c2 e^{-|x-ct|} with the
/// family constraint c1*c2 = -3c (b = 0 only).
struct PeakonParams {
    double c1;
    double c2;
    double c;
};

/// Weak kink pair u = C1 sgn(x-ct)(e^{-|x-ct|}-1), v likewise with C2,
/// constrained by c = -b/2 and C1*C2 = -b (b != 0).
struct KinkParams {
    double big_c1;
    double big_c2;
    double b;
    double c;
};

enum class WaveKind { peakon, kink };

class ExactSolution {
  public:
    WaveKind kind() const { return kind_; }
    const PeakonParams& peakon() const { return std::get<PeakonParams>(params_); }
    const KinkParams& kink() const { return std::get<KinkParams>(params_); }

    double speed() const;
    double u(double x, double t) const;
    double v(double x, double t) const;

    /// Re-checks the family constraints from the stored parameters
    /// (relative tolerance 1e-12); throws InvalidParameterError otherwise.
    void validate() const;

    friend ExactSolution make_peakon(double c1, double c);
    friend ExactSolution make_kink(double b, double big_c1);
    friend ExactSolution peakon_with_params(const PeakonParams& p);
    friend ExactSolution kink_with_params(const KinkParams& p);

  private:
    WaveKind kind_{};
    std::variant<PeakonParams, KinkParams> params_;
};

ExactSolution make_peakon(double c1, double c);
ExactSolution make_kink(double b, double big_c1);

/// Unvalidated constructors for perturbation studies (weakcheck scans).
ExactSolution peakon_with_params(const PeakonParams& p);
ExactSolution kink_with_params(const KinkParams& p);

/// Pointwise evaluation at the grid nodes at time t. Requires the wave to
/// stay away from the periodic seam: |c t| < length/4.
std::pair<Field, Field> sample(const ExactSolution& sol, const Grid1D& grid, double t);

/// m = helmholtz(u), n = helmholtz(v): the grid-consistent momenta.
std::pair<Field, Field> induced_momenta(const ExactSolution& sol, const Grid1D& grid, double t);

} // namespace twocomp

#endif
