#ifndef TWOCOMP_GRID_HPP
#define TWOCOMP_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "twocomp/errors.hpp"

namespace twocomp {

/// Uniform periodic grid on [-L/2, L/2) with the standard signed wavenumber
/// table k_j = 2*pi*j_signed/L. Copies are cheap: the table is shared.
class Grid1D {
  public:
    Grid1D() = default;
    Grid1D(int n_points, double length);

    int n() const { return n_; }
    double length() const { return length_; }
    double spacing() const { return spacing_; }
    double node(int i) const { return -0.5 * length_ + spacing_ * i; }

    /// Signed wavenumber of DFT mode j, j in [0, n). Mode n/2 is the Nyquist mode.
    double wavenumber(int j) const { return (*wavenumbers_)[static_cast<std::size_t>(j)]; }
    const std::vector<double>& wavenumbers() const { return *wavenumbers_; }
    int nyquist_index() const { return n_ / 2; }

    /// Wrap an arbitrary coordinate into [-L/2, L/2).
    double wrap(double x) const;

    bool same_as(const Grid1D& other) const {
        return n_ == other.n_ && length_ == other.length_;
    }

  private:
    int n_ = 0;
    double length_ = 0.0;
    double spacing_ = 0.0;
    std::shared_ptr<const std::vector<double>> wavenumbers_;
};

/// Real-valued samples on a Grid1D, one value per node.
struct Field {
    Grid1D grid;
    std::vector<double> values;

    Field() = default;
    explicit Field(const Grid1D& g, double fill = 0.0)
        : grid(g), values(static_cast<std::size_t>(g.n()), fill) {}

    int size() const { return grid.n(); }
    double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }

    bool all_finite() const;
    double max_abs() const;
    double min() const;
    double max() const;
};

/// Throws UsageError unless both fields live on the same grid.
void require_same_grid(const Field& a, const Field& b);

} // namespace twocomp

#endif
