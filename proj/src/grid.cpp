#include "twocomp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace twocomp {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

Grid1D::Grid1D(int n_points, double length) {
    if (!is_power_of_two(n_points) || n_points < 8)
        throw ConfigError("grid: n_points must be a power of two >= 8, got " +
                          std::to_string(n_points));
    if (!(length > 0.0) || !std::isfinite(length))
        throw ConfigError("grid: length must be positive and finite");
    n_ = n_points;
    length_ = length;
    spacing_ = length / n_points;

    auto table = std::make_shared<std::vector<double>>(static_cast<std::size_t>(n_points));
    const double k0 = 2.0 * M_PI / length;
    for (int j = 0; j < n_points; ++j) {
        const int js = (j <= n_points / 2) ? j : j - n_points;
        (*table)[static_cast<std::size_t>(j)] = k0 * js;
    }
    wavenumbers_ = std::move(table);
}

double Grid1D::wrap(double x) const {
    double y = std::fmod(x + 0.5 * length_, length_);
    if (y < 0.0) y += length_;
    return y - 0.5 * length_;
}

bool Field::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double Field::min() const {
    double m = values.empty() ? 0.0 : values[0];
    for (double v : values) m = std::min(m, v);
    return m;
}

double Field::max() const {
    double m = values.empty() ? 0.0 : values[0];
    for (double v : values) m = std::max(m, v);
    return m;
}

void require_same_grid(const Field& a, const Field& b) {
    if (!a.grid.same_as(b.grid))
        throw UsageError("fields live on different grids");
}

} // namespace twocomp
