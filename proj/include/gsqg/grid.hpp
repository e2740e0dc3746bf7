#pragma once

#include <cmath>
#include <stdexcept>

namespace gsqg {

/// Uniform periodic grid on [0, L)^2 with N collocation points per axis.
/// Spectral modes carry integer indices m with each component in [-N/2, N/2);
/// the physical wavenumber is (2*pi/L) * m.
struct TorusGrid {
    int n = 0;
    double length = 2.0 * M_PI;
    double dealias_fraction = 2.0 / 3.0;

    TorusGrid() = default;
    TorusGrid(int n_, double length_, double dealias = 2.0 / 3.0)
        : n(n_), length(length_), dealias_fraction(dealias) {
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("TorusGrid: resolution must be even and >= 8");
        if (!(length > 0.0))
            throw std::invalid_argument("TorusGrid: side length must be positive");
        if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
            throw std::invalid_argument("TorusGrid: dealias fraction must lie in (0, 1]");
    }

    int size() const { return n * n; }
    double spacing() const { return length / n; }
    double cell_area() const { return spacing() * spacing(); }
    double wavenumber_unit() const { return 2.0 * M_PI / length; }

    /// FFT storage index -> signed integer mode in [-N/2, N/2).
    int signed_mode(int j) const { return j < n / 2 ? j : j - n; }

    /// Largest retained |mode index| per axis under the dealiasing rule:
    /// modes with |m_i| > dealias_fraction * N/2 are zeroed.
    int max_dealias_index() const {
        return static_cast<int>(std::floor(dealias_fraction * (n / 2) + 1e-9));
    }

    bool operator==(const TorusGrid& o) const {
        return n == o.n && length == o.length && dealias_fraction == o.dealias_fraction;
    }
    bool operator!=(const TorusGrid& o) const { return !(*this == o); }
};

} // namespace gsqg
