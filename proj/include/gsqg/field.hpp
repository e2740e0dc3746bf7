#pragma once

#include "gsqg/grid.hpp"

#include <complex>
#include <vector>

namespace gsqg {

/// Real scalar field on a TorusGrid, kept in a lazily synchronized
/// physical/spectral dual representation. Spectral coefficients satisfy
/// Hermitian symmetry f_hat(-m) = conj(f_hat(m)) whenever the physical
/// samples are real, which every public constructor enforces.
///
/// Thread model: fields are values; move them between threads rather than
/// sharing, since lazy synchronization mutates internal caches.
class Field {
  public:
    explicit Field(const TorusGrid& grid);

    static Field from_physical(const TorusGrid& grid, std::vector<double> samples);
    static Field from_spectral(const TorusGrid& grid,
                               std::vector<std::complex<double>> coeffs);

    const TorusGrid& grid() const { return grid_; }

    const std::vector<double>& physical() const;
    const std::vector<std::complex<double>>& spectral() const;

    /// Mutable access; marks the other representation stale.
    std::vector<double>& physical_mut();
    std::vector<std::complex<double>>& spectral_mut();

    double mean() const;
    double max_abs() const;
    bool finite() const;

    /// Zeroes every mode outside the grid's dealias band (in place).
    void dealias();

  private:
    enum class Sync { physical_only, spectral_only, both };

    TorusGrid grid_;
    mutable std::vector<double> phys_;
    mutable std::vector<std::complex<double>> spec_;
    mutable Sync sync_ = Sync::both;

    void ensure_physical() const;
    void ensure_spectral() const;
};

/// Two-component velocity-style field.
struct VectorField {
    Field x;
    Field y;
    bool divergence_free = false;

    VectorField(Field x_, Field y_, bool div_free = false)
        : x(std::move(x_)), y(std::move(y_)), divergence_free(div_free) {}

    const TorusGrid& grid() const { return x.grid(); }
};

} // namespace gsqg
