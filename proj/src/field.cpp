#include "gsqg/field.hpp"

#include "gsqg/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsqg {

Field::Field(const TorusGrid& grid)
    : grid_(grid),
      phys_(static_cast<std::size_t>(grid.size()), 0.0),
      spec_(static_cast<std::size_t>(grid.size()), {0.0, 0.0}),
      sync_(Sync::both) {}

Field Field::from_physical(const TorusGrid& grid, std::vector<double> samples) {
    if (samples.size() != static_cast<std::size_t>(grid.size()))
        throw std::invalid_argument("Field::from_physical: sample count mismatch");
    Field f(grid);
    f.phys_ = std::move(samples);
    f.sync_ = Sync::physical_only;
    return f;
}

Field Field::from_spectral(const TorusGrid& grid,
                           std::vector<std::complex<double>> coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(grid.size()))
        throw std::invalid_argument("Field::from_spectral: coefficient count mismatch");
    Field f(grid);
    f.spec_ = std::move(coeffs);
    f.sync_ = Sync::spectral_only;
    return f;
}

void Field::ensure_spectral() const {
    if (sync_ == Sync::spectral_only || sync_ == Sync::both) return;
    const int n = grid_.n;
    std::vector<std::complex<double>> tmp(phys_.size());
    for (std::size_t i = 0; i < phys_.size(); ++i) tmp[i] = phys_[i];
    spec_.resize(phys_.size());
    detail::fft_forward(n, tmp.data(), spec_.data());
    sync_ = Sync::both;
}

void Field::ensure_physical() const {
    if (sync_ == Sync::physical_only || sync_ == Sync::both) return;
    const int n = grid_.n;
    std::vector<std::complex<double>> tmp(spec_.size());
    detail::fft_backward(n, spec_.data(), tmp.data());
    phys_.resize(spec_.size());
    for (std::size_t i = 0; i < spec_.size(); ++i) phys_[i] = tmp[i].real();
    sync_ = Sync::both;
}

const std::vector<double>& Field::physical() const {
    ensure_physical();
    return phys_;
}

const std::vector<std::complex<double>>& Field::spectral() const {
    ensure_spectral();
    return spec_;
}

std::vector<double>& Field::physical_mut() {
    ensure_physical();
    sync_ = Sync::physical_only;
    return phys_;
}

std::vector<std::complex<double>>& Field::spectral_mut() {
    ensure_spectral();
    sync_ = Sync::spectral_only;
    return spec_;
}

double Field::mean() const {
    ensure_spectral();
    return spec_[0].real();
}

double Field::max_abs() const {
    ensure_physical();
    double m = 0.0;
    for (double v : phys_) m = std::max(m, std::abs(v));
    return m;
}

bool Field::finite() const {
    if (sync_ == Sync::physical_only) {
        for (double v : phys_)
            if (!std::isfinite(v)) return false;
        return true;
    }
    ensure_spectral();
    for (const auto& c : spec_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

void Field::dealias() {
    ensure_spectral();
    const int n = grid_.n;
    const int keep = grid_.max_dealias_index();
    for (int jy = 0; jy < n; ++jy) {
        const int my = grid_.signed_mode(jy);
        for (int jx = 0; jx < n; ++jx) {
            const int mx = grid_.signed_mode(jx);
            if (std::abs(mx) > keep || std::abs(my) > keep)
                spec_[static_cast<std::size_t>(jy) * n + jx] = {0.0, 0.0};
        }
    }
    sync_ = Sync::spectral_only;
}

} // namespace gsqg
