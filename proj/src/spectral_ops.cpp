#include "gsqg/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace gsqg {

namespace detail {

const std::vector<double>& power_table(const TorusGrid& grid, double s) {
    using Key = std::tuple<int, double, double>; // (N, L, s)
    static std::map<Key, std::vector<double>>* cache =
        new std::map<Key, std::vector<double>>();
    static std::mutex mutex;
    const Key key{grid.n, grid.length, s};
    std::lock_guard lock(mutex);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;

    const int n = grid.n;
    const double ku = grid.wavenumber_unit();
    std::vector<double> table(static_cast<std::size_t>(n) * n, 0.0);
    for (int jy = 0; jy < n; ++jy) {
        const double kky = ku * grid.signed_mode(jy);
        for (int jx = 0; jx < n; ++jx) {
            const double kkx = ku * grid.signed_mode(jx);
            const double k2 = kkx * kkx + kky * kky;
            table[static_cast<std::size_t>(jy) * n + jx] =
                (k2 == 0.0) ? 0.0 : std::pow(k2, 0.5 * s);
        }
    }
    return cache->emplace(key, std::move(table)).first->second;
}

} // namespace detail

Field fractional_laplacian(const Field& f, double s) {
    if (s < -3.0 || s > 3.0)
        throw std::invalid_argument("fractional_laplacian: exponent outside [-3, 3]");
    if (!f.finite())
        throw std::invalid_argument("fractional_laplacian: non-finite input field");
    const auto& in = f.spectral();
    const auto& table = detail::power_table(f.grid(), s);
    std::vector<std::complex<double>> out(in.size());
    if (s == 0.0) {
        out = in;
    } else {
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = table[i] * in[i];
        out[0] = {0.0, 0.0}; // mean-zero convention for homogeneous operators
    }
    return Field::from_spectral(f.grid(), std::move(out));
}

namespace {

VectorField biot_savart_impl(const Field& theta, double beta, double delta) {
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("biot_savart_velocity: beta must lie in (0, 1)");
    if (!theta.finite())
        throw std::invalid_argument("biot_savart_velocity: non-finite input field");
    const TorusGrid& grid = theta.grid();
    const int n = grid.n;
    const double ku = grid.wavenumber_unit();
    const auto& th = theta.spectral();
    const auto& mod = detail::power_table(grid, beta - 2.0);
    std::vector<std::complex<double>> ux(th.size()), uy(th.size());
    const std::complex<double> mi(0.0, -1.0);
    for (int jy = 0; jy < n; ++jy) {
        const double kky = ku * grid.signed_mode(jy);
        for (int jx = 0; jx < n; ++jx) {
            const double kkx = ku * grid.signed_mode(jx);
            const std::size_t idx = static_cast<std::size_t>(jy) * n + jx;
            double amp = mod[idx];
            if (delta > 0.0) {
                const double k2 = kkx * kkx + kky * kky;
                amp *= std::exp(-0.5 * delta * delta * k2);
            }
            const std::complex<double> base = mi * amp * th[idx];
            ux[idx] = -kky * base; // perp = (-k2, k1)
            uy[idx] = kkx * base;
        }
    }
    ux[0] = uy[0] = {0.0, 0.0};
    return VectorField(Field::from_spectral(grid, std::move(ux)),
                       Field::from_spectral(grid, std::move(uy)),
                       /*div_free=*/true);
}

} // namespace

VectorField biot_savart_velocity(const Field& theta, double beta) {
    return biot_savart_impl(theta, beta, 0.0);
}

VectorField biot_savart_velocity_mollified(const Field& theta, double beta,
                                           double delta) {
    if (delta < 0.0)
        throw std::invalid_argument("biot_savart_velocity_mollified: delta < 0");
    return biot_savart_impl(theta, beta, delta);
}

double sobolev_norm(const Field& f, double s) {
    const auto& spec = f.spectral();
    const TorusGrid& grid = f.grid();
    const double l2scale = grid.length * grid.length;
    if (s == 0.0) {
        double acc = 0.0;
        for (const auto& c : spec) acc += std::norm(c);
        return std::sqrt(l2scale * acc);
    }
    double acc = 0.0;
    double maxmag = 0.0;
    const auto& table = detail::power_table(grid, 2.0 * s);
    for (std::size_t i = 1; i < spec.size(); ++i) {
        const double m2 = std::norm(spec[i]);
        acc += table[i] * m2;
        maxmag = std::max(maxmag, m2);
    }
    if (s < 0.0) {
        const double mean2 = std::norm(spec[0]);
        if (mean2 > 1e-20 * std::max(maxmag, 1e-300))
            throw std::domain_error(
                "sobolev_norm: homogeneous norm with s < 0 requires a mean-zero field");
    }
    return std::sqrt(l2scale * acc);
}

double inhomogeneous_sobolev_norm(const Field& f, double s) {
    const auto& spec = f.spectral();
    const TorusGrid& grid = f.grid();
    const int n = grid.n;
    const double ku = grid.wavenumber_unit();
    double acc = 0.0;
    for (int jy = 0; jy < n; ++jy) {
        const double kky = ku * grid.signed_mode(jy);
        for (int jx = 0; jx < n; ++jx) {
            const double kkx = ku * grid.signed_mode(jx);
            const double w = std::pow(1.0 + kkx * kkx + kky * kky, s);
            acc += w * std::norm(spec[static_cast<std::size_t>(jy) * n + jx]);
        }
    }
    return std::sqrt(grid.length * grid.length * acc);
}

double lebesgue_norm(const Field& f, double q) {
    if (q < 1.0)
        throw std::invalid_argument("lebesgue_norm: exponent q must be >= 1");
    const auto& phys = f.physical();
    if (std::isinf(q)) {
        double m = 0.0;
        for (double v : phys) m = std::max(m, std::abs(v));
        return m;
    }
    const double area = f.grid().cell_area();
    double acc = 0.0;
    if (q == 1.0) {
        for (double v : phys) acc += std::abs(v);
    } else if (q == 2.0) {
        for (double v : phys) acc += v * v;
    } else {
        for (double v : phys) acc += std::pow(std::abs(v), q);
    }
    return std::pow(area * acc, 1.0 / q);
}

Field dealias_product(const Field& a, const Field& b) {
    if (a.grid() != b.grid())
        throw std::invalid_argument("dealias_product: grid mismatch");
    Field fa = a;
    Field fb = b;
    fa.dealias();
    fb.dealias();
    const auto& pa = fa.physical();
    const auto& pb = fb.physical();
    std::vector<double> prod(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) prod[i] = pa[i] * pb[i];
    Field out = Field::from_physical(a.grid(), std::move(prod));
    out.dealias();
    return out;
}

Field derivative(const Field& f, int axis) {
    const TorusGrid& grid = f.grid();
    const int n = grid.n;
    const double ku = grid.wavenumber_unit();
    const auto& in = f.spectral();
    std::vector<std::complex<double>> out(in.size());
    for (int jy = 0; jy < n; ++jy) {
        const double kky = ku * grid.signed_mode(jy);
        for (int jx = 0; jx < n; ++jx) {
            const double kkx = ku * grid.signed_mode(jx);
            const std::size_t idx = static_cast<std::size_t>(jy) * n + jx;
            const double k = (axis == 0) ? kkx : kky;
            out[idx] = std::complex<double>(0.0, k) * in[idx];
        }
    }
    return Field::from_spectral(grid, std::move(out));
}

VectorField gradient(const Field& f) {
    return VectorField(derivative(f, 0), derivative(f, 1));
}

Field divergence(const VectorField& v) {
    Field dx = derivative(v.x, 0);
    Field dy = derivative(v.y, 1);
    auto& sx = dx.spectral_mut();
    const auto& sy = dy.spectral();
    for (std::size_t i = 0; i < sx.size(); ++i) sx[i] += sy[i];
    return dx;
}

double l2_inner(const Field& a, const Field& b) {
    if (a.grid() != b.grid())
        throw std::invalid_argument("l2_inner: grid mismatch");
    const auto& pa = a.physical();
    const auto& pb = b.physical();
    double acc = 0.0;
    for (std::size_t i = 0; i < pa.size(); ++i) acc += pa[i] * pb[i];
    return a.grid().cell_area() * acc;
}

double max_spectral_divergence(const VectorField& v) {
    const TorusGrid& grid = v.grid();
    const int n = grid.n;
    const double ku = grid.wavenumber_unit();
    const auto& sx = v.x.spectral();
    const auto& sy = v.y.spectral();
    double worst = 0.0;
    for (int jy = 0; jy < n; ++jy) {
        const double kky = ku * grid.signed_mode(jy);
        for (int jx = 0; jx < n; ++jx) {
            const double kkx = ku * grid.signed_mode(jx);
            const std::size_t idx = static_cast<std::size_t>(jy) * n + jx;
            worst = std::max(worst, std::abs(kkx * sx[idx] + kky * sy[idx]));
        }
    }
    return worst;
}

} // namespace gsqg
