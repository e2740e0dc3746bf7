#include "gsqg/initial_conditions.hpp"

#include "gsqg/rng.hpp"
#include "gsqg/snapshot.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace gsqg {

namespace {

Field sampled(const TorusGrid& grid, double (*f)(double, double)) {
    const int n = grid.n;
    const double h = 2.0 * M_PI / n; // normalized coordinates
    std::vector<double> v(static_cast<std::size_t>(n) * n);
    for (int jy = 0; jy < n; ++jy)
        for (int jx = 0; jx < n; ++jx)
            v[static_cast<std::size_t>(jy) * n + jx] = f(jx * h, jy * h);
    return Field::from_physical(grid, std::move(v));
}

Field random_band(const TorusGrid& grid, int kmax, std::uint64_t seed) {
    if (kmax < 1 || kmax > grid.max_dealias_index())
        throw std::invalid_argument("random_band: band must fit the dealiased modes");
    const int n = grid.n;
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(n) * n, {0.0, 0.0});
    CounterRng rng(seed);
    std::uint64_t draw = 0;
    for (int my = -kmax; my <= kmax; ++my) {
        for (int mx = -kmax; mx <= kmax; ++mx) {
            if (mx == 0 && my == 0) continue;
            if (mx * mx + my * my > kmax * kmax) continue;
            const bool half = (mx > 0) || (mx == 0 && my > 0);
            ++draw;
            if (!half) continue;
            const auto z = rng.normal_pair(rng_stream::initial_condition, draw, 0);
            const double falloff = 1.0 / (1.0 + mx * mx + my * my);
            const std::complex<double> c(falloff * z[0], falloff * z[1]);
            const int jx = (mx + n) % n;
            const int jy = (my + n) % n;
            const int jxm = (n - mx) % n;
            const int jym = (n - my) % n;
            spec[static_cast<std::size_t>(jy) * n + jx] = c;
            spec[static_cast<std::size_t>(jym) * n + jxm] = std::conj(c);
        }
    }
    Field f = Field::from_spectral(grid, std::move(spec));
    const double peak = f.max_abs();
    if (peak > 0.0) {
        auto& s = f.spectral_mut();
        for (auto& c : s) c /= peak;
    }
    return f;
}

} // namespace

Field make_named_field(const TorusGrid& grid, const std::string& name,
                       double amplitude, std::uint64_t seed) {
    Field f(grid);
    if (name == "zero") {
        return f;
    } else if (name == "cos_x") {
        f = sampled(grid, [](double x, double) { return std::cos(x); });
    } else if (name == "cos_y") {
        f = sampled(grid, [](double, double y) { return std::cos(y); });
    } else if (name == "two_mode") {
        f = sampled(grid,
                    [](double x, double y) { return std::cos(x) + std::sin(2.0 * y); });
    } else if (name == "shear_band") {
        f = sampled(grid, [](double x, double y) {
            return std::sin(y) + 0.4 * std::cos(2.0 * x + 1.0) * std::sin(3.0 * y);
        });
    } else if (name.rfind("random_band:", 0) == 0) {
        const int kmax = std::stoi(name.substr(12));
        f = random_band(grid, kmax, seed);
    } else if (name.rfind("file:", 0) == 0) {
        Snapshot snap = read_snapshot(name.substr(5));
        if (snap.field.grid().n != grid.n)
            throw std::invalid_argument("make_named_field: snapshot resolution mismatch");
        return snap.field;
    } else {
        throw std::invalid_argument("make_named_field: unknown field name '" + name +
                                    "'");
    }
    auto& s = f.spectral_mut();
    for (auto& c : s) c *= amplitude;
    s[0] = {0.0, 0.0};
    f.dealias();
    return f;
}

} // namespace gsqg
