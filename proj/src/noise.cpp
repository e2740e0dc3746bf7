#include "gsqg/noise.hpp"

#include "gsqg/spectral_ops.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gsqg {

NoiseSpectrum NoiseSpectrum::build(const TorusGrid& grid, double alpha, int cutoff,
                                   double delta) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("NoiseSpectrum: alpha must lie in (0, 1)");
    if (cutoff < 0)
        throw std::invalid_argument("NoiseSpectrum: cutoff must be >= 0");
    if (3 * cutoff > grid.n)
        throw std::invalid_argument(
            "NoiseSpectrum: cutoff exceeds the dealiased band (need cutoff <= N/3)");
    if (delta < 0.0)
        throw std::invalid_argument("NoiseSpectrum: delta must be >= 0");

    NoiseSpectrum spec;
    spec.grid_ = grid;
    spec.alpha_ = alpha;
    spec.cutoff_ = cutoff;
    spec.delta_ = delta;

    const double ku = grid.wavenumber_unit();
    double corrector = 0.0;
    for (int my = -cutoff; my <= cutoff; ++my) {
        for (int mx = -cutoff; mx <= cutoff; ++mx) {
            if (mx == 0 && my == 0) continue;
            if (mx * mx + my * my > cutoff * cutoff) continue;
            const double kx = ku * mx;
            const double ky = ku * my;
            const double k2 = kx * kx + ky * ky;
            const double moll = delta > 0.0 ? std::exp(-delta * delta * k2) : 1.0;
            const double qw = std::pow(1.0 + k2, -1.0 - alpha) * moll;
            corrector += qw; // full symmetric lattice sum
            const bool half = (mx > 0) || (mx == 0 && my > 0);
            if (!half) continue;
            NoiseMode mode;
            mode.kx = mx;
            mode.ky = my;
            const double norm = std::sqrt(k2);
            mode.ex = -ky / norm; // k_perp / |k|
            mode.ey = kx / norm;
            mode.q_weight = qw;
            mode.amplitude = std::sqrt(2.0 * qw);
            spec.modes_.push_back(mode);
        }
    }
    spec.corrector_ = 0.25 * corrector;
    return spec;
}

Mat2 NoiseSpectrum::covariance(double zx, double zy) const {
    const double ku = grid_.wavenumber_unit();
    Mat2 q;
    for (const auto& m : modes_) {
        const double phase = ku * (m.kx * zx + m.ky * zy);
        const double w = 2.0 * m.q_weight * std::cos(phase);
        q.xx += w * m.ex * m.ex;
        q.xy += w * m.ex * m.ey;
        q.yx += w * m.ey * m.ex;
        q.yy += w * m.ey * m.ey;
    }
    return q;
}

std::string NoiseSpectrum::summary_json() const {
    std::ostringstream os;
    os.precision(12);
    os << "{\"alpha\": " << alpha_ << ", \"cutoff\": " << cutoff_
       << ", \"delta\": " << delta_ << ", \"corrector\": " << corrector_
       << ", \"mode_count\": " << modes_.size() << "}";
    return os.str();
}

NoiseIncrement sample_increment(const NoiseSpectrum& spec, double dt,
                                const CounterRng& rng, std::int64_t step) {
    if (dt < 0.0)
        throw std::invalid_argument("sample_increment: dt must be >= 0");
    NoiseIncrement inc;
    inc.dt = dt;
    inc.step = step;
    const std::size_t count = spec.modes().size();
    inc.cosine.resize(count, 0.0);
    inc.sine.resize(count, 0.0);
    if (dt == 0.0) return inc;
    const double root_dt = std::sqrt(dt);
    for (std::size_t i = 0; i < count; ++i) {
        const auto z = rng.normal_pair(rng_stream::noise,
                                       static_cast<std::uint64_t>(step), i);
        inc.cosine[i] = root_dt * z[0];
        inc.sine[i] = root_dt * z[1];
    }
    return inc;
}

std::array<double, 2> increment_at_point(const NoiseSpectrum& spec,
                                         const NoiseIncrement& inc, double x,
                                         double y) {
    if (inc.cosine.size() != spec.modes().size())
        throw std::invalid_argument("increment_at_point: spectrum/increment mismatch");
    const double ku = spec.grid().wavenumber_unit();
    double wx = 0.0, wy = 0.0;
    for (std::size_t i = 0; i < spec.modes().size(); ++i) {
        const auto& m = spec.modes()[i];
        const double phase = ku * (m.kx * x + m.ky * y);
        const double amp =
            m.amplitude * (std::cos(phase) * inc.cosine[i] + std::sin(phase) * inc.sine[i]);
        wx += amp * m.ex;
        wy += amp * m.ey;
    }
    return {wx, wy};
}

VectorField increment_velocity_field(const NoiseSpectrum& spec,
                                     const NoiseIncrement& inc) {
    const TorusGrid& grid = spec.grid();
    if (inc.cosine.size() != spec.modes().size())
        throw std::invalid_argument(
            "increment_velocity_field: spectrum/increment mismatch");
    const int n = grid.n;
    std::vector<std::complex<double>> wx(static_cast<std::size_t>(n) * n, {0.0, 0.0});
    std::vector<std::complex<double>> wy(wx.size());
    // a [cos(kx) dBc + sin(kx) dBs] e  has coefficients a (dBc -/+ i dBs)/2 e
    // at +/- k; filling both partners keeps the field exactly real.
    for (std::size_t i = 0; i < spec.modes().size(); ++i) {
        const auto& m = spec.modes()[i];
        const std::complex<double> cplus(0.5 * m.amplitude * inc.cosine[i],
                                         -0.5 * m.amplitude * inc.sine[i]);
        const int jx = (m.kx + n) % n;
        const int jy = (m.ky + n) % n;
        const int jxm = (n - m.kx) % n;
        const int jym = (n - m.ky) % n;
        const std::size_t ip = static_cast<std::size_t>(jy) * n + jx;
        const std::size_t im = static_cast<std::size_t>(jym) * n + jxm;
        wx[ip] += cplus * m.ex;
        wy[ip] += cplus * m.ey;
        wx[im] += std::conj(cplus) * m.ex;
        wy[im] += std::conj(cplus) * m.ey;
    }
    return VectorField(Field::from_spectral(grid, std::move(wx)),
                       Field::from_spectral(grid, std::move(wy)),
                       /*div_free=*/true);
}

Field transport_term(const Field& theta, const NoiseSpectrum& spec,
                     const NoiseIncrement& inc) {
    if (theta.grid() != spec.grid())
        throw std::invalid_argument("transport_term: grid mismatch");
    VectorField w = increment_velocity_field(spec, inc);
    Field tx = dealias_product(w.x, derivative(theta, 0));
    Field ty = dealias_product(w.y, derivative(theta, 1));
    auto& sx = tx.spectral_mut();
    const auto& sy = ty.spectral();
    for (std::size_t i = 0; i < sx.size(); ++i) sx[i] += sy[i];
    sx[0] = {0.0, 0.0}; // divergence form: exact zero mean
    return tx;
}

} // namespace gsqg
