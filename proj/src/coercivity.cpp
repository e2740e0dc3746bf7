#include "gsqg/coercivity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace gsqg {

namespace {

// Partition function h(t)/(h(t) + h(1-t)) with h(t) = exp(-c/t): C-infinity,
// 0 at t <= 0, 1 at t >= 1, strictly increasing in between.
double smooth_step(double t, double c) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-c / t);
    const double b = std::exp(-c / (1.0 - t));
    return a / (a + b);
}

struct Integrand {
    double nx, ny, n2;
    double alpha, beta;
    const MollifierSpec* moll;

    // <n - k>^(-2-2a) |P_perp_(n-k) n|^2 at k = (r cos phi, r sin phi).
    double angular(double r, double cphi, double sphi) const {
        const double mx = nx - r * cphi;
        const double my = ny - r * sphi;
        const double m2 = mx * mx + my * my;
        double proj;
        if (m2 < 1e-280) {
            proj = 0.5 * n2; // removable point k = n; angular average of the limit
        } else {
            const double dot = nx * mx + ny * my;
            proj = n2 - dot * dot / m2;
        }
        return std::pow(1.0 + m2, -1.0 - alpha) * proj;
    }

    // Radial part r * G_delta_hat(r) of the polar integrand.
    double radial_weight(double r) const {
        const double chi = moll->chi_hat(moll->delta * r);
        if (chi == 0.0) return 0.0;
        return r * (0.5 / M_PI) * chi * chi * std::pow(r, beta - 2.0);
    }
};

// Periodic trapezoid with doubling; smooth periodic integrands converge fast.
double angular_integral(const Integrand& f, double r, double tol, int max_points,
                        double* err_out) {
    int m = 32;
    double prev = 0.0;
    {
        const double h = 2.0 * M_PI / m;
        double acc = 0.0;
        for (int i = 0; i < m; ++i) {
            const double phi = i * h;
            acc += f.angular(r, std::cos(phi), std::sin(phi));
        }
        prev = acc * h;
    }
    double err = std::abs(prev);
    while (m < max_points) {
        // refine by evaluating the new midpoints only
        const int m2 = 2 * m;
        const double h2 = 2.0 * M_PI / m2;
        double acc = 0.0;
        for (int i = 1; i < m2; i += 2) {
            const double phi = i * h2;
            acc += f.angular(r, std::cos(phi), std::sin(phi));
        }
        const double next = 0.5 * prev + acc * h2;
        err = std::abs(next - prev);
        prev = next;
        m = m2;
        if (err <= tol) break;
    }
    if (err_out) *err_out = err;
    return prev;
}

struct AdaptiveState {
    std::function<double(double)> f;
    double tol_total;
    int max_depth;
    double accumulated_error = 0.0;
    long evals = 0;
};

double adaptive_simpson(AdaptiveState& st, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    st.evals += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double est = left + right;
    const double err = std::abs(est - whole) / 15.0;
    if (depth >= st.max_depth || err <= tol) {
        st.accumulated_error += err;
        return est + (est - whole) / 15.0;
    }
    return adaptive_simpson(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double adaptive_integral(AdaptiveState& st, double a, double b, double tol) {
    if (b <= a) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = st.f(a);
    const double fm = st.f(m);
    const double fb = st.f(b);
    st.evals += 3;
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(st, a, b, fa, fm, fb, whole, tol, 0);
}

} // namespace

double MollifierSpec::chi_hat(double r) const {
    r = std::abs(r);
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double c = profile == 0 ? 1.0 : 2.0;
    return 1.0 - smooth_step(r - 1.0, c);
}

double green_multiplier(double nx, double ny, double beta, const MollifierSpec* m) {
    const double r2 = nx * nx + ny * ny;
    if (r2 == 0.0)
        throw std::domain_error("green_multiplier: singular at n = 0");
    double v = (0.5 / M_PI) * std::pow(r2, 0.5 * (beta - 2.0));
    if (m) {
        const double chi = m->chi_hat(m->delta * std::sqrt(r2));
        v *= chi * chi;
    }
    return v;
}

double f_delta(double nx, double ny, double alpha, double beta,
               const MollifierSpec& m, const QuadratureControls& quad,
               double* error_out) {
    const double n2 = nx * nx + ny * ny;
    if (n2 == 0.0) {
        if (error_out) *error_out = 0.0;
        return 0.0; // projector factor vanishes identically
    }
    const double nr = std::sqrt(n2);
    const double r_max = quad.r_max_factor * std::max(1.0, nr);

    // Constant part G_delta(n) * int_{|m|<=R} <m>^(-2-2a) |P_perp_m n|^2 dm,
    // where the integral is pi |n|^2 (1 - (1+R^2)^(-a)) / (2a) in closed form.
    const double gn = (m.chi_hat(m.delta * nr) == 0.0)
                          ? 0.0
                          : green_multiplier(nx, ny, beta, &m);
    const double tail1 = std::pow(1.0 + r_max * r_max, -alpha);
    const double coeff = M_PI * n2 / (2.0 * alpha);
    const double term1 = gn * coeff * (1.0 - tail1);
    double err_total = gn * coeff * tail1;

    // Remainder -int <n-k>^(-2-2a) |P_perp_(n-k) n|^2 G_delta(k) dk in polar
    // coordinates about k = 0; chi_hat support bounds the domain by 2/delta.
    const double support = 2.0 / m.delta;
    const double r2max = std::min(r_max, support);
    if (r_max < support) {
        // analytic tail: |P| <= |n|^2, <n-k> >= |k|/2 for |k| >= 2|n|
        const double ex = beta - 2.0 - 2.0 * alpha;
        err_total += n2 * std::pow(2.0, 2.0 + 2.0 * alpha) *
                     std::pow(r_max, ex) / (-ex);
    }

    Integrand integrand{nx, ny, n2, alpha, beta, &m};
    const double ang_tol = 1e-3 * quad.tolerance; // per-call angular target
    double ang_err_max = 0.0;
    AdaptiveState st;
    st.max_depth = quad.max_depth;
    st.f = [&](double r) {
        const double w = integrand.radial_weight(r);
        if (w == 0.0) return 0.0;
        double aerr = 0.0;
        const double s = angular_integral(integrand, r, ang_tol, quad.max_angular, &aerr);
        ang_err_max = std::max(ang_err_max, aerr);
        return w * s;
    };

    std::vector<double> breaks{0.0, r2max};
    if (nr < r2max) breaks.push_back(nr);                   // projector kink
    if (1.0 / m.delta < r2max) breaks.push_back(1.0 / m.delta); // chi_hat shoulder
    std::sort(breaks.begin(), breaks.end());

    double term2 = 0.0;
    const double seg_tol = 0.4 * quad.tolerance / std::max<std::size_t>(1, breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        term2 += adaptive_integral(st, breaks[i], breaks[i + 1], seg_tol);

    // angular error enters through the radial weight; bound it crudely by the
    // integral of the weight times the worst angular error observed
    err_total += st.accumulated_error + ang_err_max * (r2max * 1.0);

    const double value = term1 - term2;
    if (error_out) *error_out = err_total;
    if (err_total > quad.tolerance)
        throw QuadratureError("f_delta: tolerance not reached", value, err_total);
    return value;
}

FLimitResult f_limit(double nx, double ny, double alpha, double beta,
                     const std::vector<double>& deltas, const QuadratureControls& quad,
                     int profile) {
    if (deltas.size() < 3)
        throw std::invalid_argument("f_limit: need a delta sequence of length >= 3");
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i)
        if (!(deltas[i] > deltas[i + 1]) || !(deltas[i + 1] > 0.0))
            throw std::invalid_argument("f_limit: deltas must decrease and stay positive");

    FLimitResult res;
    if (nx == 0.0 && ny == 0.0) return res;
    for (double d : deltas) {
        double err = 0.0;
        MollifierSpec m(d, profile);
        res.per_delta.push_back(f_delta(nx, ny, alpha, beta, m, quad, &err));
        res.per_delta_error.push_back(err);
    }

    // F^delta decreases to F once delta |n| <= 1; reject a non-monotone tail
    // beyond combined error bars.
    const std::size_t last = res.per_delta.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
        const double drop = res.per_delta[i] - res.per_delta[i + 1];
        const double bars = res.per_delta_error[i] + res.per_delta_error[i + 1] +
                            1e-12 * std::abs(res.per_delta[i]);
        if (drop < -bars)
            throw std::runtime_error(
                "f_limit: non-monotone delta sequence beyond error bars "
                "(quadrature tolerance too loose)");
    }

    const double d1 = res.per_delta[last - 2] - res.per_delta[last - 1];
    const double d2 = res.per_delta[last - 1] - res.per_delta[last];
    const double floor_err =
        res.per_delta_error[last] + res.per_delta_error[last - 1];
    if (std::abs(d2) <= 4.0 * floor_err || std::abs(d1) <= std::abs(d2)) {
        // differences at the quadrature floor (or no contraction): take the
        // finest value, no extrapolation credit
        res.value = res.per_delta[last];
        res.error = res.per_delta_error[last] + std::abs(d2);
        return res;
    }
    const double rho = d2 / d1; // contraction per step
    const double correction = d2 * rho / (1.0 - rho);
    res.value = res.per_delta[last] + correction;
    res.error = std::abs(correction) + res.per_delta_error[last];
    return res;
}

CoercivityFit fit_coercivity(const std::vector<CoercivitySample>& samples,
                             double alpha, double beta, double c_cap, int c_grid) {
    if (samples.size() < 5)
        throw std::invalid_argument("fit_coercivity: need at least 5 sample radii");
    double rmin = samples.front().radius, rmax = samples.front().radius;
    for (const auto& s : samples) {
        rmin = std::min(rmin, s.radius);
        rmax = std::max(rmax, s.radius);
    }
    if (!(rmin > 0.0) || std::log10(rmax / rmin) < 1.5)
        throw std::invalid_argument(
            "fit_coercivity: sample radii must span >= 1.5 decades");

    CoercivityFit best;
    best.c_cap = c_cap;
    best.big_k = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= c_grid; ++i) {
        const double c = c_cap * static_cast<double>(i) / c_grid;
        double k = std::numeric_limits<double>::infinity();
        for (const auto& s : samples) {
            const double cand = c * std::pow(s.radius, 2.0 * alpha - 2.0) -
                                s.f_value * std::pow(s.radius, 2.0 * alpha - beta);
            k = std::min(k, cand);
        }
        if (k > best.big_k) {
            best.big_k = k;
            best.big_c = c;
        }
    }
    if (!(best.big_k > 0.0))
        throw std::runtime_error(
            "fit_coercivity: no positive K feasible within the C scan");
    return best;
}

double FDeltaCache::value(std::int64_t radius2_key, double nx, double ny,
                          double alpha, double beta, const MollifierSpec& m,
                          const QuadratureControls& quad, double* error_out) {
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(radius2_key);
        if (it != cache_.end()) {
            if (error_out) *error_out = it->second.second;
            return it->second.first;
        }
    }
    double err = 0.0;
    const double v = f_delta(nx, ny, alpha, beta, m, quad, &err);
    std::lock_guard lock(mutex_);
    cache_.emplace(radius2_key, std::make_pair(v, err));
    if (error_out) *error_out = err;
    return v;
}

double kappa_pairing(const Field& xi, double alpha, double beta,
                     const MollifierSpec& m, const QuadratureControls& quad,
                     FDeltaCache* cache, double* error_out) {
    const TorusGrid& grid = xi.grid();
    const auto& spec = xi.spectral();
    if (std::abs(spec[0]) > 1e-10 * std::max(1.0, xi.max_abs()))
        throw std::invalid_argument("kappa_pairing: field must be mean-zero");

    FDeltaCache local;
    FDeltaCache& c = cache ? *cache : local;
    const int n = grid.n;
    const int keep = grid.max_dealias_index();
    const double ku = grid.wavenumber_unit();
    const double l2 = grid.length * grid.length;
    double acc = 0.0;
    double err_acc = 0.0;
    for (int jy = 0; jy < n; ++jy) {
        const int my = grid.signed_mode(jy);
        if (std::abs(my) > keep) continue;
        for (int jx = 0; jx < n; ++jx) {
            const int mx = grid.signed_mode(jx);
            if (std::abs(mx) > keep || (mx == 0 && my == 0)) continue;
            const double w2 = std::norm(spec[static_cast<std::size_t>(jy) * n + jx]);
            if (w2 == 0.0) continue;
            // F is radial; key by the integer lattice radius^2 (L-independent)
            const std::int64_t key =
                static_cast<std::int64_t>(mx) * mx + static_cast<std::int64_t>(my) * my;
            double ferr = 0.0;
            const double f = c.value(key, ku * mx, ku * my, alpha, beta, m, quad, &ferr);
            acc += f * w2 * l2;
            err_acc += ferr * w2 * l2;
        }
    }
    if (error_out) *error_out = err_acc;
    return acc;
}

std::string CoercivityProfile::to_csv() const {
    std::ostringstream os;
    os.precision(12);
    os << "radius,delta,F_delta,error,F_limit,limit_error\n";
    for (std::size_t i = 0; i < radii.size(); ++i)
        for (std::size_t j = 0; j < deltas.size(); ++j)
            os << radii[i] << ',' << deltas[j] << ',' << f_delta_values[i][j] << ','
               << f_delta_errors[i][j] << ',' << f_limit_values[i] << ','
               << f_limit_errors[i] << '\n';
    return os.str();
}

std::string CoercivityProfile::fit_json() const {
    std::ostringstream os;
    os.precision(12);
    os << "{\"alpha\": " << alpha << ", \"beta\": " << beta
       << ", \"K\": " << fit.big_k << ", \"C\": " << fit.big_c
       << ", \"radius_min\": " << (radii.empty() ? 0.0 : radii.front())
       << ", \"radius_max\": " << (radii.empty() ? 0.0 : radii.back()) << "}";
    return os.str();
}

CoercivityProfile build_coercivity_profile(double alpha, double beta,
                                           const std::vector<double>& radii,
                                           const std::vector<double>& deltas,
                                           const QuadratureControls& quad,
                                           double fit_c_cap) {
    CoercivityProfile prof;
    prof.alpha = alpha;
    prof.beta = beta;
    prof.radii = radii;
    prof.deltas = deltas;
    std::vector<CoercivitySample> samples;
    for (double r : radii) {
        FLimitResult lim = f_limit(r, 0.0, alpha, beta, deltas, quad);
        prof.f_delta_values.push_back(lim.per_delta);
        prof.f_delta_errors.push_back(lim.per_delta_error);
        prof.f_limit_values.push_back(lim.value);
        prof.f_limit_errors.push_back(lim.error);
        samples.push_back({r, lim.value, lim.error});
    }
    prof.fit = fit_coercivity(samples, alpha, beta, fit_c_cap);
    return prof;
}

} // namespace gsqg
