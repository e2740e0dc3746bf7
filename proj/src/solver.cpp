#include "gsqg/solver.hpp"

#include "gsqg/initial_conditions.hpp"
#include "gsqg/spectral_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gsqg {

Scheme scheme_from_string(const std::string& name) {
    if (name == "ito-euler") return Scheme::ito_euler;
    if (name == "ito-integrating-factor") return Scheme::ito_integrating_factor;
    if (name == "deterministic-rk4") return Scheme::deterministic_rk4;
    throw std::invalid_argument("unknown scheme: " + name);
}

std::string scheme_to_string(Scheme s) {
    switch (s) {
        case Scheme::ito_euler: return "ito-euler";
        case Scheme::ito_integrating_factor: return "ito-integrating-factor";
        case Scheme::deterministic_rk4: return "deterministic-rk4";
    }
    return "?";
}

void SimulationConfig::validate() const {
    grid(); // resolution/length checks
    if (!(beta > 0.0) || !(beta < 1.0))
        throw std::invalid_argument("config: beta must lie in (0, 1)");
    if (!(dt > 0.0)) throw std::invalid_argument("config: dt must be positive");
    if (horizon < 0.0) throw std::invalid_argument("config: horizon must be >= 0");
    if (horizon > 0.0 && horizon < dt)
        throw std::invalid_argument("config: horizon must be >= dt");
    if (noise_enabled && scheme == Scheme::deterministic_rk4)
        throw std::invalid_argument("config: deterministic-rk4 requires noise off");
    if (nu < 0.0) throw std::invalid_argument("config: nu must be >= 0");
    if (delta_kernel < 0.0 || delta_noise < 0.0)
        throw std::invalid_argument("config: mollification scales must be >= 0");
    if (level_r < 0.0) throw std::invalid_argument("config: level R must be >= 0");
    if (cadence < 1) throw std::invalid_argument("config: cadence must be >= 1");
    if (!(p_exponent >= 1.0))
        throw std::invalid_argument("config: p exponent must be >= 1");
}

double Forcing::lq_norm_at(double t, double q) const {
    if (zero()) return 0.0;
    return std::abs(scale_at(t)) * lebesgue_norm(*profile, q);
}

double Forcing::scale_integral(double t) const {
    if (zero()) return 0.0;
    if (decay == 0.0) return std::abs(amplitude) * t;
    return std::abs(amplitude) * (1.0 - std::exp(-decay * t)) / decay;
}

Field gsqg_nonlinearity(const Field& theta, double beta, double delta_kernel) {
    VectorField u = biot_savart_velocity_mollified(theta, beta, delta_kernel);
    Field fx = dealias_product(u.x, theta);
    Field fy = dealias_product(u.y, theta);
    Field div = divergence(VectorField(std::move(fx), std::move(fy)));
    div.spectral_mut()[0] = {0.0, 0.0};
    return div;
}

Field advection_divergence_form(const VectorField& u, const Field& phi) {
    Field fx = dealias_product(u.x, phi);
    Field fy = dealias_product(u.y, phi);
    Field div = divergence(VectorField(std::move(fx), std::move(fy)));
    div.spectral_mut()[0] = {0.0, 0.0};
    return div;
}

std::pair<Field, Field> levelset_split(const Field& phi, double level) {
    if (level < 0.0) throw std::invalid_argument("levelset_split: R must be >= 0");
    const auto& p = phi.physical();
    std::vector<double> low(p.size()), high(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (std::abs(p[i]) > level) {
            high[i] = p[i];
            low[i] = 0.0;
        } else {
            low[i] = p[i];
            high[i] = 0.0;
        }
    }
    return {Field::from_physical(phi.grid(), std::move(low)),
            Field::from_physical(phi.grid(), std::move(high))};
}

namespace {

void axpy(Field& y, double a, const Field& x) {
    auto& sy = y.spectral_mut();
    const auto& sx = x.spectral();
    for (std::size_t i = 0; i < sy.size(); ++i) sy[i] += a * sx[i];
}

void apply_heat_factor(Field& f, double coeff, double dt) {
    if (coeff == 0.0) return;
    const auto& k2 = detail::power_table(f.grid(), 2.0);
    auto& s = f.spectral_mut();
    for (std::size_t i = 0; i < s.size(); ++i) s[i] *= std::exp(-coeff * k2[i] * dt);
}

void add_laplacian(Field& rhs, const Field& f, double coeff) {
    if (coeff == 0.0) return;
    const auto& k2 = detail::power_table(f.grid(), 2.0);
    auto& s = rhs.spectral_mut();
    const auto& sf = f.spectral();
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= coeff * k2[i] * sf[i];
}

double courant_number(const VectorField& u, const SimulationConfig& config) {
    const double umax = std::max(u.x.max_abs(), u.y.max_abs());
    return config.dt * umax * config.resolution / config.length;
}

void guard_cfl(SimulationState& state, double courant, const SimulationConfig& config) {
    state.last_courant = courant;
    if (courant > config.cfl_advisory) state.cfl_advisory_hit = true;
    if (courant > config.cfl_error) {
        std::ostringstream os;
        os << "CFL guard: dt * |u|_inf * N / L = " << courant << " exceeds "
           << config.cfl_error;
        throw StepError(os.str(), state.time);
    }
}

// Shared Euler-Maruyama / integrating-factor update for one scalar:
//   phi' = IF[ phi + dt * (advect + f_term) - transport ] (+ explicit heat for
//   plain Euler), where advect = -div(u phi) and the heat coefficient is
//   c + nu. All pieces are linear in phi for frozen u and increments.
Field ito_scalar_update(const Field& phi, const VectorField* u, const Field* f_now,
                        double heat_coeff, const SimulationConfig& config,
                        const NoiseSpectrum& spec, const NoiseIncrement& inc) {
    Field next = phi;
    if (u) axpy(next, -config.dt, advection_divergence_form(*u, phi));
    if (f_now) axpy(next, config.dt, *f_now);
    if (config.noise_enabled) axpy(next, -1.0, transport_term(phi, spec, inc));
    if (config.scheme == Scheme::ito_integrating_factor) {
        apply_heat_factor(next, heat_coeff, config.dt);
    } else {
        Field lap = phi;
        add_laplacian(next, lap, -heat_coeff * config.dt); // next += coeff dt Lap phi
    }
    return next;
}

} // namespace

void step_ito(SimulationState& state, const SimulationConfig& config,
              const Forcing& forcing, const NoiseSpectrum& spec,
              const NoiseIncrement& inc) {
    if (config.noise_enabled && inc.cosine.size() != spec.modes().size())
        throw std::invalid_argument("step_ito: spectrum/increment mismatch");
    const double heat = (config.noise_enabled ? spec.ito_corrector() : 0.0) + config.nu;

    std::optional<VectorField> u;
    const bool need_velocity = config.nonlinearity_enabled || state.theta_low ||
                               state.zeta.has_value();
    if (need_velocity) {
        u = biot_savart_velocity_mollified(state.theta, config.beta,
                                           config.delta_kernel);
        guard_cfl(state, courant_number(*u, config), config);
    }
    const VectorField* advector = config.nonlinearity_enabled ? &*u : nullptr;
    const VectorField* component_advector = u ? &*u : nullptr;

    std::optional<Field> f_now, f_low, f_high;
    if (!forcing.zero()) {
        f_now = *forcing.profile;
        auto& s = f_now->spectral_mut();
        const double scale = forcing.scale_at(state.time);
        for (auto& c : s) c *= scale;
        if (state.theta_low) {
            auto parts = levelset_split(*f_now, config.level_r);
            f_low = std::move(parts.first);
            f_high = std::move(parts.second);
        }
    }

    Field next = ito_scalar_update(state.theta, advector,
                                   f_now ? &*f_now : nullptr, heat, config, spec, inc);
    if (state.theta_low) {
        state.theta_low = ito_scalar_update(*state.theta_low, component_advector,
                                            f_low ? &*f_low : nullptr, heat, config,
                                            spec, inc);
        state.theta_high = ito_scalar_update(*state.theta_high, component_advector,
                                             f_high ? &*f_high : nullptr, heat, config,
                                             spec, inc);
    }
    if (state.zeta) {
        state.zeta = ito_scalar_update(*state.zeta, component_advector,
                                       f_now ? &*f_now : nullptr, heat, config, spec,
                                       inc);
    }
    state.theta = std::move(next);
    state.time += config.dt;
    state.step_index += 1;
}

void step_deterministic_rk4(SimulationState& state, const SimulationConfig& config,
                            const Forcing& forcing) {
    if (config.noise_enabled)
        throw std::invalid_argument("step_deterministic_rk4: noise must be disabled");

    auto eval_rhs = [&](const Field& phi, double t) {
        Field acc(phi.grid());
        if (config.nonlinearity_enabled) {
            VectorField u = biot_savart_velocity_mollified(phi, config.beta,
                                                           config.delta_kernel);
            guard_cfl(state, courant_number(u, config), config);
            axpy(acc, -1.0, advection_divergence_form(u, phi));
        }
        add_laplacian(acc, phi, -config.nu); // acc += nu Lap phi
        if (!forcing.zero()) {
            const double scale = forcing.scale_at(t);
            axpy(acc, scale, *forcing.profile);
        }
        return acc;
    };

    const double dt = config.dt;
    const double t = state.time;
    Field k1 = eval_rhs(state.theta, t);
    Field s2 = state.theta;
    axpy(s2, 0.5 * dt, k1);
    Field k2 = eval_rhs(s2, t + 0.5 * dt);
    Field s3 = state.theta;
    axpy(s3, 0.5 * dt, k2);
    Field k3 = eval_rhs(s3, t + 0.5 * dt);
    Field s4 = state.theta;
    axpy(s4, dt, k3);
    Field k4 = eval_rhs(s4, t + dt);

    axpy(state.theta, dt / 6.0, k1);
    axpy(state.theta, dt / 3.0, k2);
    axpy(state.theta, dt / 3.0, k3);
    axpy(state.theta, dt / 6.0, k4);
    state.time += dt;
    state.step_index += 1;
}

Field linear_transport_step(const Field& zeta, const VectorField& drift,
                            const Field* forcing_now, const SimulationConfig& config,
                            const NoiseSpectrum& spec, const NoiseIncrement& inc) {
    const double scale = std::max({drift.x.max_abs(), drift.y.max_abs(), 1.0});
    if (max_spectral_divergence(drift) > 1e-10 * scale)
        throw std::invalid_argument("linear_transport_step: drift is not divergence-free");
    const double heat = config.noise_enabled ? spec.ito_corrector() : 0.0;
    return ito_scalar_update(zeta, &drift, forcing_now, heat, config, spec, inc);
}

DiagnosticsRow diagnostics_for(const Field& theta, double time, double beta,
                               double alpha, double p) {
    DiagnosticsRow row;
    row.time = time;
    row.l1 = lebesgue_norm(theta, 1.0);
    row.l2 = lebesgue_norm(theta, 2.0);
    row.lp = lebesgue_norm(theta, p);
    row.linf = lebesgue_norm(theta, std::numeric_limits<double>::infinity());
    // negative-order norms are computed on the mean-free part; the mean is a
    // separately conserved diagnostic
    Field mean_free = theta;
    mean_free.spectral_mut()[0] = {0.0, 0.0};
    row.h_neg = sobolev_norm(mean_free, 0.5 * beta - 1.0);
    row.h_ba = sobolev_norm(mean_free, 0.5 * beta - alpha);
    row.h0 = sobolev_norm(theta, 0.0);
    return row;
}

std::string TrajectoryRecord::series_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "time,L1,L2,Lp,Linf,Hneg1bh,Hba,H0\n";
    for (const auto& r : series)
        os << r.time << ',' << r.l1 << ',' << r.l2 << ',' << r.lp << ',' << r.linf
           << ',' << r.h_neg << ',' << r.h_ba << ',' << r.h0 << '\n';
    return os.str();
}

TrajectoryRecord run_simulation(const SimulationConfig& config, bool keep_snapshots,
                                int snapshot_every) {
    config.validate();
    const TorusGrid grid = config.grid();
    Field theta0 = make_named_field(grid, config.initial_condition,
                                    config.ic_amplitude, config.seed);
    SimulationState state(std::move(theta0));
    if (config.level_r > 0.0) {
        auto parts = levelset_split(state.theta, config.level_r);
        state.theta_low = std::move(parts.first);
        state.theta_high = std::move(parts.second);
    }
    if (config.track_passive_scalar) state.zeta = state.theta;

    Forcing forcing;
    if (config.forcing != "zero" && config.forcing_amplitude != 0.0) {
        forcing.profile = make_named_field(grid, config.forcing, 1.0, config.seed + 1);
        forcing.amplitude = config.forcing_amplitude;
        forcing.decay = config.forcing_decay;
    }

    NoiseSpectrum spec = config.noise_enabled
                             ? NoiseSpectrum::build(grid, config.alpha,
                                                    config.noise_cutoff,
                                                    config.delta_noise)
                             : NoiseSpectrum::build(grid, 0.5, 0, 0.0);
    CounterRng rng(config.seed);

    TrajectoryRecord record;
    record.corrector = spec.ito_corrector();
    const std::int64_t total =
        static_cast<std::int64_t>(std::llround(config.horizon / config.dt));
    record.series.push_back(diagnostics_for(state.theta, state.time, config.beta,
                                            config.alpha, config.p_exponent));
    if (keep_snapshots) record.snapshots.emplace_back(state.time, state.theta);

    for (std::int64_t s = 0; s < total; ++s) {
        if (config.scheme == Scheme::deterministic_rk4) {
            step_deterministic_rk4(state, config, forcing);
        } else {
            NoiseIncrement inc = sample_increment(spec, config.dt, rng, s);
            step_ito(state, config, forcing, spec, inc);
        }
        const bool last = (s + 1 == total);
        if ((s + 1) % config.cadence == 0 || last)
            record.series.push_back(diagnostics_for(state.theta, state.time,
                                                    config.beta, config.alpha,
                                                    config.p_exponent));
        if (keep_snapshots && snapshot_every > 0 &&
            ((s + 1) % snapshot_every == 0 || last))
            record.snapshots.emplace_back(state.time, state.theta);
    }
    record.total_steps = total;
    record.cfl_advisory_hit = state.cfl_advisory_hit;
    return record;
}

} // namespace gsqg
