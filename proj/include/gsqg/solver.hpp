#pragma once

#include "gsqg/field.hpp"
#include "gsqg/noise.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gsqg {

enum class Scheme { ito_euler, ito_integrating_factor, deterministic_rk4 };

Scheme scheme_from_string(const std::string& name);
std::string scheme_to_string(Scheme s);

struct SimulationConfig {
    int resolution = 64;
    double length = 2.0 * M_PI;
    double dealias_fraction = 2.0 / 3.0;
    double beta = 0.5;

    bool noise_enabled = true;
    double alpha = 0.4;
    int noise_cutoff = 8;
    double delta_noise = 0.0;

    double nu = 0.0;
    double delta_kernel = 0.0;
    bool nonlinearity_enabled = true;

    double dt = 1e-3;
    double horizon = 1.0;
    Scheme scheme = Scheme::ito_integrating_factor;
    std::uint64_t seed = 1;

    std::string initial_condition = "two_mode";
    double ic_amplitude = 1.0;
    std::string forcing = "zero";
    double forcing_amplitude = 1.0;
    double forcing_decay = 0.0; // f(t, x) = amplitude * exp(-decay * t) * g(x)

    double level_r = 0.0;             // 0 disables the co-evolved decomposition
    bool track_passive_scalar = false; // co-evolve zeta with drift b = u(theta)

    int cadence = 10;
    double p_exponent = 2.0;
    double gamma_exponent = -1.0; // < 0 means the default gamma = 1 - beta

    double cfl_advisory = 1.0;
    double cfl_error = 2.0;

    TorusGrid grid() const { return TorusGrid(resolution, length, dealias_fraction); }
    double gamma() const { return gamma_exponent < 0.0 ? 1.0 - beta : gamma_exponent; }

    /// 1/p_crit = 1 - alpha - beta/2.
    double critical_p() const { return 1.0 / (1.0 - alpha - 0.5 * beta); }
    bool uniqueness_regime() const {
        return 0.5 * beta < alpha && alpha < 0.5 &&
               0.5 * beta + alpha <= 1.0 - 1.0 / p_exponent + 1e-12;
    }
    bool linear_regime() const {
        return alpha < 0.5 * (gamma() + 1.0) - 1.0 / p_exponent;
    }

    void validate() const;
};

/// Time-constant or exponentially decaying forcing profile.
struct Forcing {
    std::optional<Field> profile; // empty means f == 0
    double amplitude = 0.0;
    double decay = 0.0;

    bool zero() const { return !profile.has_value() || amplitude == 0.0; }
    double scale_at(double t) const {
        return zero() ? 0.0 : amplitude * std::exp(-decay * t);
    }
    /// L^q norm of f(t, .) (scales linearly with the profile norm).
    double lq_norm_at(double t, double q) const;
    /// Exact time integral of |scale| over [0, t].
    double scale_integral(double t) const;
};

struct StepError : std::runtime_error {
    StepError(const std::string& what, double time) : std::runtime_error(what), t(time) {}
    double t;
};

struct SimulationState {
    double time = 0.0;
    std::int64_t step_index = 0;
    Field theta;
    std::optional<Field> theta_low;  // level-set decomposition, |theta0| <= R part
    std::optional<Field> theta_high;
    std::optional<Field> zeta; // passive scalar sharing noise and drift u(theta)
    double last_courant = 0.0;
    bool cfl_advisory_hit = false;

    explicit SimulationState(Field theta0) : theta(std::move(theta0)) {}
};

/// N(theta) = div[(K_beta^delta * theta) theta], dealiased divergence form;
/// the mollified kernel multiplies the Biot-Savart multiplier by
/// rho_hat(delta_K k). Output is exactly mean-free.
Field gsqg_nonlinearity(const Field& theta, double beta, double delta_kernel = 0.0);

/// Advection contribution -div(u phi), dealiased (linear in phi for frozen u).
Field advection_divergence_form(const VectorField& u, const Field& phi);

/// high = phi 1_{|phi|>R}, low = phi - high.
std::pair<Field, Field> levelset_split(const Field& phi, double level);

/// One Euler-Maruyama / integrating-factor step of the Ito-form dynamics
///   d theta = [-N(theta) + (c + nu) Lap theta + f] dt - transport(theta, inc).
/// Decomposition components and the passive scalar advance with the same
/// velocity and the same increment. The CFL guard throws beyond cfl_error and
/// latches the advisory flag beyond cfl_advisory.
void step_ito(SimulationState& state, const SimulationConfig& config,
              const Forcing& forcing, const NoiseSpectrum& spec,
              const NoiseIncrement& inc);

/// Classical RK4 step of d theta/dt = -N(theta) + nu Lap theta + f (noise off).
void step_deterministic_rk4(SimulationState& state, const SimulationConfig& config,
                            const Forcing& forcing);

/// One Ito step of d zeta = [-div(b zeta) + c0 Lap zeta + f] dt - transport(zeta, inc)
/// for an externally supplied divergence-free drift (checked to 1e-10).
Field linear_transport_step(const Field& zeta, const VectorField& drift,
                            const Field* forcing_now, const SimulationConfig& config,
                            const NoiseSpectrum& spec, const NoiseIncrement& inc);

struct DiagnosticsRow {
    double time = 0.0;
    double l1 = 0.0, l2 = 0.0, lp = 0.0, linf = 0.0;
    double h_neg = 0.0; // Hdot^(beta/2 - 1)
    double h_ba = 0.0;  // Hdot^(beta/2 - alpha)
    double h0 = 0.0;
};

struct TrajectoryRecord {
    std::vector<DiagnosticsRow> series;
    std::vector<std::pair<double, Field>> snapshots;
    std::int64_t total_steps = 0;
    bool cfl_advisory_hit = false;
    double corrector = 0.0;

    std::string series_csv() const;
};

/// Integrates to the horizon, recording diagnostics every `cadence` steps
/// (plus t = 0 and the final time). Fully deterministic given the seed.
TrajectoryRecord run_simulation(const SimulationConfig& config,
                                bool keep_snapshots = false,
                                int snapshot_every = 0);

DiagnosticsRow diagnostics_for(const Field& theta, double time, double beta,
                               double alpha, double p);

} // namespace gsqg
