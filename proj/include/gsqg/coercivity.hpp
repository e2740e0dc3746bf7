#pragma once

#include "gsqg/field.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsqg {

/// Compactly supported radial mollifier transform: chi_hat(r) = 1 for r <= 1,
/// 0 for r >= 2, with a C-infinity monotone transition built from the standard
/// exp(-1/t) partition function. Two transition profiles are provided so that
/// profile-independence of limits can be checked.
struct MollifierSpec {
    double delta = 0.0;
    int profile = 0; // 0 or 1, distinct admissible transitions

    MollifierSpec(double delta_, int profile_ = 0) : delta(delta_), profile(profile_) {
        if (!(delta > 0.0))
            throw std::invalid_argument("MollifierSpec: delta must be positive");
        if (profile != 0 && profile != 1)
            throw std::invalid_argument("MollifierSpec: unknown profile");
    }

    double chi_hat(double r) const;
};

struct QuadratureControls {
    double tolerance = 1e-6;   // absolute error target for f_delta
    double r_max_factor = 1e3; // truncation radius = factor * max(1, |n|)
    int max_angular = 1 << 13; // angular trapezoid cap
    int max_depth = 32;        // radial adaptive recursion cap
};

/// Error raised when the requested tolerance is unreachable within budget;
/// carries the partial value and the error actually achieved.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double partial, double achieved)
        : std::runtime_error(what), partial_value(partial), achieved_error(achieved) {}
    double partial_value;
    double achieved_error;
};

/// Fourier multiplier of the (mollified) Green kernel of Lambda^(2-beta):
/// (2 pi)^-1 |n|^(beta-2), damped by chi_hat(delta |n|)^2 when a mollifier is
/// given. Normalized so the mollified multiplier converges pointwise to the
/// plain one as delta -> 0. n = 0 is singular and rejected.
double green_multiplier(double nx, double ny, double beta, const MollifierSpec* m);

/// The noise-induced spectral symbol
///   F_delta(n) = int <n-k>^(-2-2a) |P_perp_(n-k) n|^2 (G_delta(n) - G_delta(k)) dk
/// evaluated by adaptive quadrature: the constant-G(n) part integrates in
/// closed form, the G(k) part in polar coordinates about the k = 0 singularity.
/// Truncation tails are bounded analytically and added to the error estimate.
double f_delta(double nx, double ny, double alpha, double beta,
               const MollifierSpec& m, const QuadratureControls& quad,
               double* error_out = nullptr);

struct FLimitResult {
    double value = 0.0;
    double error = 0.0;
    std::vector<double> per_delta;
    std::vector<double> per_delta_error;
};

/// Richardson-style delta -> 0 extrapolation of f_delta over a decreasing
/// delta sequence (length >= 3). A non-monotone tail beyond combined error
/// bars is rejected as a sign of too-loose quadrature tolerance.
FLimitResult f_limit(double nx, double ny, double alpha, double beta,
                     const std::vector<double>& deltas, const QuadratureControls& quad,
                     int profile = 0);

struct CoercivityFit {
    double big_k = 0.0; // K > 0 on success
    double big_c = 0.0;
    double c_cap = 0.0; // scan bound actually used
};

struct CoercivitySample {
    double radius = 0.0;
    double f_value = 0.0;
    double f_error = 0.0;
};

/// Largest K such that F(|n|) <= -K |n|^(beta-2a) + C |n|^(beta-2) holds at
/// every sample for some C in [0, c_cap], found by a dense C-grid scan
/// (auditable two-variable feasibility). Throws if no positive K is feasible.
/// Requires >= 5 radii spanning >= 1.5 decades.
CoercivityFit fit_coercivity(const std::vector<CoercivitySample>& samples,
                             double alpha, double beta, double c_cap = 50.0,
                             int c_grid = 4096);

/// Radius-keyed cache of F_delta over lattice modes (key: integer |m|^2).
class FDeltaCache {
  public:
    double value(std::int64_t radius2_key, double nx, double ny, double alpha,
                 double beta, const MollifierSpec& m, const QuadratureControls& quad,
                 double* error_out);

  private:
    std::map<std::int64_t, std::pair<double, double>> cache_;
    std::mutex mutex_;
};

/// Discrete pairing sum_n F_delta(n) |xi_hat(n)|^2 L^2 over retained modes;
/// xi must be mean-zero. Returns the pairing; accumulated quadrature error is
/// written to error_out when given.
double kappa_pairing(const Field& xi, double alpha, double beta,
                     const MollifierSpec& m, const QuadratureControls& quad,
                     FDeltaCache* cache = nullptr, double* error_out = nullptr);

/// Sampled profile of F over log-spaced radii with fitted constants; the
/// exportable object behind the coercivity experiment.
struct CoercivityProfile {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> radii;
    std::vector<double> deltas;
    std::vector<std::vector<double>> f_delta_values; // [radius][delta]
    std::vector<std::vector<double>> f_delta_errors;
    std::vector<double> f_limit_values;
    std::vector<double> f_limit_errors;
    CoercivityFit fit;

    std::string to_csv() const;
    std::string fit_json() const;
};

CoercivityProfile build_coercivity_profile(double alpha, double beta,
                                           const std::vector<double>& radii,
                                           const std::vector<double>& deltas,
                                           const QuadratureControls& quad,
                                           double fit_c_cap = 50.0);

} // namespace gsqg
