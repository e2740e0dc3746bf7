#pragma once

#include "gsqg/coercivity.hpp"
#include "gsqg/config.hpp"
#include "gsqg/solver.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gsqg {

inline constexpr const char* code_version = "gsqg-lab 0.1.0";

enum class Verdict { pass, fail, inconclusive };
std::string verdict_to_string(Verdict v);

struct Check {
    std::string name;
    Verdict verdict = Verdict::fail;
    double value = 0.0;
    double threshold = 0.0;
    std::string tolerance_note; // states the tolerance the verdict was judged against
};

struct ExperimentReport {
    std::string id;
    KeyValueConfig config;
    nlohmann::json metrics;
    std::vector<Check> checks;
    double wall_seconds = 0.0;
    std::int64_t total_steps = 0;

    bool passed() const;
    Verdict overall() const;
    nlohmann::json to_json() const; // embeds config hash and code version
    void add_check(const std::string& name, Verdict v, double value, double threshold,
                   const std::string& note);
};

/// Welford running mean/variance; the report stores per-run values so the
/// aggregation can be audited against a two-pass recomputation.
struct RunningStats {
    std::int64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }
    double variance() const { return count > 1 ? m2 / (count - 1) : 0.0; }
    double std_error() const {
        return count > 0 ? std::sqrt(variance() / count) : 0.0;
    }
};

/// Least-squares slope of y against x with 1-sigma slope error from the
/// supplied per-point standard deviations (unweighted fit, propagated error).
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_sigma = 0.0;
};
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<double>& y_sigma);

/// Gaussian spectral mollification: multiplies theta_hat(k) by exp(-|delta k|^2/2).
Field mollify_field(const Field& f, double delta);

// Experiment drivers. Each accepts the parsed key = value configuration,
// honours the simulation keys plus its own (documented in the README), and
// returns a reproducible report.
ExperimentReport exp_invariants(const KeyValueConfig& kv);
ExperimentReport exp_viscosity_sweep(const KeyValueConfig& kv);
ExperimentReport exp_stability(const KeyValueConfig& kv);
ExperimentReport exp_mollification(const KeyValueConfig& kv);
ExperimentReport exp_linear_stability(const KeyValueConfig& kv);
ExperimentReport exp_noise_covariance(const KeyValueConfig& kv);
ExperimentReport exp_product_inequality(const KeyValueConfig& kv);
ExperimentReport exp_coercivity(const KeyValueConfig& kv);

} // namespace gsqg
