#pragma once

#include "gsqg/field.hpp"
#include "gsqg/rng.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gsqg {

struct Mat2 {
    double xx = 0.0, xy = 0.0, yx = 0.0, yy = 0.0;
    double trace() const { return xx + yy; }
};

/// One retained wavevector of the truncated Kraichnan family: the half-lattice
/// representative k (integer indices), its tangential unit vector e = k_perp/|k|
/// and the amplitude a = sqrt(2 q(k) m(delta,k)).
struct NoiseMode {
    int kx = 0, ky = 0;
    double ex = 0.0, ey = 0.0;
    double amplitude = 0.0;
    double q_weight = 0.0; // q(k) * m(delta, k)
};

/// Truncated incompressible Kraichnan spectrum on the torus:
/// q(k) = (1 + |k|^2)^(-1-alpha) at physical wavenumbers k = (2 pi / L) m,
/// modes retained for 0 < |m| <= cutoff, optional Gaussian mollification
/// m(delta, k) = exp(-|delta k|^2) of the amplitudes (rho_hat(x) = e^{-|x|^2/2}
/// squared), and the Ito corrector c = (1/4) sum_{full lattice} q(k) m(delta,k).
class NoiseSpectrum {
  public:
    /// cutoff counts integer lattice shells; it must fit in the dealiased band
    /// (cutoff <= N/3). cutoff = 0 builds the degenerate empty spectrum.
    static NoiseSpectrum build(const TorusGrid& grid, double alpha, int cutoff,
                               double delta = 0.0);

    const TorusGrid& grid() const { return grid_; }
    double alpha() const { return alpha_; }
    int cutoff() const { return cutoff_; }
    double delta() const { return delta_; }
    const std::vector<NoiseMode>& modes() const { return modes_; }

    /// c_0 (delta == 0) or c_delta (delta > 0).
    double ito_corrector() const { return corrector_; }

    /// Q(z) = sum_{K+} 2 q(k) m(delta,k) (e otimes e) cos(k . z).
    Mat2 covariance(double zx, double zy) const;

    /// One-line JSON summary for experiment manifests.
    std::string summary_json() const;

  private:
    TorusGrid grid_;
    double alpha_ = 0.0;
    int cutoff_ = 0;
    double delta_ = 0.0;
    double corrector_ = 0.0;
    std::vector<NoiseMode> modes_;
};

/// Brownian increments for one time step: per retained mode, the cosine and
/// sine channel draws, each N(0, dt). Reproducible from (seed, step).
struct NoiseIncrement {
    double dt = 0.0;
    std::int64_t step = 0;
    std::vector<double> cosine;
    std::vector<double> sine;
};

/// Stream ids for CounterRng. Everything the solver consumes is keyed so that
/// coupled runs (same seed) replay identical randomness.
namespace rng_stream {
constexpr std::uint32_t noise = 1;
constexpr std::uint32_t initial_condition = 2;
constexpr std::uint32_t monte_carlo = 3;
} // namespace rng_stream

NoiseIncrement sample_increment(const NoiseSpectrum& spec, double dt,
                                const CounterRng& rng, std::int64_t step);

/// Evaluates the noise increment field Delta W at one point by direct mode
/// summation (used for covariance diagnostics; no grid involved).
std::array<double, 2> increment_at_point(const NoiseSpectrum& spec,
                                         const NoiseIncrement& inc, double x,
                                         double y);

/// The transported increment sum_k a(k) [cos(k.x) dBc + sin(k.x) dBs] (e_k . grad theta),
/// assembled pseudo-spectrally with dealiasing; output is exactly mean-free.
Field transport_term(const Field& theta, const NoiseSpectrum& spec,
                     const NoiseIncrement& inc);

/// The band-limited increment velocity field Delta W itself (divergence-free).
VectorField increment_velocity_field(const NoiseSpectrum& spec,
                                     const NoiseIncrement& inc);

} // namespace gsqg
