#pragma once

#include "gsqg/field.hpp"

namespace gsqg {

/// Applies |k|^s in spectral space. The zero mode is annihilated for s != 0
/// (homogeneous operators act on mean-free content only).
/// Requires finite input and s in [-3, 3].
Field fractional_laplacian(const Field& f, double s);

/// u = -grad^perp Lambda^(beta-2) theta, i.e.
/// u_hat(k) = -i * (-k2, k1) * |k|^(beta-2) * theta_hat(k), u_hat(0) = 0.
/// Result carries the divergence-free flag. beta in (0, 1).
VectorField biot_savart_velocity(const Field& theta, double beta);

/// Same multiplier additionally damped by rho_hat(delta*k) = exp(-|delta k|^2/2),
/// the mollified Biot-Savart kernel used by the regularized model. delta >= 0.
VectorField biot_savart_velocity_mollified(const Field& theta, double beta, double delta);

/// Homogeneous Sobolev norm: sqrt(L^2 * sum_{k != 0} |k|^(2s) |f_hat(k)|^2).
/// s == 0 includes the zero mode (plain L^2 via Parseval). For s < 0 a field
/// with nonzero mean is rejected (the homogeneous norm is ill-defined there).
double sobolev_norm(const Field& f, double s);

/// Inhomogeneous variant with weight (1 + |k|^2)^s.
double inhomogeneous_sobolev_norm(const Field& f, double s);

/// Lebesgue norm by equal-weight quadrature at the grid points;
/// q = infinity returns max |f|. q < 1 is rejected.
double lebesgue_norm(const Field& f, double q);

/// Pointwise physical product with the 2/3-rule filter applied to both inputs
/// and to the result. Grids must match.
Field dealias_product(const Field& a, const Field& b);

/// Spectral partial derivative along axis (0 = x, 1 = y).
Field derivative(const Field& f, int axis);

VectorField gradient(const Field& f);

/// div v = d_x v_x + d_y v_y, computed spectrally.
Field divergence(const VectorField& v);

/// L^2 inner product h^2 * sum_j a(x_j) b(x_j).
double l2_inner(const Field& a, const Field& b);

/// max over grid points of |k . v_hat(k)| over retained modes; the spectral
/// divergence residual used to check the divergence-free invariant.
double max_spectral_divergence(const VectorField& v);

namespace detail {
/// Cached per-(grid,s) table of |k|^s over FFT storage order (zero mode -> 0).
const std::vector<double>& power_table(const TorusGrid& grid, double s);
} // namespace detail

} // namespace gsqg
