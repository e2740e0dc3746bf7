#pragma once

#include <complex>
#include <vector>

namespace gsqg::detail {

/// Executes cached FFTW complex-to-complex 2D transforms for an N x N grid.
/// Plans are created once per resolution (guarded by a global mutex, FFTW's
/// planner is not thread safe) and executed through per-call copies into the
/// plan's aligned buffers, so concurrent callers never share scratch space.
///
/// Normalization: forward() divides by N^2, so spectral coefficients follow
/// the convention f_hat(m) = N^-2 sum_j f(x_j) exp(-i k_m . x_j); backward()
/// is the plain unnormalized adjoint sum.
void fft_forward(int n, const std::complex<double>* in, std::complex<double>* out);
void fft_backward(int n, const std::complex<double>* in, std::complex<double>* out);

} // namespace gsqg::detail
