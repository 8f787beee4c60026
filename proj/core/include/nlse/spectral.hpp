#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nlse/grid.hpp"

namespace nlse::spectral {

using cplx = std::complex<double>;

/// In-place radix-2 complex FFT (n a power of two). Forward uses the
/// e^{-ikx} sign convention; the inverse includes the 1/n factor.
void fft(std::span<cplx> data, bool inverse);

/// Spectral derivative of given order: f -> (ik)^order f in Fourier space.
std::vector<cplx> derivative(const GridSpec& grid, std::span<const cplx> f, int order);

/// First and second derivative in one forward transform.
void derivatives_1_2(const GridSpec& grid, std::span<const cplx> f,
                     std::vector<cplx>& df, std::vector<cplx>& ddf);

/// Exact propagator of i ∂t ψ = ν₁ Δψ over time T: multiplies each mode by
/// exp(-i ν₁ k² T) ... the dispersion ω(k) = -ν₁k², ψ_k(T) = e^{-iωT} ψ_k(0).
std::vector<cplx> free_propagate(const GridSpec& grid, std::span<const cplx> f, double nu1,
                                 double T);

/// Periodic translation by a (not necessarily grid-commensurate) shift:
/// f(x) -> f(x - shift), exact for band-limited data.
std::vector<cplx> translate(const GridSpec& grid, std::span<const cplx> f, double shift);

} // namespace nlse::spectral
