// Fourier-multiplier operators on periodic fields: fractional Laplacian,
// fractional heat propagator, gradient of the inverse Laplacian, Riesz
// transforms, spectral divergence, and the 2/3-rule dealias filter.
//
// Symbols are functions of k = (pi/L) m with m in [-N/2, N/2). Real-even
// symbols preserve conjugate symmetry as-is; purely imaginary odd symbols
// additionally zero the (partnerless) Nyquist planes.

#pragma once

#include <functional>
#include <vector>

#include "fkslab/grid.hpp"

namespace fks {

// F^{-1}[ |k|^alpha F f ], alpha in (0, 2]. Zero mode maps to zero.
Field fractional_laplacian(const Field& f, double alpha);

// F^{-1}[ e^{-t |k|^alpha} F f ], t >= 0.
Field heat_propagate(const Field& f, double t, double alpha);

// v_j = F^{-1}[ (i k_j / |k|^2) F u ], zero mode gauged to 0.
// Satisfies div v = -(u - mean u) spectrally.
std::vector<Field> grad_inv_laplacian(const Field& u);

// Riesz transform along `axis` (0-based): symbol -i k_axis / |k|.
Field riesz_transform(const Field& f, int axis);

// Zero every mode with any |m_j| > N/3.
Field dealias(const Field& f);

// Spectral divergence of a vector field.
Field divergence(const std::vector<Field>& v);

// Spectral partial derivative along one axis.
Field partial_derivative(const Field& f, int axis);

// In-place multiplier application on spectral data. `odd_symbol` requests
// Nyquist-plane zeroing (needed whenever the symbol is odd in k).
void apply_multiplier(SpectralField& s,
                      const std::function<std::complex<double>(const std::array<double, 3>&, double)>& symbol,
                      bool odd_symbol);

// Common spectral-space helpers used by the solver (avoid re-transforming).
void apply_heat_multiplier(SpectralField& s, double t, double alpha);
void apply_dealias_mask(SpectralField& s);
void project_gradient(std::vector<SpectralField>& v);  // keep k-parallel part, zero mode

// Fraction of spectral energy carried by the top octave (modes with
// max_j |m_j| > N/4); resolution-loss indicator.
double high_frequency_energy_fraction(const Field& f);

// Pointwise product of band-limited fields with the 2/3-rule filter applied
// to both inputs and the product.
Field dealiased_product(const Field& a, const Field& b);

void require_finite(const Field& f, const char* op);

}  // namespace fks
