// FFTW-backed forward/inverse transforms between Field and SpectralField.
//
// Plans are cached per (dim, N) in thread-local storage; plan creation is
// serialized behind a global mutex (the FFTW planner is not thread-safe,
// execution on distinct buffers is). All plans use FFTW_ESTIMATE so results
// are reproducible run to run.

#pragma once

#include <complex>
#include <vector>

#include "fkslab/grid.hpp"

namespace fks {

// Forward transform: coeffs[m] = (1/N^dim) sum_j values[j] e^{-2*pi*i*j*m/N}.
SpectralField to_spectral(const Field& f);

// Inverse transform; imaginary residue (max |Im| over points) is discarded and
// optionally reported. For conjugate-symmetric inputs it is round-off only.
Field to_field(const SpectralField& s, double* imag_residual = nullptr);

// Full complex inverse, for diagnostics.
std::vector<std::complex<double>> to_complex_values(const SpectralField& s);

}  // namespace fks
