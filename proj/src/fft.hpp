#pragma once

// Real-to-complex DFT helpers over FFTW. Private to the library.
//
// Convention: forward is unscaled, inverse is scaled by 1/d. Spectra are the
// non-redundant half, d/2 + 1 coefficients; the rest follow from conjugate
// symmetry of real signals.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace vsaogm::detail {

using Spectrum = std::vector<std::complex<double>>;

inline std::size_t half_spectrum_size(std::size_t dim) { return dim / 2 + 1; }

Spectrum forward_dft(std::span<const double> signal);

std::vector<double> inverse_dft(std::span<const std::complex<double>> half_spectrum,
                                std::size_t dim);

}  // namespace vsaogm::detail
