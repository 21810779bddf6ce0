#pragma once

// Fourier holographic reduced representations over real vectors.
//
// A hypervector is stored in the time domain as d real values. Its DFT is
// conjugate symmetric, so only the half spectrum ever needs computing. The
// forward transform is unscaled and the inverse carries 1/d, which makes a
// vector with unit-modulus spectrum exactly unit L2 norm (Parseval).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vsaogm {

/// Frequency-domain phases defining one spatial axis.
///
/// `phases[k]` is the angle a_k of coefficient e^{i a_k}. Index 0 (and d/2
/// for even d) is 0 and `phases[d-k] == -phases[k]`, so every fractional
/// power of the axis is a real vector.
struct AxisBasis {
    std::size_t dim = 0;
    std::vector<double> phases;
    std::uint64_t seed = 0;
};

class Hypervector {
public:
    Hypervector() = default;
    explicit Hypervector(std::size_t dim) : values_(dim, 0.0) {}
    explicit Hypervector(std::vector<double> values) : values_(std::move(values)) {}

    static Hypervector zeros(std::size_t dim) { return Hypervector(dim); }

    std::size_t dim() const noexcept { return values_.size(); }

    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    double norm() const;

    Hypervector& operator+=(const Hypervector& other);

    friend bool operator==(const Hypervector&, const Hypervector&) = default;

private:
    std::vector<double> values_;
};

/// Draws phases uniformly on (-pi, pi] for indices 1..ceil(d/2)-1 and
/// mirrors them with negation. Throws InvalidArgument when d < 2.
AxisBasis make_axis(std::uint64_t seed, std::size_t dim);

/// F^{-1}{ e^{i phases * exponent} }. Unit norm for every finite exponent.
Hypervector fractional_bind(const AxisBasis& axis, double exponent);

/// Circular convolution through the DFT.
Hypervector bind(const Hypervector& a, const Hypervector& b);

/// Conjugate spectrum, i.e. the index reversal a'[k] = a[(d - k) mod d].
/// Exact inverse for unit-modulus spectra.
Hypervector inverse(const Hypervector& a);

Hypervector bundle_into(Hypervector acc, const Hypervector& v);

/// v / |v|, or the zero vector when |v| <= 1e-12.
Hypervector normalize(const Hypervector& v);

double similarity(const Hypervector& a, const Hypervector& b);

/// Moduli of the half spectrum of v (diagnostics and tests).
std::vector<double> spectrum_moduli(const Hypervector& v);

inline constexpr double kZeroNormThreshold = 1e-12;

}  // namespace vsaogm
