#include "vsaogm/fhrr.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "vsaogm/errors.hpp"
#include "vsaogm/rng.hpp"

namespace vsaogm {
namespace {

void require_same_dim(const Hypervector& a, const Hypervector& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
}

}  // namespace

double Hypervector::norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
}

Hypervector& Hypervector::operator+=(const Hypervector& other) {
    require_same_dim(*this, other, "bundle");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

AxisBasis make_axis(std::uint64_t seed, std::size_t dim) {
    if (dim < 2) throw InvalidArgument("make_axis: dimension must be >= 2, got " + std::to_string(dim));

    AxisBasis axis;
    axis.dim = dim;
    axis.seed = seed;
    axis.phases.assign(dim, 0.0);

    Rng rng(seed);
    const std::size_t free_end = (dim + 1) / 2;  // ceil(d/2)
    for (std::size_t k = 1; k < free_end; ++k) {
        // pi - 2*pi*u with u in [0,1) lands in (-pi, pi].
        const double phase = std::numbers::pi - 2.0 * std::numbers::pi * rng.uniform01();
        axis.phases[k] = phase;
        axis.phases[dim - k] = -phase;
    }
    return axis;
}

Hypervector fractional_bind(const AxisBasis& axis, double exponent) {
    if (!std::isfinite(exponent)) throw InvalidArgument("fractional_bind: exponent must be finite");

    const std::size_t half = detail::half_spectrum_size(axis.dim);
    detail::Spectrum spectrum(half);
    for (std::size_t k = 0; k < half; ++k) spectrum[k] = std::polar(1.0, axis.phases[k] * exponent);
    return Hypervector(detail::inverse_dft(spectrum, axis.dim));
}

Hypervector bind(const Hypervector& a, const Hypervector& b) {
    require_same_dim(a, b, "bind");
    auto fa = detail::forward_dft(a.values());
    const auto fb = detail::forward_dft(b.values());
    for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
    return Hypervector(detail::inverse_dft(fa, a.dim()));
}

Hypervector inverse(const Hypervector& a) {
    const std::size_t d = a.dim();
    Hypervector out(d);
    if (d == 0) return out;
    out[0] = a[0];
    for (std::size_t k = 1; k < d; ++k) out[k] = a[d - k];
    return out;
}

Hypervector bundle_into(Hypervector acc, const Hypervector& v) {
    acc += v;
    return acc;
}

Hypervector normalize(const Hypervector& v) {
    const double n = v.norm();
    if (n <= kZeroNormThreshold) return Hypervector::zeros(v.dim());
    Hypervector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = v[i] / n;
    return out;
}

double similarity(const Hypervector& a, const Hypervector& b) {
    require_same_dim(a, b, "similarity");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> spectrum_moduli(const Hypervector& v) {
    const auto spectrum = detail::forward_dft(v.values());
    std::vector<double> out(spectrum.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) out[k] = std::abs(spectrum[k]);
    return out;
}

}  // namespace vsaogm
