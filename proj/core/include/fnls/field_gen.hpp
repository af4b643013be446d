#ifndef FNLS_FIELD_GEN_HPP
#define FNLS_FIELD_GEN_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <functional>

#include "fnls/field.hpp"

namespace fnls {

/// Samples f(x) on the grid (x passed as a d-vector; unused entries zero).
ComplexField sample_field(const Grid& g,
                          const std::function<std::complex<double>(const std::array<double, 3>&)>& f);

/// amplitude * exp(-|x|^2 / (2 width^2))
ComplexField gaussian_field(const Grid& g, double amplitude, double width);

/// A * exp(i k.x) with k = (pi/l) * mode (integer mode per axis).
ComplexField plane_wave(const Grid& g, double amplitude, const std::array<int, 3>& mode);

/// Mean-free complex field with independent Gaussian coefficients on
/// 0 < |k| <= kband, spectrally damped toward the band edge. Deterministic
/// in the seed.
ComplexField random_band_limited(const Grid& g, double kband, std::uint64_t seed);

}  // namespace fnls

#endif
