#ifndef FNLS_SPECTRAL_HPP
#define FNLS_SPECTRAL_HPP

#include <utility>

#include "fnls/field.hpp"
#include "fnls/params.hpp"

namespace fnls {

/** Applies the Fourier multiplier |k|^sigma, i.e. D^sigma = (-Lap)^(sigma/2).
 * The zero mode is annihilated for sigma > 0; sigma = 0 is the identity.
 * The result is returned in the space of the input.
 */
ComplexField fractional_power_apply(const ComplexField& u, double sigma);

/// Resolvent smoothing u_lambda: multiplier sqrt(c_s)/(|k|^2 + lambda).
/// Requires lambda > 0.
ComplexField resolvent_smooth(const ComplexField& u, double lambda, const PhysParams& params);

/// Spectral partial derivative d/dx_axis (multiplier i k_axis).
ComplexField gradient_component(const ComplexField& u, int axis);

/// ||D^sigma u||_L2; sigma = 0 recovers the L2 norm.
double sobolev_seminorm(const ComplexField& u, double sigma);

/// Discrete L^r norm with weight dx^d; r may be infinity (grid max modulus).
double lebesgue_norm(const ComplexField& u, double r);

/// Inhomogeneous norm (||u||_L2^2 + ||u||_{Hdot^s}^2)^(1/2).
double hs_norm(const ComplexField& u, double s);

/// (M[u], E[u]) with E = 1/2 ||u||_{Hdot^s}^2 -/+ 1/(p+1) ||u||_{L^{p+1}}^{p+1}
/// (minus focusing, plus defocusing).
std::pair<double, double> mass_energy(const ComplexField& u, const PhysParams& params);

/// Radial decay diagnostic: max over |x|>0 of |x|^((d-2s)/2) |u(x)|, divided
/// by ||u||_{Hdot^s}. Throws on an identically zero field.
double strauss_ratio(const ComplexField& u, const PhysParams& params);

}  // namespace fnls

#endif
