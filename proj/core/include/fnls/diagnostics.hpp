#ifndef FNLS_DIAGNOSTICS_HPP
#define FNLS_DIAGNOSTICS_HPP

#include <vector>

#include "fnls/dynamics.hpp"
#include "fnls/field.hpp"
#include "fnls/ground_state.hpp"
#include "fnls/morawetz.hpp"
#include "fnls/params.hpp"
#include "fnls/quadrature.hpp"

namespace fnls {

/** Relative error in the resolvent representation of the Sobolev energy,
 *   s ||D^s u||_2^2 = int_0^inf lambda^s || grad u_lambda ||_2^2 dlambda,
 * with the right side assembled by the quadrature. Purely spectral.
 */
double plancherel_identity_check(const ComplexField& u, const PhysParams& params,
                                 const LambdaQuadrature& quad);

/** Relative L2 error between the resolvent-integral assembly of (-Lap)^s u
 * and the direct multiplier |k|^{2s} u. The lambda^{s-1} integrand is
 * integrated by parts once so it falls in the quadrature's smooth class:
 *   int_0^inf l^{s-1} a/(a+l) dl = (1/s) int_0^inf l^s a/(a+l)^2 dl.
 */
double balakrishnan_apply_check(const ComplexField& u, const PhysParams& params,
                                const LambdaQuadrature& quad);

/// M_phi = 2 Im int conj(u) grad u . grad phi dx (spectral gradient).
double virial_bracket(const ComplexField& u, const MorawetzWeight& weight);

/** Time derivative of M_phi predicted by the resolvent virial identity:
 * the lambda-quadrature of int (4 Hess phi : grad conj(u_l) grad u_l
 * - Lap^2 phi |u_l|^2) dx plus the local term
 * -+ 2(p-1)/(p+1) int Lap phi |u|^{p+1} (- focusing, + defocusing).
 * At s = 1 the resolvent family degenerates (c_s = 0) and the classical
 * direct form with u itself is used; quad may then be null.
 */
double virial_rhs(const ComplexField& u, const MorawetzWeight& weight, const PhysParams& params,
                  const LambdaQuadrature* quad);

/// int_{|x|<=R} |u|^2 dx (sharp indicator).
double mass_concentration(const ComplexField& u, double R);

/// (1/(t2-t1)) int_t1^t2 int_{|x|<=R/2} |u|^{p+1} dx dt, trapezoid over the
/// recorded series. R must be the radius the series recorded.
double morawetz_time_average(const TimeSeries& series, double R, double t1, double t2);

/// y(t) = ||u||_{Hdot^s} ||u||_2^{(s-s_c)/s_c} normalized by the same
/// combination of the ground state. Requires s_c > 0.
double coercivity_functional(const ComplexField& u, const GroundStateReport& report,
                             const PhysParams& params);

struct DecayScan {
    std::vector<double> radii;
    std::vector<double> values;  // |quantity(R)|
    double slope = 0.0;          // log-log least-squares slope
};

/** Evaluates |int_0^inf lambda^s dlambda int chi_R Lap(chi_R) |u_lambda|^2 dx|
 * at each radius and fits the log-log decay slope (expected <= about -2s).
 * The mean of u is removed first: the k = 0 atom of the torus would make the
 * improper integral diverge, while on free space the origin carries no mass.
 */
DecayScan commutator_decay_scan(const ComplexField& u, const PhysParams& params,
                                const LambdaQuadrature& quad, const std::vector<double>& radii);

struct DecayFit {
    double alpha = 0.0;  // fitted exponent in ||u(t)|| ~ t^-alpha
    std::vector<double> times;
    std::vector<double> norms;
};

/// Free evolution of u0 sampled at the given times; log-log fit of the
/// L^r norm decay. Times must be positive and increasing; r in (2, inf].
DecayFit dispersive_decay_fit(const ComplexField& u0, const PhysParams& params, double r,
                              const std::vector<double>& times);

/// Radial cutoff chi_R: 1 on |x| <= R/2, 0 on |x| >= R, C^3 smoothstep
/// blend between; and its Laplacian from the analytic radial derivatives.
std::vector<double> radial_cutoff(const Grid& g, double R);
std::vector<double> radial_cutoff_laplacian(const Grid& g, double R);

/// Least-squares slope of log(values) against log(xs).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& values);

}  // namespace fnls

#endif
