#ifndef FNLS_GROUND_STATE_HPP
#define FNLS_GROUND_STATE_HPP

#include <string>

#include "fnls/field.hpp"
#include "fnls/params.hpp"
#include "fnls/spectral.hpp"

namespace fnls {

/** Converged ground state Q of (-Lap)^s Q + Q - Q^p = 0 with its variational
 * scalars. hs is ||Q||_{Hdot^s} (not squared); gn_const the sharp
 * Gagliardo-Nirenberg constant realized by Q; tail_mass the truncation
 * metric int_{|x|>l/2} |Q|^2.
 */
struct GroundStateReport {
    ComplexField q;
    PhysParams params;
    double mass = 0.0;
    double hs = 0.0;
    double lp1 = 0.0;
    double energy = 0.0;
    double gn_const = 0.0;
    double residual = 0.0;
    double tail_mass = 0.0;
    int iterations = 0;
};

enum class Classification {
    scatter_candidate,
    blowup_candidate,
    above_threshold,
    negative_energy_blowup,
};

std::string to_string(Classification c);

struct ThresholdReport {
    double energy_ratio = 0.0;
    double kinetic_ratio = 0.0;
    Classification classification = Classification::above_threshold;
};

struct PetviashviliOptions {
    double tol = 1e-10;
    int max_iter = 2000;
    /// Octahedral symmetrization each iteration; defaults on for d >= 2.
    int radialize = -1;  // -1 auto, 0 off, 1 on
};

/** Stabilized fixed-point iteration
 *    Q_{n+1} = S_n^gamma ((-Lap)^s + 1)^{-1}(Q_n^p),
 *    S_n = <((-Lap)^s + 1) Q_n, Q_n> / <Q_n^p, Q_n>,  gamma = p/(p-1),
 * stopping when the L2 residual of the elliptic equation is <= tol.
 * Throws on defocusing params, non-convergence, collapse or NaN.
 */
GroundStateReport petviashvili_solve(const PhysParams& params, const Grid& grid,
                                     const ComplexField& init, double tol, int max_iter);
GroundStateReport petviashvili_solve(const PhysParams& params, const Grid& grid,
                                     const ComplexField& init,
                                     const PetviashviliOptions& opts = {});

/// Default initial guess: Gaussian exp(-|x|^2), amplitude 2.
ComplexField default_ground_state_seed(const Grid& grid);

/// ||(-Lap)^s q + q - q^p||_L2 (sign-preserving power for stray negatives).
double elliptic_residual(const ComplexField& q, const PhysParams& params);

/// C(d,p,s) = ||Q||_{p+1}^{p+1} / (||Q||_{Hdot^s}^{d(p-1)/(2s)} ||Q||_2^{p+1-d(p-1)/(2s)}).
double gn_constant(const GroundStateReport& report);

/** Relative discrepancy between ||Q||_{Hdot^s}^{s_c} ||Q||_2^{s-s_c} and the
 * closed form ((2d + 4(s-s_c)) / (2d C(d,p,s)))^{(d-2s_c)/4}. Requires the
 * intercritical window 0 < s_c < s.
 */
double pohozaev_soliton_check(const GroundStateReport& report);

/// Theorem-threshold ratios of u0 against the ground state.
ThresholdReport classify_initial_data(const ComplexField& u0, const GroundStateReport& report,
                                      const PhysParams& params);

}  // namespace fnls

#endif
