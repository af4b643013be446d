#ifndef FNLS_MORAWETZ_HPP
#define FNLS_MORAWETZ_HPP

#include <vector>

#include "fnls/grid.hpp"

namespace fnls {

/** Radial virial weight phi(x) = R^2 psi(|x|/R) with all derivative fields
 * precomputed from the closed-form radial expressions.
 *
 * psi'(r) = r below 1-delta and = 1 above 1+delta, joined by a monotone C^3
 * blend, so phi = |x|^2/2 in the core, grows linearly far out, and Hess phi
 * stays positive semidefinite everywhere (radial eigenvalue psi'', tangential
 * R psi'/|x|, both nonnegative).
 *
 * Hessian components are stored packed upper-triangular row-major:
 * d=3 order (00,01,02,11,12,22).
 */
struct MorawetzWeight {
    Grid grid;
    double R = 0.0;
    double delta = 0.0;

    std::vector<double> phi;
    std::vector<double> lap;     // Lap phi
    std::vector<double> bilap;   // Lap^2 phi
    std::vector<std::vector<double>> grad;  // d component fields
    std::vector<std::vector<double>> hess;  // d(d+1)/2 component fields

    /// Minimum Hessian eigenvalue over the grid (exact for d <= 3).
    double min_hessian_eigenvalue() const;

    /// sup |grad phi| + sup |Hess phi|_F + sup |D^3 phi|_F, evaluated on a
    /// fine radial sample at build time; a concrete stand-in for the
    /// W^{2,inf} size of grad phi.
    double grad_w2inf() const { return w2inf; }

    double w2inf = 0.0;
};

MorawetzWeight build_morawetz_weight(const Grid& g, double R, double delta_blend);

/// Convex weight sqrt(|x|^2 + eps^2); in d = 3 its bilaplacian is <= 0, which
/// makes the defocusing virial rate nonnegative term by term.
MorawetzWeight build_soft_radial_weight(const Grid& g, double eps);

}  // namespace fnls

#endif
