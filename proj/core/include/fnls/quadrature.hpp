#ifndef FNLS_QUADRATURE_HPP
#define FNLS_QUADRATURE_HPP

#include <vector>

#include "fnls/grid.hpp"

namespace fnls {

/** Quadrature for improper integrals int_0^inf lambda^s g(lambda) dlambda
 * with g smooth on [0,inf) and decaying like lambda^-2 (resolvent-squared
 * kernels). Nodes and plain-dlambda weights; apply() supplies the lambda^s
 * factor itself, so callers evaluate bare g at the nodes.
 */
struct LambdaQuadrature {
    double s = 0.0;
    double lambda0 = 1.0;  // reference scale of the rational substitution
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> weighted;  // weights[i] * nodes[i]^s, the applied measure

    int count() const { return static_cast<int>(nodes.size()); }

    template <class G>
    double apply(G&& g) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) sum += weighted[i] * g(nodes[i]);
        return sum;
    }
};

/** Builds the rule: lambda = lambda0 t/(1-t) maps (0,1) to (0,inf) and turns
 * the integral into a Gauss-Jacobi problem with weight t^s (1-t)^-s; the
 * remaining factor is smooth whenever lambda^2 g(lambda) has a limit at
 * infinity. Requires s in (0,1), count >= 8, lambda0 > 0.
 */
LambdaQuadrature build_lambda_quadrature(double s, int count, double lambda0);

/// Default reference scale: median of |k|^2 over the grid modes.
double default_lambda0(const Grid& g);

}  // namespace fnls

#endif
