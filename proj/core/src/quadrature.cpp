#include "fnls/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fnls {

namespace {

// Gauss-Jacobi rule on (-1,1) for weight (1-x)^alpha (1+x)^beta via
// Golub-Welsch on the symmetric tridiagonal recurrence matrix.
void gauss_jacobi(int count, double alpha, double beta,
                  std::vector<double>& x, std::vector<double>& w) {
    Eigen::VectorXd diag(count), sub(count - 1);
    const double apb = alpha + beta;
    diag[0] = (beta - alpha) / (apb + 2.0);
    for (int k = 1; k < count; ++k) {
        const double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
        diag[k] = (beta * beta - alpha * alpha) / den;
        const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + apb);
        const double d2 = (2.0 * k + apb) * (2.0 * k + apb);
        sub[k - 1] = std::sqrt(num / (d2 * (2.0 * k + apb + 1.0) * (2.0 * k + apb - 1.0)));
    }
    const double mu0 = std::pow(2.0, apb + 1.0) * std::tgamma(alpha + 1.0) *
                       std::tgamma(beta + 1.0) / std::tgamma(apb + 2.0);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Gauss-Jacobi eigenvalue solve failed");

    x.resize(count);
    w.resize(count);
    for (int i = 0; i < count; ++i) {
        x[i] = solver.eigenvalues()[i];
        const double v0 = solver.eigenvectors()(0, i);
        w[i] = mu0 * v0 * v0;
    }
}

}  // namespace

LambdaQuadrature build_lambda_quadrature(double s, int count, double lambda0) {
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("lambda quadrature requires s in (0,1)");
    if (count < 8) throw std::invalid_argument("lambda quadrature needs count >= 8");
    if (!(lambda0 > 0.0)) throw std::invalid_argument("lambda0 must be positive");

    std::vector<double> x, v;
    gauss_jacobi(count, -s, s, x, v);

    LambdaQuadrature quad;
    quad.s = s;
    quad.lambda0 = lambda0;
    quad.nodes.resize(count);
    quad.weights.resize(count);
    quad.weighted.resize(count);
    for (int i = 0; i < count; ++i) {
        const double t = 0.5 * (1.0 + x[i]);
        const double omt = 0.5 * (1.0 - x[i]);
        const double vt = 0.5 * v[i];  // Jacobi weight mapped to (0,1)
        const double lam = lambda0 * t / omt;
        quad.nodes[i] = lam;
        // weighted = lambda0^(s+1) vt (1-t)^-2 is the measure applied to g;
        // the plain weight divides the lambda^s factor back out.
        quad.weighted[i] = std::pow(lambda0, s + 1.0) * vt / (omt * omt);
        quad.weights[i] = quad.weighted[i] / std::pow(lam, s);
    }
    // nodes come out sorted ascending in t, hence in lambda
    return quad;
}

double default_lambda0(const Grid& g) {
    const double med = g.k2_median();
    return med > 0.0 ? med : 1.0;
}

}  // namespace fnls
