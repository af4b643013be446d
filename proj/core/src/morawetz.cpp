#include "fnls/morawetz.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace fnls {

namespace {

// Quintic smoothstep and its integrals/derivatives; C^2 at both ends.
double sstep(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }
double sstep_i(double t) { return t * t * t * t * (2.5 + t * (-3.0 + t)); }
double sstep_ii(double t) {
    return t * t * t * t * t * (0.5 + t * (-0.5 + t / 7.0));
}
double sstep_d(double t) { return 30.0 * t * t * (t - 1.0) * (t - 1.0); }
double sstep_dd(double t) { return 60.0 * t * (2.0 * t - 1.0) * (t - 1.0); }

// Radial profile psi and derivatives, blend on [1-delta, 1+delta].
struct Psi {
    double a, b, delta;

    explicit Psi(double d) : a(1.0 - d), b(1.0 + d), delta(d) {}

    double tau(double y) const { return (y - a) / (2.0 * delta); }

    double d1(double y) const {  // psi'
        if (y <= a) return y;
        if (y >= b) return 1.0;
        const double t = tau(y);
        return a + 2.0 * delta * (t - sstep_i(t));
    }
    double d2(double y) const {  // psi''
        if (y <= a) return 1.0;
        if (y >= b) return 0.0;
        return 1.0 - sstep(tau(y));
    }
    double d3(double y) const {
        if (y <= a || y >= b) return 0.0;
        return -sstep_d(tau(y)) / (2.0 * delta);
    }
    double d4(double y) const {
        if (y <= a || y >= b) return 0.0;
        return -sstep_dd(tau(y)) / (4.0 * delta * delta);
    }
    double value(double y) const {
        if (y <= a) return 0.5 * y * y;
        const double psib = 0.5 * a * a + 2.0 * delta * a + 4.0 * delta * delta * (0.5 - 1.0 / 7.0);
        if (y >= b) return psib + (y - b);
        const double t = tau(y);
        return 0.5 * a * a + 2.0 * delta * a * t +
               4.0 * delta * delta * (0.5 * t * t - sstep_ii(t));
    }
};

// sup_r of |g'|, |Hess|_F, |D^3|_F for a radial profile g(r); the third
// derivative tensor of a radial function is A n^3 + B (delta n)_sym with
// A = g''' - 3g''/r + 3g'/r^2, B = g''/r - g'/r^2 and
// |T|_F^2 = A^2 + 6AB + (3d+6)B^2.
template <class G1, class G2, class G3>
double radial_w2inf(int d, double rmax, G1&& g1, G2&& g2, G3&& g3) {
    const int samples = 20000;
    double sup_grad = 0.0, sup_hess = 0.0, sup_third = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double r = rmax * i / samples;
        const double d1 = g1(r), d2 = g2(r), d3 = g3(r);
        const double tang = d1 / r;
        const double hess2 = d2 * d2 + (d - 1) * tang * tang;
        const double A = d3 - 3.0 * d2 / r + 3.0 * d1 / (r * r);
        const double B = d2 / r - d1 / (r * r);
        const double third2 = A * A + 6.0 * A * B + (3.0 * d + 6.0) * B * B;
        sup_grad = std::max(sup_grad, std::abs(d1));
        sup_hess = std::max(sup_hess, std::sqrt(std::max(hess2, 0.0)));
        sup_third = std::max(sup_third, std::sqrt(std::max(third2, 0.0)));
    }
    return sup_grad + sup_hess + sup_third;
}

void allocate(MorawetzWeight& w) {
    const Grid& g = w.grid;
    const std::size_t total = g.size();
    w.phi.assign(total, 0.0);
    w.lap.assign(total, 0.0);
    w.bilap.assign(total, 0.0);
    w.grad.assign(g.d, std::vector<double>(total, 0.0));
    w.hess.assign(g.d * (g.d + 1) / 2, std::vector<double>(total, 0.0));
}

}  // namespace

MorawetzWeight build_morawetz_weight(const Grid& g, double R, double delta_blend) {
    if (!(R > 0.0) || R >= 0.5 * g.l)
        throw std::invalid_argument("Morawetz radius must satisfy 0 < R < l/2");
    if (!(delta_blend > 0.0) || delta_blend > 0.5)
        throw std::invalid_argument("blend width must lie in (0, 1/2]");

    MorawetzWeight w;
    w.grid = g;
    w.R = R;
    w.delta = delta_blend;
    allocate(w);

    const Psi psi(delta_blend);
    const int d = g.d;
    const auto& axis_x = g.axis_x();
    int idx[3];
    double x[3] = {0.0, 0.0, 0.0};

    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx);
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) {
            x[a] = axis_x[idx[a]];
            r2 += x[a] * x[a];
        }
        const double r = std::sqrt(r2);
        const double y = r / R;

        int h = 0;
        if (y <= psi.a) {  // pure quadratic core
            w.phi[i] = 0.5 * r2;
            w.lap[i] = d;
            w.bilap[i] = 0.0;
            for (int a = 0; a < d; ++a) w.grad[a][i] = x[a];
            for (int a = 0; a < d; ++a)
                for (int bx = a; bx < d; ++bx) w.hess[h++][i] = (a == bx) ? 1.0 : 0.0;
            continue;
        }
        const double p1 = psi.d1(y), p2 = psi.d2(y), p3 = psi.d3(y), p4 = psi.d4(y);
        w.phi[i] = R * R * psi.value(y);
        w.lap[i] = (d - 1) * R * p1 / r + p2;
        w.bilap[i] = (d - 1) * (d - 3) * p2 / r2 - R * (d - 1) * (d - 3) * p1 / (r2 * r) +
                     2.0 * (d - 1) * p3 / (R * r) + p4 / (R * R);
        for (int a = 0; a < d; ++a) w.grad[a][i] = R * p1 * x[a] / r;
        for (int a = 0; a < d; ++a)
            for (int bx = a; bx < d; ++bx) {
                const double nn = x[a] * x[bx] / r2;
                const double del = (a == bx) ? 1.0 : 0.0;
                w.hess[h++][i] = R * p1 * (del - nn) / r + p2 * nn;
            }
    }

    const double rmax = g.l * std::sqrt(static_cast<double>(d)) + 1.0;
    w.w2inf = radial_w2inf(
        d, rmax, [&](double r) { return R * psi.d1(r / R); },
        [&](double r) { return psi.d2(r / R); },
        [&](double r) { return psi.d3(r / R) / R; });
    return w;
}

MorawetzWeight build_soft_radial_weight(const Grid& g, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("soft weight needs eps > 0");

    MorawetzWeight w;
    w.grid = g;
    w.R = eps;
    w.delta = 0.0;
    allocate(w);

    const int d = g.d;
    const auto& axis_x = g.axis_x();
    int idx[3];
    double x[3] = {0.0, 0.0, 0.0};
    const double e2 = eps * eps;

    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx);
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) {
            x[a] = axis_x[idx[a]];
            r2 += x[a] * x[a];
        }
        const double rho = std::sqrt(r2 + e2);
        const double rho3 = rho * rho * rho;
        const double rho5 = rho3 * rho * rho;
        const double rho7 = rho5 * rho * rho;
        w.phi[i] = rho;
        w.lap[i] = (d - 1) / rho + e2 / rho3;
        w.bilap[i] = (d - 1) * (3 - d) / rho3 + 6.0 * (3 - d) * e2 / rho5 - 15.0 * e2 * e2 / rho7;
        for (int a = 0; a < d; ++a) w.grad[a][i] = x[a] / rho;
        int h = 0;
        for (int a = 0; a < d; ++a)
            for (int bx = a; bx < d; ++bx) {
                const double del = (a == bx) ? 1.0 : 0.0;
                w.hess[h++][i] = del / rho - x[a] * x[bx] / rho3;
            }
    }

    const double rmax = g.l * std::sqrt(static_cast<double>(d)) + 1.0;
    w.w2inf = radial_w2inf(
        d, rmax, [&](double r) { return r / std::sqrt(r * r + e2); },
        [&](double r) {
            const double rho = std::sqrt(r * r + e2);
            return e2 / (rho * rho * rho);
        },
        [&](double r) {
            const double rho = std::sqrt(r * r + e2);
            return -3.0 * e2 * r / std::pow(rho, 5);
        });
    return w;
}

double MorawetzWeight::min_hessian_eigenvalue() const {
    const int d = grid.d;
    double lo = std::numeric_limits<double>::infinity();
    const std::size_t total = grid.size();
    if (d == 1) {
        for (std::size_t i = 0; i < total; ++i) lo = std::min(lo, hess[0][i]);
        return lo;
    }
    if (d == 2) {
        for (std::size_t i = 0; i < total; ++i) {
            const double a = hess[0][i], b = hess[1][i], c = hess[2][i];
            const double tr = a + c;
            const double disc = std::sqrt(std::max((a - c) * (a - c) + 4.0 * b * b, 0.0));
            lo = std::min(lo, 0.5 * (tr - disc));
        }
        return lo;
    }
    Eigen::Matrix3d m;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver;
    for (std::size_t i = 0; i < total; ++i) {
        m << hess[0][i], hess[1][i], hess[2][i],
             hess[1][i], hess[3][i], hess[4][i],
             hess[2][i], hess[4][i], hess[5][i];
        solver.computeDirect(m, Eigen::EigenvaluesOnly);
        lo = std::min(lo, solver.eigenvalues()[0]);
    }
    return lo;
}

}  // namespace fnls
