// Test-only reference computations, kept independent of the library's
// transform path: direct frequency sums against analytic Fourier data and a
// radial ODE shooting solver for the classical d=3 cubic ground state.
#ifndef FNLS_TESTS_ORACLES_HPP
#define FNLS_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracles {

// exp(-x^2/2) has continuous transform sqrt(2 pi) exp(-xi^2/2). The grid
// discretization of D^sigma applied to it equals the rectangle-rule
// inversion below; the sum is evaluated directly (no FFT involved).
inline double gaussian_fractional_direct(double x, double sigma, double l, int n) {
    const double dxi = std::numbers::pi / l;
    double acc = 0.0;
    for (int m = -n / 2; m < n / 2; ++m) {
        const double xi = dxi * m;
        const double w = m == 0 ? (sigma == 0.0 ? 1.0 : 0.0) : std::pow(std::abs(xi), sigma);
        acc += w * std::exp(-0.5 * xi * xi) * std::cos(xi * x);
    }
    return acc * dxi / std::sqrt(2.0 * std::numbers::pi);
}

// Rectangle-rule value of (2 pi)^-1 int |xi|^{2 sigma} |uhat|^2 dxi for the
// same Gaussian, i.e. the square of its discrete Hdot^sigma seminorm.
inline double gaussian_seminorm_sq_direct(double sigma, double l, int n) {
    const double dxi = std::numbers::pi / l;
    double acc = 0.0;
    for (int m = -n / 2; m < n / 2; ++m) {
        if (m == 0 && sigma > 0.0) continue;
        const double xi = dxi * m;
        acc += std::pow(std::abs(xi), 2.0 * sigma) * std::exp(-xi * xi);
    }
    return acc * dxi;
}

// Radial shooting for Q'' + (2/r) Q' - Q + Q^3 = 0 on (0,inf), the d=3
// cubic ground state. RK4 in r with bisection on Q(0); too large an initial
// height makes Q cross zero, too small makes it turn back upward.
struct ShootingProfile {
    double q0 = 0.0;
    std::vector<double> r, q;
    double mass = 0.0;  // 4 pi int Q^2 r^2 dr, tail matched to c e^{-r}/r
};

inline ShootingProfile shoot_cubic_ground_state() {
    const double h = 5e-4, rmax = 14.0;
    auto rhs = [](double r, double q, double v) {
        const double vp = (r > 0.0) ? q - q * q * q - 2.0 * v / r : (q - q * q * q) / 3.0;
        return vp;
    };
    auto classify = [&](double a, std::vector<double>* rr, std::vector<double>* qq) {
        double r = 0.0, q = a, v = 0.0;
        while (r < rmax) {
            // classic RK4 on (q, v)
            const double k1q = v, k1v = rhs(r, q, v);
            const double k2q = v + 0.5 * h * k1v, k2v = rhs(r + 0.5 * h, q + 0.5 * h * k1q, v + 0.5 * h * k1v);
            const double k3q = v + 0.5 * h * k2v, k3v = rhs(r + 0.5 * h, q + 0.5 * h * k2q, v + 0.5 * h * k2v);
            const double k4q = v + h * k3v, k4v = rhs(r + h, q + h * k3q, v + h * k3v);
            q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
            v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            r += h;
            if (rr) {
                rr->push_back(r);
                qq->push_back(q);
            }
            if (q < 0.0) return -1;          // overshoot: initial height too large
            if (v > 0.0 && q < 1.0) return +1;  // turned back: too small
        }
        return 0;
    };

    double lo = 1.0, hi = 10.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const int c = classify(mid, nullptr, nullptr);
        if (c < 0)
            hi = mid;
        else
            lo = mid;
    }
    ShootingProfile prof;
    prof.q0 = 0.5 * (lo + hi);
    classify(prof.q0, &prof.r, &prof.q);

    // integrate mass out to the matching radius, then add the e^{-r}/r tail
    const double rmatch = 9.0;
    double mass = 0.0;
    double prev = 0.0, prev_r = 0.0;
    double cmatch = 0.0;
    for (std::size_t i = 0; i < prof.r.size(); ++i) {
        const double r = prof.r[i], q = std::abs(prof.q[i]);
        const double f = q * q * r * r;
        if (r <= rmatch) {
            mass += 0.5 * (prev + f) * (r - prev_r);
            cmatch = q * r * std::exp(r);
        }
        prev = f;
        prev_r = r;
    }
    mass += cmatch * cmatch * 0.5 * std::exp(-2.0 * rmatch);
    prof.mass = 4.0 * std::numbers::pi * mass;
    return prof;
}

}  // namespace oracles

#endif
