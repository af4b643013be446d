#include "fnls/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fnls {

namespace {

// Degree-7 smoothstep (C^3 at both ends) and derivatives.
double s7(double t) { return t * t * t * t * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t))); }
double s7_d(double t) {
    const double omt = 1.0 - t;
    return 140.0 * t * t * t * omt * omt * omt;
}
double s7_dd(double t) {
    const double omt = 1.0 - t;
    return 420.0 * t * t * omt * omt * (1.0 - 2.0 * t);
}

double safe_rel(double err, double ref) { return ref > 0.0 ? err / ref : err; }

void require_matching_order(const LambdaQuadrature& quad, const PhysParams& params) {
    if (std::abs(quad.s - params.s) > 1e-12)
        throw std::invalid_argument("lambda quadrature was built for a different s");
}

}  // namespace

double plancherel_identity_check(const ComplexField& u, const PhysParams& params,
                                 const LambdaQuadrature& quad) {
    if (!(params.s < 1.0))
        throw std::invalid_argument("resolvent identity check requires s < 1");
    require_matching_order(quad, params);
    ComplexField hat = to_spectral(u);
    const auto& k2 = hat.grid.k2();
    const double vol = hat.grid.volume();
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < hat.values.size(); ++i) {
        const double a = k2[i];
        if (a <= 0.0) continue;
        const double w2 = std::norm(hat.values[i]);
        if (w2 == 0.0) continue;
        lhs += std::pow(a, params.s) * w2;
        rhs += a * w2 * quad.apply([a](double lam) {
            const double den = a + lam;
            return 1.0 / (den * den);
        });
    }
    lhs *= params.s * vol;
    rhs *= params.c_s * vol;
    return safe_rel(std::abs(lhs - rhs), std::abs(lhs));
}

double balakrishnan_apply_check(const ComplexField& u, const PhysParams& params,
                                const LambdaQuadrature& quad) {
    if (!(params.s < 1.0))
        throw std::invalid_argument("resolvent identity check requires s < 1");
    require_matching_order(quad, params);
    ComplexField hat = to_spectral(u);
    const auto& k2 = hat.grid.k2();
    double err2 = 0.0, ref2 = 0.0;
    const double cs_over_s = params.c_s / params.s;
    for (std::size_t i = 0; i < hat.values.size(); ++i) {
        const double a = k2[i];
        const double w2 = std::norm(hat.values[i]);
        if (a <= 0.0 || w2 == 0.0) continue;
        const double direct = std::pow(a, params.s);
        const double assembled = cs_over_s * a * quad.apply([a](double lam) {
            const double den = a + lam;
            return 1.0 / (den * den);
        });
        err2 += (assembled - direct) * (assembled - direct) * w2;
        ref2 += direct * direct * w2;
    }
    return safe_rel(std::sqrt(err2), std::sqrt(ref2));
}

double virial_bracket(const ComplexField& u, const MorawetzWeight& weight) {
    if (!u.grid.compatible(weight.grid))
        throw std::invalid_argument("weight built on a different grid");
    ComplexField phys = to_physical(u);
    const double cell = phys.grid.cell();
    double sum = 0.0;
    for (int a = 0; a < phys.grid.d; ++a) {
        ComplexField du = gradient_component(phys, a);
        const auto& ga = weight.grad[a];
        for (std::size_t i = 0; i < phys.values.size(); ++i)
            sum += std::imag(std::conj(phys.values[i]) * du.values[i]) * ga[i];
    }
    return 2.0 * sum * cell;
}

double virial_rhs(const ComplexField& u, const MorawetzWeight& weight, const PhysParams& params,
                  const LambdaQuadrature* quad) {
    if (!u.grid.compatible(weight.grid))
        throw std::invalid_argument("weight built on a different grid");
    const Grid& g = u.grid;
    const int d = g.d;
    const double cell = g.cell();
    const std::size_t total = g.size();

    ComplexField phys = to_physical(u);

    // local potential term: -+ 2(p-1)/(p+1) int Lap(phi) |u|^{p+1}
    const double pp1 = params.p + 1.0;
    double pot = 0.0;
    for (std::size_t i = 0; i < total; ++i)
        pot += weight.lap[i] * std::pow(std::norm(phys.values[i]), 0.5 * pp1);
    pot *= cell * 2.0 * (params.p - 1.0) / pp1;
    const double nonlinear = params.focusing() ? -pot : pot;

    auto hess_quadratic = [&](const std::vector<ComplexField>& du,
                              const std::vector<std::complex<double>>& v) {
        // 4 sum_jk phi_jk Re(d_j conj(w) d_k w) - Lap^2 phi |w|^2
        double acc = 0.0;
        int h = 0;
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                const auto& hab = weight.hess[h++];
                const double factor = (a == b) ? 4.0 : 8.0;
                double s = 0.0;
                for (std::size_t i = 0; i < total; ++i)
                    s += hab[i] * std::real(std::conj(du[a].values[i]) * du[b].values[i]);
                acc += factor * s;
            }
        double s = 0.0;
        for (std::size_t i = 0; i < total; ++i) s += weight.bilap[i] * std::norm(v[i]);
        return (acc - s) * cell;
    };

    if (params.s >= 1.0) {
        std::vector<ComplexField> du;
        du.reserve(d);
        for (int a = 0; a < d; ++a) du.push_back(gradient_component(phys, a));
        return hess_quadratic(du, phys.values) + nonlinear;
    }

    if (!quad) throw std::invalid_argument("virial_rhs at s < 1 needs a lambda quadrature");
    require_matching_order(*quad, params);

    // The k = 0 mode is removed before smoothing: on the torus it is an atom
    // whose lambda integral diverges, and it carries no free-space content.
    ComplexField hat = to_spectral(phys);
    hat.values[0] = {0.0, 0.0};
    const auto& k2 = g.k2();
    const auto& axis_k = g.axis_k();
    const double root_cs = std::sqrt(params.c_s);

    std::vector<ComplexField> du(d, ComplexField(g, Space::physical));
    ComplexField ul(g, Space::physical);
    std::vector<std::size_t> stride(d);
    for (int a = 0; a < d; ++a) {
        std::size_t s = 1;
        for (int b = d - 1; b > a; --b) s *= static_cast<std::size_t>(g.n);
        stride[a] = s;
    }

    double quad_sum = 0.0;
    for (int qi = 0; qi < quad->count(); ++qi) {
        const double lam = quad->nodes[qi];
        for (std::size_t i = 0; i < total; ++i)
            ul.values[i] = hat.values[i] * (root_cs / (k2[i] + lam));
        for (int a = 0; a < d; ++a) {
            for (std::size_t i = 0; i < total; ++i) {
                const int j = static_cast<int>((i / stride[a]) % static_cast<std::size_t>(g.n));
                du[a].values[i] = ul.values[i] * std::complex<double>(0.0, axis_k[j]);
            }
            detail::fft_backward(g, du[a].values.data());
        }
        detail::fft_backward(g, ul.values.data());
        quad_sum += quad->weighted[qi] * hess_quadratic(du, ul.values);
    }
    return quad_sum + nonlinear;
}

double mass_concentration(const ComplexField& u, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("concentration radius must be positive");
    ComplexField phys = to_physical(u);
    const auto& r2 = phys.grid.r2();
    const double R2 = R * R;
    double sum = 0.0;
    for (std::size_t i = 0; i < phys.values.size(); ++i)
        if (r2[i] <= R2) sum += std::norm(phys.values[i]);
    return sum * phys.grid.cell();
}

double morawetz_time_average(const TimeSeries& series, double R, double t1, double t2) {
    if (series.records() < 2) throw std::invalid_argument("series too short");
    if (!(series.morawetz_radius > 0.0) ||
        std::abs(series.morawetz_radius - R) > 1e-12 * std::max(1.0, R))
        throw std::invalid_argument("series did not record the local potential at this radius");
    if (!(t2 > t1) || t1 < series.t.front() - 1e-12 || t2 > series.t.back() + 1e-12)
        throw std::invalid_argument("window outside the recorded series");

    const auto& ts = series.t;
    const auto& f = series.local_lp1;
    auto value_at = [&](double tq) {
        auto it = std::lower_bound(ts.begin(), ts.end(), tq);
        std::size_t hi = std::min<std::size_t>(it - ts.begin(), ts.size() - 1);
        if (hi == 0) return f[0];
        const std::size_t lo = hi - 1;
        const double w = (tq - ts[lo]) / (ts[hi] - ts[lo]);
        return (1.0 - w) * f[lo] + w * f[hi];
    };

    double integral = 0.0;
    double t_prev = t1, f_prev = value_at(t1);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] <= t1 || ts[i] >= t2) continue;
        integral += 0.5 * (f_prev + f[i]) * (ts[i] - t_prev);
        t_prev = ts[i];
        f_prev = f[i];
    }
    integral += 0.5 * (f_prev + value_at(t2)) * (t2 - t_prev);
    return integral / (t2 - t1);
}

double coercivity_functional(const ComplexField& u, const GroundStateReport& report,
                             const PhysParams& params) {
    if (!(params.s_c > 0.0)) throw std::domain_error("coercivity functional requires s_c > 0");
    const double expo = (params.s - params.s_c) / params.s_c;
    const double num = sobolev_seminorm(u, params.s) * std::pow(sobolev_seminorm(u, 0.0), expo);
    const double den = report.hs * std::pow(std::sqrt(report.mass), expo);
    return num / den;
}

std::vector<double> radial_cutoff(const Grid& g, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("cutoff radius must be positive");
    std::vector<double> chi(g.size());
    const auto& r2 = g.r2();
    const double half = 0.5 * R;
    for (std::size_t i = 0; i < chi.size(); ++i) {
        const double r = std::sqrt(r2[i]);
        if (r <= half)
            chi[i] = 1.0;
        else if (r >= R)
            chi[i] = 0.0;
        else
            chi[i] = 1.0 - s7((r - half) / half);
    }
    return chi;
}

std::vector<double> radial_cutoff_laplacian(const Grid& g, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("cutoff radius must be positive");
    std::vector<double> lap(g.size(), 0.0);
    const auto& r2 = g.r2();
    const double half = 0.5 * R;
    for (std::size_t i = 0; i < lap.size(); ++i) {
        const double r = std::sqrt(r2[i]);
        if (r <= half || r >= R) continue;
        const double tau = (r - half) / half;
        const double c1 = -s7_d(tau) / half;
        const double c2 = -s7_dd(tau) / (half * half);
        lap[i] = c2 + (g.d - 1) * c1 / r;
    }
    return lap;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& values) {
    if (xs.size() != values.size() || xs.size() < 2)
        throw std::invalid_argument("need at least two points for a log-log fit");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(values[i] > 0.0))
            throw std::invalid_argument("log-log fit needs positive data");
        const double lx = std::log(xs[i]), ly = std::log(values[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DecayScan commutator_decay_scan(const ComplexField& u, const PhysParams& params,
                                const LambdaQuadrature& quad, const std::vector<double>& radii) {
    if (radii.size() < 3) throw std::invalid_argument("decay scan needs at least 3 radii");
    require_matching_order(quad, params);
    const Grid& g = u.grid;
    for (double R : radii)
        if (!(R > 0.0) || R > g.l) throw std::invalid_argument("scan radius outside the box");

    ComplexField hat = to_spectral(u);
    hat.values[0] = {0.0, 0.0};  // see header: torus zero mode excluded
    const auto& k2 = g.k2();
    const double root_cs = std::sqrt(params.c_s);
    const std::size_t total = g.size();

    std::vector<std::vector<double>> windows;  // chi_R * Lap(chi_R) per radius
    windows.reserve(radii.size());
    for (double R : radii) {
        auto chi = radial_cutoff(g, R);
        auto lap = radial_cutoff_laplacian(g, R);
        for (std::size_t i = 0; i < total; ++i) chi[i] *= lap[i];
        windows.push_back(std::move(chi));
    }

    DecayScan scan;
    scan.radii = radii;
    scan.values.assign(radii.size(), 0.0);
    ComplexField ul(g, Space::physical);
    for (int qi = 0; qi < quad.count(); ++qi) {
        const double lam = quad.nodes[qi];
        for (std::size_t i = 0; i < total; ++i)
            ul.values[i] = hat.values[i] * (root_cs / (k2[i] + lam));
        detail::fft_backward(g, ul.values.data());
        for (std::size_t r = 0; r < radii.size(); ++r) {
            double s = 0.0;
            for (std::size_t i = 0; i < total; ++i)
                s += windows[r][i] * std::norm(ul.values[i]);
            scan.values[r] += quad.weighted[qi] * s;
        }
    }
    const double cell = g.cell();
    for (auto& v : scan.values) v = std::abs(v) * cell;
    scan.slope = loglog_slope(scan.radii, scan.values);
    return scan;
}

DecayFit dispersive_decay_fit(const ComplexField& u0, const PhysParams& params, double r,
                              const std::vector<double>& times) {
    if (times.size() < 2) throw std::invalid_argument("decay fit window too short");
    if (!(r >= 2.0)) throw std::invalid_argument("decay fit expects r in [2, inf]");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0)) throw std::invalid_argument("decay fit times must be positive");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::invalid_argument("decay fit times must increase");
    }
    DecayFit fit;
    fit.times = times;
    ComplexField hat = to_spectral(u0);
    for (double t : times) {
        ComplexField ut = linear_propagate(hat, t, params);
        fit.norms.push_back(lebesgue_norm(ut, r));
    }
    fit.alpha = -loglog_slope(fit.times, fit.norms);
    return fit;
}

}  // namespace fnls
