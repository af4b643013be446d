#include "fnls/ground_state.hpp"

#include <cmath>
#include <stdexcept>

#include "fnls/field_gen.hpp"

namespace fnls {

namespace {

double signed_power(double v, double p) {
    return v >= 0.0 ? std::pow(v, p) : -std::pow(-v, p);
}

// Average over the octahedral symmetry group (axis permutations and
// reflections); kills the asymmetric part of roundoff noise exactly and
// leaves radial data untouched.
void octahedral_symmetrize(ComplexField& u) {
    const Grid& g = u.grid;
    const int d = g.d, n = g.n;
    if (d == 1) {
        for (int j = 1; j < n / 2; ++j) {
            const auto avg = 0.5 * (u.values[j] + u.values[n - j]);
            u.values[j] = avg;
            u.values[n - j] = avg;
        }
        return;
    }
    auto mirror = [n](int j) { return j == 0 ? 0 : n - j; };
    if (d == 2) {
        for (int j0 = 0; j0 < n; ++j0)
            for (int j1 = 0; j1 <= j0; ++j1) {
                const int js[2] = {j0, j1};
                std::complex<double> sum = 0.0;
                int count = 0;
                int perm[2][2] = {{js[0], js[1]}, {js[1], js[0]}};
                for (auto& pr : perm)
                    for (int s0 = 0; s0 < 2; ++s0)
                        for (int s1 = 0; s1 < 2; ++s1) {
                            const int a = s0 ? mirror(pr[0]) : pr[0];
                            const int b = s1 ? mirror(pr[1]) : pr[1];
                            sum += u.values[static_cast<std::size_t>(a) * n + b];
                            ++count;
                        }
                const auto avg = sum / static_cast<double>(count);
                for (auto& pr : perm)
                    for (int s0 = 0; s0 < 2; ++s0)
                        for (int s1 = 0; s1 < 2; ++s1) {
                            const int a = s0 ? mirror(pr[0]) : pr[0];
                            const int b = s1 ? mirror(pr[1]) : pr[1];
                            u.values[static_cast<std::size_t>(a) * n + b] = avg;
                        }
            }
        return;
    }
    const std::size_t nn = static_cast<std::size_t>(n);
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int j0 = 0; j0 < n; ++j0)
        for (int j1 = 0; j1 <= j0; ++j1)
            for (int j2 = 0; j2 <= j1; ++j2) {
                const int js[3] = {j0, j1, j2};
                std::complex<double> sum = 0.0;
                int count = 0;
                for (auto& pm : perms)
                    for (int mask = 0; mask < 8; ++mask) {
                        const int a = (mask & 1) ? mirror(js[pm[0]]) : js[pm[0]];
                        const int b = (mask & 2) ? mirror(js[pm[1]]) : js[pm[1]];
                        const int c = (mask & 4) ? mirror(js[pm[2]]) : js[pm[2]];
                        sum += u.values[(static_cast<std::size_t>(a) * nn + b) * nn + c];
                        ++count;
                    }
                const auto avg = sum / static_cast<double>(count);
                for (auto& pm : perms)
                    for (int mask = 0; mask < 8; ++mask) {
                        const int a = (mask & 1) ? mirror(js[pm[0]]) : js[pm[0]];
                        const int b = (mask & 2) ? mirror(js[pm[1]]) : js[pm[1]];
                        const int c = (mask & 4) ? mirror(js[pm[2]]) : js[pm[2]];
                        u.values[(static_cast<std::size_t>(a) * nn + b) * nn + c] = avg;
                    }
            }
}

}  // namespace

std::string to_string(Classification c) {
    switch (c) {
        case Classification::scatter_candidate: return "scatter-candidate";
        case Classification::blowup_candidate: return "blowup-candidate";
        case Classification::above_threshold: return "above-threshold";
        case Classification::negative_energy_blowup: return "negative-energy-blowup";
    }
    return "unknown";
}

ComplexField default_ground_state_seed(const Grid& grid) {
    ComplexField u(grid, Space::physical);
    const auto& r2 = grid.r2();
    for (std::size_t i = 0; i < u.values.size(); ++i) u.values[i] = 2.0 * std::exp(-r2[i]);
    return u;
}

GroundStateReport petviashvili_solve(const PhysParams& params, const Grid& grid,
                                     const ComplexField& init, double tol, int max_iter) {
    PetviashviliOptions opts;
    opts.tol = tol;
    opts.max_iter = max_iter;
    return petviashvili_solve(params, grid, init, opts);
}

GroundStateReport petviashvili_solve(const PhysParams& params, const Grid& grid,
                                     const ComplexField& init,
                                     const PetviashviliOptions& opts) {
    if (!params.focusing())
        throw std::invalid_argument("ground states exist for the focusing sign only");
    if (!init.grid.compatible(grid)) throw std::invalid_argument("seed lives on a different grid");
    if (!all_finite(init)) throw std::invalid_argument("seed contains non-finite values");
    const bool radialize = opts.radialize < 0 ? grid.d >= 2 : opts.radialize > 0;

    const double p = params.p;
    const double gamma = p / (p - 1.0);
    const std::size_t total = grid.size();
    const double cell = grid.cell();
    const double vol = grid.volume();

    // spectral symbol |k|^{2s} + 1
    std::vector<double> symbol(total);
    const auto& k2 = grid.k2();
    for (std::size_t i = 0; i < total; ++i)
        symbol[i] = (k2[i] > 0.0 ? std::pow(k2[i], params.s) : 0.0) + 1.0;

    ComplexField q = to_physical(init);
    for (auto& v : q.values) v = std::complex<double>(v.real(), 0.0);

    GroundStateReport report;
    report.params = params;

    std::vector<std::complex<double>> work(total);
    double residual = 0.0;
    int iter = 0;
    bool converged = false;
    for (; iter < opts.max_iter; ++iter) {
        // physical-space ingredients
        double pot = 0.0;  // <Q^p, Q> = int Q^{p+1}
        for (std::size_t i = 0; i < total; ++i) {
            const double v = q.values[i].real();
            work[i] = signed_power(v, p);
            pot += work[i].real() * v;
        }
        pot *= cell;

        detail::fft_forward(grid, q.values.data());     // q now spectral
        detail::fft_forward(grid, work.data());         // what{Q^p}

        double quad = 0.0;  // <((-Lap)^s + 1) Q, Q>
        for (std::size_t i = 0; i < total; ++i) quad += symbol[i] * std::norm(q.values[i]);
        quad *= vol;

        if (!std::isfinite(quad) || !std::isfinite(pot))
            throw std::runtime_error("Petviashvili iteration produced non-finite values");
        if (std::abs(pot) < 1e-300 || quad < 1e-300)
            throw std::runtime_error("Petviashvili iterate collapsed to zero");

        double res2 = 0.0;  // ||(D^{2s}+1)Q - Q^p||_L2^2 for the current iterate
        for (std::size_t i = 0; i < total; ++i)
            res2 += std::norm(symbol[i] * q.values[i] - work[i]);
        residual = std::sqrt(vol * res2);

        if (residual <= opts.tol) {
            detail::fft_backward(grid, q.values.data());
            for (auto& v : q.values) v = std::complex<double>(v.real(), 0.0);
            converged = true;
            break;
        }

        const double stab = std::pow(quad / pot, gamma);
        for (std::size_t i = 0; i < total; ++i) q.values[i] = stab * work[i] / symbol[i];
        detail::fft_backward(grid, q.values.data());    // back to physical
        for (auto& v : q.values) v = std::complex<double>(v.real(), 0.0);
        if (radialize) octahedral_symmetrize(q);
    }
    if (!converged)
        throw std::runtime_error("Petviashvili did not reach tolerance within max_iter");

    q.space = Space::physical;
    report.q = q;
    report.iterations = iter + 1;
    report.residual = elliptic_residual(q, params);
    auto me = mass_energy(q, params);
    report.mass = me.first;
    report.energy = me.second;
    report.hs = sobolev_seminorm(q, params.s);
    report.lp1 = lebesgue_norm(q, p + 1.0);
    report.gn_const = gn_constant(report);

    const double half_l2 = 0.25 * grid.l * grid.l;
    const auto& r2 = grid.r2();
    double tail = 0.0;
    for (std::size_t i = 0; i < total; ++i)
        if (r2[i] > half_l2) tail += std::norm(q.values[i]);
    report.tail_mass = tail * cell;
    return report;
}

double elliptic_residual(const ComplexField& q, const PhysParams& params) {
    ComplexField phys = to_physical(q);
    ComplexField lin = fractional_power_apply(phys, 2.0 * params.s);
    const double cell = phys.grid.cell();
    double sum = 0.0;
    for (std::size_t i = 0; i < phys.values.size(); ++i) {
        const double v = phys.values[i].real();
        const double r = lin.values[i].real() + v - signed_power(v, params.p);
        sum += r * r + lin.values[i].imag() * lin.values[i].imag();
    }
    return std::sqrt(cell * sum);
}

double gn_constant(const GroundStateReport& report) {
    const PhysParams& pr = report.params;
    if (!(report.hs > 0.0) || !(report.mass > 0.0) || !(report.lp1 > 0.0))
        throw std::invalid_argument("gn_constant of a degenerate report");
    const double kin_exp = pr.d * (pr.p - 1.0) / (2.0 * pr.s);
    const double mass_exp = pr.p + 1.0 - kin_exp;
    return std::pow(report.lp1, pr.p + 1.0) /
           (std::pow(report.hs, kin_exp) * std::pow(std::sqrt(report.mass), mass_exp));
}

double pohozaev_soliton_check(const GroundStateReport& report) {
    const PhysParams& pr = report.params;
    if (!(pr.s_c > 0.0 && pr.s_c < pr.s))
        throw std::domain_error("soliton identity requires 0 < s_c < s");
    const double lhs = std::pow(report.hs, pr.s_c) * std::pow(std::sqrt(report.mass), pr.s - pr.s_c);
    const double base = (2.0 * pr.d + 4.0 * (pr.s - pr.s_c)) / (2.0 * pr.d * report.gn_const);
    const double rhs = std::pow(base, 0.25 * (pr.d - 2.0 * pr.s_c));
    return std::abs(lhs - rhs) / rhs;
}

ThresholdReport classify_initial_data(const ComplexField& u0, const GroundStateReport& report,
                                      const PhysParams& params) {
    PhysParams foc = params;
    foc.sign = Sign::focusing;  // thresholds are stated for the focusing energy
    const auto me = mass_energy(u0, foc);
    const double kin = sobolev_seminorm(u0, params.s);
    const double l2 = std::sqrt(me.first);

    const double sc = params.s_c, sm = params.s - params.s_c;
    ThresholdReport out;
    out.kinetic_ratio = std::pow(kin, sc) * std::pow(l2, sm) /
                        (std::pow(report.hs, sc) * std::pow(std::sqrt(report.mass), sm));

    if (me.second < 0.0) {
        out.energy_ratio = -1.0;
        out.classification = Classification::negative_energy_blowup;
        return out;
    }
    out.energy_ratio = std::pow(me.second, sc) * std::pow(me.first, sm) /
                       (std::pow(report.energy, sc) * std::pow(report.mass, sm));
    if (out.energy_ratio < 1.0 && out.kinetic_ratio < 1.0)
        out.classification = Classification::scatter_candidate;
    else if (out.energy_ratio < 1.0 && out.kinetic_ratio > 1.0)
        out.classification = Classification::blowup_candidate;
    else
        out.classification = Classification::above_threshold;
    return out;
}

}  // namespace fnls
