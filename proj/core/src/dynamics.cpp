#include "fnls/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "fnls/diagnostics.hpp"

namespace fnls {

namespace {

void linear_phase_table(const Grid& g, double s, double t, std::vector<std::complex<double>>& out) {
    const auto& k2 = g.k2();
    out.resize(k2.size());
    for (std::size_t i = 0; i < k2.size(); ++i) {
        const double w = k2[i] > 0.0 ? std::pow(k2[i], s) : 0.0;
        out[i] = std::polar(1.0, -t * w);
    }
}

void nonlinear_phase_in_place(ComplexField& u, double dt, const PhysParams& params) {
    const double expo = 0.5 * (params.p - 1.0);
    const double sgn = params.focusing() ? 1.0 : -1.0;
    for (auto& v : u.values) {
        const double amp = std::pow(std::norm(v), expo);  // |u|^{p-1}
        v *= std::polar(1.0, sgn * dt * amp);
    }
}

}  // namespace

ComplexField linear_propagate(const ComplexField& u, double t, const PhysParams& params) {
    ComplexField out = to_spectral(u);
    std::vector<std::complex<double>> phase;
    linear_phase_table(out.grid, params.s, t, phase);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= phase[i];
    transform_in_place(out, u.space);
    return out;
}

ComplexField nonlinear_phase_step(const ComplexField& u, double dt, const PhysParams& params) {
    ComplexField out = to_physical(u);
    nonlinear_phase_in_place(out, dt, params);
    transform_in_place(out, u.space);
    return out;
}

ComplexField strang_step(const ComplexField& u, double dt, const PhysParams& params) {
    ComplexField out = to_physical(u);
    nonlinear_phase_in_place(out, 0.5 * dt, params);
    detail::fft_forward(out.grid, out.values.data());
    std::vector<std::complex<double>> phase;
    linear_phase_table(out.grid, params.s, dt, phase);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= phase[i];
    detail::fft_backward(out.grid, out.values.data());
    nonlinear_phase_in_place(out, 0.5 * dt, params);
    if (!all_finite(out)) throw std::runtime_error("strang_step produced non-finite values");
    transform_in_place(out, u.space);
    return out;
}

double wrap_time(const Grid& g, const PhysParams& params) {
    const double kmax = g.kmax();
    const double speed = 2.0 * params.s * std::pow(kmax, 2.0 * params.s - 1.0);
    return 2.0 * g.l / speed;
}

double spectral_tail_fraction(const ComplexField& u, double s) {
    ComplexField hat = to_spectral(u);
    const auto& k2 = hat.grid.k2();
    const double cut2 = std::pow(2.0 / 3.0 * hat.grid.kmax(), 2);
    double tail = 0.0, total = 0.0;
    for (std::size_t i = 0; i < hat.values.size(); ++i) {
        const double w = (k2[i] > 0.0 ? std::pow(k2[i], s) : 0.0) * std::norm(hat.values[i]);
        total += w;
        if (k2[i] >= cut2) tail += w;
    }
    return total > 0.0 ? tail / total : 0.0;
}

double wave_operator_residual(const ComplexField& u_at_t1, const ComplexField& u_at_t2,
                              double t1, double t2, const PhysParams& params) {
    if (!(t2 > t1) || t1 < 0.0)
        throw std::invalid_argument("wave_operator_residual needs t2 > t1 >= 0");
    ComplexField a = linear_propagate(u_at_t1, -t1, params);
    ComplexField b = linear_propagate(u_at_t2, -t2, params);
    transform_in_place(a, Space::spectral);
    transform_in_place(b, Space::spectral);
    for (std::size_t i = 0; i < a.values.size(); ++i) b.values[i] -= a.values[i];
    return hs_norm(b, params.s);
}

TimeSeries evolve(const ComplexField& u0, const EvolveConfig& config, const PhysParams& params,
                  const DiagnosticsSetup& diag) {
    if (!(config.dt > 0.0) || !(config.t_end > 0.0))
        throw std::invalid_argument("evolve needs dt > 0 and t_end > 0");
    if (config.callback_stride < 1) throw std::invalid_argument("callback_stride must be >= 1");
    if (!(config.blowup_hs_factor > 1.0))
        throw std::invalid_argument("blowup_hs_factor must exceed 1");
    if (!(config.tail_fraction_max > 0.0 && config.tail_fraction_max < 1.0))
        throw std::invalid_argument("tail_fraction_max must lie in (0,1)");
    if (diag.record_virial_rhs && !diag.weight)
        throw std::invalid_argument("virial recording needs a Morawetz weight");
    if (diag.record_virial_rhs && params.s < 1.0 && !diag.quad)
        throw std::invalid_argument("virial recording at s < 1 needs a lambda quadrature");

    const Grid& g = u0.grid;
    TimeSeries out;
    out.radii = diag.conc_radii;
    out.concentration.assign(diag.conc_radii.size(), {});
    out.t_wrap = wrap_time(g, params);
    out.morawetz_radius = diag.local_radius;
    out.p = params.p;

    const long nsteps = static_cast<long>(std::ceil(config.t_end / config.dt - 1e-12));

    ComplexField u = to_physical(u0);
    ComplexField prev_profile;  // interaction picture at the previous record
    double hs0 = -1.0;

    std::vector<std::complex<double>> phase_full;
    linear_phase_table(g, params.s, config.dt, phase_full);
    const double cell = g.cell();
    const auto& r2tab = g.r2();

    auto record = [&](double t) {
        if (!all_finite(u)) throw std::runtime_error("evolution produced non-finite values");
        const auto me = mass_energy(u, params);
        const double hs = sobolev_seminorm(u, params.s);
        out.t.push_back(t);
        out.mass.push_back(me.first);
        out.energy.push_back(me.second);
        out.hs_norm.push_back(hs);
        for (std::size_t r = 0; r < diag.conc_radii.size(); ++r)
            out.concentration[r].push_back(mass_concentration(u, diag.conc_radii[r]));

        double mphi = 0.0, vr = 0.0;
        if (diag.weight) {
            mphi = virial_bracket(u, *diag.weight);
            if (diag.record_virial_rhs)
                vr = virial_rhs(u, *diag.weight, params,
                                diag.quad ? &*diag.quad : nullptr);
        }
        out.m_phi.push_back(mphi);
        out.virial_rhs.push_back(vr);

        out.y.push_back(diag.ground_state
                            ? coercivity_functional(u, *diag.ground_state, params)
                            : 0.0);

        double lp = 0.0;
        if (diag.local_radius > 0.0) {
            const double rr = 0.25 * diag.local_radius * diag.local_radius;  // (R/2)^2
            const double pp1 = 0.5 * (params.p + 1.0);
            for (std::size_t i = 0; i < u.values.size(); ++i)
                if (r2tab[i] <= rr) lp += std::pow(std::norm(u.values[i]), pp1);
            lp *= cell;
        }
        out.local_lp1.push_back(lp);

        ComplexField profile = linear_propagate(u, -t, params);
        double cauchy = 0.0;
        if (!prev_profile.values.empty()) {
            ComplexField dfield = to_spectral(profile);
            ComplexField pfield = to_spectral(prev_profile);
            for (std::size_t i = 0; i < dfield.values.size(); ++i)
                dfield.values[i] -= pfield.values[i];
            cauchy = hs_norm(dfield, params.s);
        }
        out.scatter_residual.push_back(cauchy);
        prev_profile = std::move(profile);

        if (diag.on_record) diag.on_record(t, u);

        if (hs0 < 0.0) hs0 = hs;
        const bool growth = hs > config.blowup_hs_factor * hs0;
        const bool tail = spectral_tail_fraction(u, params.s) > config.tail_fraction_max;
        return growth || tail;
    };

    if (record(0.0)) {
        out.status = EvolveStatus::blow_up_detected;
        return out;
    }

    for (long step = 1; step <= nsteps; ++step) {
        nonlinear_phase_in_place(u, 0.5 * config.dt, params);
        detail::fft_forward(g, u.values.data());
        for (std::size_t i = 0; i < u.values.size(); ++i) u.values[i] *= phase_full[i];
        detail::fft_backward(g, u.values.data());
        nonlinear_phase_in_place(u, 0.5 * config.dt, params);

        const bool at_record = step % config.callback_stride == 0 || step == nsteps;
        if (at_record && record(step * config.dt)) {
            out.status = EvolveStatus::blow_up_detected;
            return out;
        }
    }
    out.status = EvolveStatus::completed;
    return out;
}

}  // namespace fnls
