#ifndef FNLS_DYNAMICS_HPP
#define FNLS_DYNAMICS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fnls/field.hpp"
#include "fnls/ground_state.hpp"
#include "fnls/morawetz.hpp"
#include "fnls/params.hpp"
#include "fnls/quadrature.hpp"

namespace fnls {

struct EvolveConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    int callback_stride = 10;          // steps between diagnostic records
    double blowup_hs_factor = 10.0;    // Hdot^s growth abort threshold
    double tail_fraction_max = 0.01;   // spectral-tail abort threshold
};

enum class EvolveStatus { completed, blow_up_detected };

/** Per-record time series of the evolution diagnostics. Arrays share length;
 * disabled diagnostics record 0. concentration[r][i] is the mass within
 * radii[r] at record i; local_lp1 is int_{|x|<=R/2} |u|^{p+1} at the
 * Morawetz radius; scatter_residual the H^s Cauchy increment of the
 * interaction-picture profile between consecutive records.
 */
struct TimeSeries {
    std::vector<double> t, mass, energy, hs_norm;
    std::vector<double> radii;
    std::vector<std::vector<double>> concentration;
    std::vector<double> m_phi, virial_rhs, y, scatter_residual, local_lp1;
    EvolveStatus status = EvolveStatus::completed;
    double t_wrap = 0.0;
    double morawetz_radius = 0.0;
    double p = 0.0;  // nonlinearity the local potential was recorded with

    std::size_t records() const { return t.size(); }
};

/// What evolve() computes at each record; everything is optional.
struct DiagnosticsSetup {
    std::vector<double> conc_radii;
    std::optional<MorawetzWeight> weight;    // enables m_phi (and virial_rhs)
    std::optional<LambdaQuadrature> quad;    // lambda rule for virial_rhs, s < 1
    const GroundStateReport* ground_state = nullptr;  // enables y(t)
    bool record_virial_rhs = false;
    double local_radius = 0.0;               // record local_lp1 at |x| <= R/2
    std::function<void(double, const ComplexField&)> on_record;
};

/// Exact free flow: spectral multiplier exp(-i t |k|^{2s}).
ComplexField linear_propagate(const ComplexField& u, double t, const PhysParams& params);

/// Exact nonlinear sub-flow: u <- u exp(+- i dt |u|^{p-1}) (+ focusing).
ComplexField nonlinear_phase_step(const ComplexField& u, double dt, const PhysParams& params);

/// Half nonlinear phase, full linear flow, half nonlinear phase.
ComplexField strang_step(const ComplexField& u, double dt, const PhysParams& params);

/** Repeated Strang stepping with records every callback_stride steps (plus
 * the initial and final states). Aborts with blow_up_detected when the
 * Hdot^s norm exceeds blowup_hs_factor times its initial value or the
 * fraction of Hdot^s energy carried by the top third of |k| exceeds
 * tail_fraction_max. Throws on NaN.
 */
TimeSeries evolve(const ComplexField& u0, const EvolveConfig& config, const PhysParams& params,
                  const DiagnosticsSetup& diag = {});

/** H^s distance between the interaction-picture profiles
 * exp(+i t (-Lap)^s) u(t) at t2 and t1; decreasing increments over growing
 * windows indicate scattering. Requires t2 > t1 >= 0.
 */
double wave_operator_residual(const ComplexField& u_at_t1, const ComplexField& u_at_t2,
                              double t1, double t2, const PhysParams& params);

/// Box wrap-around horizon 2l / (2s |k|_max^{2s-1}); finite-box scattering
/// diagnostics are trusted only before this time.
double wrap_time(const Grid& g, const PhysParams& params);

/// Fraction of the Hdot^s energy carried by modes with |k| above two thirds
/// of the grid maximum.
double spectral_tail_fraction(const ComplexField& u, double s);

}  // namespace fnls

#endif
