#ifndef FNLS_PARAMS_HPP
#define FNLS_PARAMS_HPP

#include <string>

namespace fnls {

enum class Sign { focusing, defocusing };

/** Equation parameters for i u_t - (-Lap)^s u = -sign |u|^(p-1) u.
 *
 * s_c = d/2 - 2s/(p-1) is the scaling-critical Sobolev index and
 * c_s = sin(pi s)/pi the resolvent-integral constant. theorem_regime
 * marks the intercritical radial-scattering window (d >= 3,
 * s in (d/(d+1),1), p in the dimension-dependent bracket); out-of-regime
 * parameters are accepted, reports just carry the flag.
 */
struct PhysParams {
    int d = 3;
    double s = 1.0;
    double p = 3.0;
    Sign sign = Sign::focusing;

    double s_c = 0.0;
    double c_s = 0.0;
    bool theorem_regime = false;

    bool focusing() const { return sign == Sign::focusing; }
};

/// Validates and fills the derived quantities; throws std::invalid_argument
/// for d outside 1..3, s outside (0,1] or p <= 1.
PhysParams make_params(int d, double s, double p, Sign sign);

std::string to_string(Sign sign);
Sign sign_from_string(const std::string& name);

}  // namespace fnls

#endif
