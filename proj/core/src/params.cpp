#include "fnls/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fnls {

PhysParams make_params(int d, double s, double p, Sign sign) {
    if (d < 1 || d > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
    if (!(s > 0.0) || s > 1.0) throw std::invalid_argument("fractional order s must lie in (0,1]");
    if (!(p > 1.0)) throw std::invalid_argument("nonlinearity power p must exceed 1");

    PhysParams params;
    params.d = d;
    params.s = s;
    params.p = p;
    params.sign = sign;
    params.s_c = 0.5 * d - 2.0 * s / (p - 1.0);
    params.c_s = std::sin(std::numbers::pi * s) / std::numbers::pi;

    bool regime = d >= 3 && s > static_cast<double>(d) / (d + 1) && s < 1.0;
    if (regime) {
        if (d == 3)
            regime = p > 8.0 * s / 3.0 && p < 1.0 + 4.0 * s / (3.0 - 2.0 * s);
        else
            regime = p >= 2.0 && p < 1.0 + 4.0 * s / (d - 2.0 * s);
    }
    params.theorem_regime = regime;
    return params;
}

std::string to_string(Sign sign) {
    return sign == Sign::focusing ? "focusing" : "defocusing";
}

Sign sign_from_string(const std::string& name) {
    if (name == "focusing") return Sign::focusing;
    if (name == "defocusing") return Sign::defocusing;
    throw std::invalid_argument("unknown sign: " + name);
}

}  // namespace fnls
