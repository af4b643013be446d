#include "fnls/field.hpp"

#include <cmath>

namespace fnls {

void transform_in_place(ComplexField& u, Space target) {
    if (u.space == target) return;
    if (target == Space::spectral)
        detail::fft_forward(u.grid, u.values.data());
    else
        detail::fft_backward(u.grid, u.values.data());
    u.space = target;
}

ComplexField to_physical(const ComplexField& u) {
    ComplexField out = u;
    transform_in_place(out, Space::physical);
    return out;
}

ComplexField to_spectral(const ComplexField& u) {
    ComplexField out = u;
    transform_in_place(out, Space::spectral);
    return out;
}

ComplexField drop_zero_mode(const ComplexField& u) {
    ComplexField out = to_spectral(u);
    out.values[0] = {0.0, 0.0};
    transform_in_place(out, u.space);
    return out;
}

bool all_finite(const ComplexField& u) {
    for (const auto& v : u.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace fnls
