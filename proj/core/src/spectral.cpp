#include "fnls/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fnls {

namespace {

template <class F>
ComplexField apply_real_multiplier(const ComplexField& u, F&& mult) {
    ComplexField out = to_spectral(u);
    const auto& k2 = out.grid.k2();
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= mult(k2[i]);
    transform_in_place(out, u.space);
    return out;
}

}  // namespace

ComplexField fractional_power_apply(const ComplexField& u, double sigma) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("fractional power requires sigma >= 0");
    if (sigma == 0.0) return u;
    const double half = 0.5 * sigma;
    return apply_real_multiplier(u, [half](double k2) {
        return k2 > 0.0 ? std::pow(k2, half) : 0.0;
    });
}

ComplexField resolvent_smooth(const ComplexField& u, double lambda, const PhysParams& params) {
    if (!(lambda > 0.0)) throw std::invalid_argument("resolvent scale lambda must be positive");
    const double root_cs = std::sqrt(params.c_s);
    return apply_real_multiplier(u, [lambda, root_cs](double k2) {
        return root_cs / (k2 + lambda);
    });
}

ComplexField gradient_component(const ComplexField& u, int axis) {
    if (axis < 0 || axis >= u.grid.d) throw std::invalid_argument("gradient axis out of range");
    ComplexField out = to_spectral(u);
    const Grid& g = out.grid;
    const auto& axis_k = g.axis_k();
    const std::size_t total = g.size();
    // stride of `axis` in the row-major flat index
    std::size_t stride = 1;
    for (int a = g.d - 1; a > axis; --a) stride *= static_cast<std::size_t>(g.n);
    for (std::size_t i = 0; i < total; ++i) {
        const int j = static_cast<int>((i / stride) % static_cast<std::size_t>(g.n));
        out.values[i] *= std::complex<double>(0.0, axis_k[j]);
    }
    transform_in_place(out, u.space);
    return out;
}

double sobolev_seminorm(const ComplexField& u, double sigma) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("sobolev_seminorm requires sigma >= 0");
    ComplexField hat = to_spectral(u);
    const auto& k2 = hat.grid.k2();
    double sum = 0.0;
    for (std::size_t i = 0; i < hat.values.size(); ++i) {
        const double w = (sigma == 0.0) ? 1.0 : (k2[i] > 0.0 ? std::pow(k2[i], sigma) : 0.0);
        sum += w * std::norm(hat.values[i]);
    }
    return std::sqrt(hat.grid.volume() * sum);
}

double lebesgue_norm(const ComplexField& u, double r) {
    if (!(r >= 1.0)) throw std::invalid_argument("Lebesgue exponent must satisfy r >= 1");
    ComplexField phys = to_physical(u);
    if (std::isinf(r)) {
        double m = 0.0;
        for (const auto& v : phys.values) m = std::max(m, std::abs(v));
        return m;
    }
    double sum = 0.0;
    for (const auto& v : phys.values) sum += std::pow(std::abs(v), r);
    return std::pow(phys.grid.cell() * sum, 1.0 / r);
}

double hs_norm(const ComplexField& u, double s) {
    ComplexField hat = to_spectral(u);
    const auto& k2 = hat.grid.k2();
    double sum = 0.0;
    for (std::size_t i = 0; i < hat.values.size(); ++i) {
        const double w = 1.0 + (k2[i] > 0.0 ? std::pow(k2[i], s) : 0.0);
        sum += w * std::norm(hat.values[i]);
    }
    return std::sqrt(hat.grid.volume() * sum);
}

std::pair<double, double> mass_energy(const ComplexField& u, const PhysParams& params) {
    ComplexField phys = to_physical(u);
    const double cell = phys.grid.cell();
    double mass = 0.0, pot = 0.0;
    const double pp1 = params.p + 1.0;
    for (const auto& v : phys.values) {
        const double a2 = std::norm(v);
        mass += a2;
        pot += std::pow(a2, 0.5 * pp1);
    }
    mass *= cell;
    pot *= cell;
    const double kin = sobolev_seminorm(phys, params.s);
    const double nl = pot / pp1;
    const double energy = 0.5 * kin * kin + (params.focusing() ? -nl : nl);
    return {mass, energy};
}

double strauss_ratio(const ComplexField& u, const PhysParams& params) {
    const double denom = sobolev_seminorm(u, params.s);
    if (denom <= 0.0) throw std::invalid_argument("strauss_ratio of the zero field");
    const double e = 0.25 * (params.d - 2.0 * params.s);  // exponent on |x|^2
    ComplexField phys = to_physical(u);
    const auto& r2 = phys.grid.r2();
    double best = 0.0;
    for (std::size_t i = 0; i < phys.values.size(); ++i) {
        if (r2[i] <= 0.0) continue;  // origin excluded; finite only for d > 2s there
        best = std::max(best, std::pow(r2[i], e) * std::abs(phys.values[i]));
    }
    return best / denom;
}

}  // namespace fnls
