#include "fnls/field_gen.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace fnls {

ComplexField sample_field(const Grid& g,
                          const std::function<std::complex<double>(const std::array<double, 3>&)>& f) {
    ComplexField u(g, Space::physical);
    const auto& axis_x = g.axis_x();
    int idx[3] = {0, 0, 0};
    std::array<double, 3> x = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        g.unflatten(i, idx);
        for (int a = 0; a < g.d; ++a) x[a] = axis_x[idx[a]];
        u.values[i] = f(x);
    }
    return u;
}

ComplexField gaussian_field(const Grid& g, double amplitude, double width) {
    ComplexField u(g, Space::physical);
    const auto& r2 = g.r2();
    const double inv = 1.0 / (2.0 * width * width);
    for (std::size_t i = 0; i < u.values.size(); ++i)
        u.values[i] = amplitude * std::exp(-r2[i] * inv);
    return u;
}

ComplexField plane_wave(const Grid& g, double amplitude, const std::array<int, 3>& mode) {
    ComplexField u(g, Space::physical);
    const auto& axis_x = g.axis_x();
    const double dk = std::numbers::pi / g.l;
    int idx[3] = {0, 0, 0};
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        g.unflatten(i, idx);
        double phase = 0.0;
        for (int a = 0; a < g.d; ++a) phase += dk * mode[a] * axis_x[idx[a]];
        u.values[i] = amplitude * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return u;
}

ComplexField random_band_limited(const Grid& g, double kband, std::uint64_t seed) {
    ComplexField u(g, Space::spectral);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto& k2 = g.k2();
    const double kb2 = kband * kband;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        // draw regardless of the cut so the sequence is grid-layout stable
        const double re = normal(rng), im = normal(rng);
        if (k2[i] <= 0.0 || k2[i] > kb2) continue;
        const double damp = std::exp(-2.0 * k2[i] / kb2);
        u.values[i] = damp * std::complex<double>(re, im);
    }
    return u;
}

}  // namespace fnls
