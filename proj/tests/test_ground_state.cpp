#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fnls/field_gen.hpp"
#include "fnls/ground_state.hpp"
#include "oracles.hpp"

using namespace fnls;
using std::numbers::pi;

namespace {

GroundStateReport& sech_report() {
    static GroundStateReport report = [] {
        auto params = make_params(1, 1.0, 3.0, Sign::focusing);
        Grid g = make_grid(1, 1024, 10.0 * pi);
        return petviashvili_solve(params, g, default_ground_state_seed(g), 1e-12, 2000);
    }();
    return report;
}

GroundStateReport& cubic3d_report() {
    static GroundStateReport report = [] {
        auto params = make_params(3, 1.0, 3.0, Sign::focusing);
        Grid g = make_grid(3, 128, 13.0);
        return petviashvili_solve(params, g, default_ground_state_seed(g), 1e-10, 2000);
    }();
    return report;
}

}  // namespace

TEST_CASE("sech soliton at s=1, d=1, p=3") {
    auto& rep = sech_report();
    const Grid& g = rep.q.grid;

    double worst = 0.0;
    const auto& xs = g.axis_x();
    for (int j = 0; j < g.n; ++j) {
        const double want = std::sqrt(2.0) / std::cosh(xs[j]);
        worst = std::max(worst, std::abs(rep.q.values[j].real() - want));
    }
    CHECK(worst <= 1e-6);
    CHECK(rep.mass == doctest::Approx(4.0).epsilon(1e-5 / 4.0));
    CHECK(rep.hs * rep.hs == doctest::Approx(4.0 / 3.0).epsilon(1e-5));
    CHECK(std::pow(rep.lp1, 4.0) == doctest::Approx(16.0 / 3.0).epsilon(1e-6));
    CHECK(rep.residual <= 2e-12);  // recomputation roundoff slack
    CHECK(rep.tail_mass <= 1e-12);  // ~4 exp(-2l) for the sech tail

    // multiply the equation by Q and integrate
    const double lhs = rep.hs * rep.hs + rep.mass;
    CHECK(lhs == doctest::Approx(std::pow(rep.lp1, 4.0)).epsilon(1e-4));
}

TEST_CASE("elliptic residual on the closed-form soliton") {
    auto params = make_params(1, 1.0, 3.0, Sign::focusing);
    Grid g = make_grid(1, 1024, 10.0 * pi);
    ComplexField sech = sample_field(g, [](const std::array<double, 3>& x) {
        return std::complex<double>(std::sqrt(2.0) / std::cosh(x[0]), 0.0);
    });
    CHECK(elliptic_residual(sech, params) <= 1e-8);

    ComplexField zero(g, Space::physical);
    CHECK(elliptic_residual(zero, params) == 0.0);

    // scaling is broken by the nonlinearity: 2Q is far from a solution
    ComplexField twice = sech;
    for (auto& v : twice.values) v *= 2.0;
    CHECK(elliptic_residual(twice, params) > 1.0);
}

TEST_CASE("petviashvili rejects bad setups") {
    auto defoc = make_params(1, 1.0, 3.0, Sign::defocusing);
    Grid g = make_grid(1, 64, 10.0);
    CHECK_THROWS_AS(petviashvili_solve(defoc, g, default_ground_state_seed(g), 1e-10, 100),
                    std::invalid_argument);

    auto params = make_params(1, 1.0, 3.0, Sign::focusing);
    CHECK_THROWS_AS(petviashvili_solve(params, g, default_ground_state_seed(g), 1e-30, 3),
                    std::runtime_error);  // cannot converge in 3 iterations
}

TEST_CASE("d=3 cubic ground state against the shooting oracle") {
    auto& rep = cubic3d_report();
    auto prof = oracles::shoot_cubic_ground_state();

    // frozen oracle values for the classical profile
    CHECK(prof.q0 == doctest::Approx(4.3374).epsilon(2e-4));
    CHECK(rep.q.values[rep.q.values.size() / 2 + rep.q.grid.n / 2 +
                       rep.q.grid.n * rep.q.grid.n / 2]
              .real() > 1.0);

    CHECK(std::abs(rep.mass - prof.mass) <= 1e-3 * prof.mass);
    // Pohozaev consequences: hs^2 = 3 M, lp1^4 = 4 M
    CHECK(rep.hs * rep.hs == doctest::Approx(3.0 * rep.mass).epsilon(3e-4));
    CHECK(std::pow(rep.lp1, 4.0) == doctest::Approx(4.0 * rep.mass).epsilon(3e-4));
}

TEST_CASE("gagliardo-nirenberg constant") {
    auto& rep = sech_report();
    // closed form from the sech norms: (16/3) / ((4/3)^{1/2} 4^{3/2}) = 1/sqrt(3)
    CHECK(rep.gn_const == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-6));
    CHECK(gn_constant(rep) == doctest::Approx(rep.gn_const));

    // extremality: random radial bumps satisfy the strict inequality
    const PhysParams& pr = rep.params;
    const Grid& g = rep.q.grid;
    const double kin_exp = pr.d * (pr.p - 1.0) / (2.0 * pr.s);
    const double mass_exp = pr.p + 1.0 - kin_exp;
    for (int trial = 0; trial < 50; ++trial) {
        const double w = 0.3 + 0.15 * trial;
        ComplexField v = gaussian_field(g, 1.0 + 0.02 * trial, w);
        const double num = std::pow(lebesgue_norm(v, pr.p + 1.0), pr.p + 1.0);
        const double den = std::pow(sobolev_seminorm(v, pr.s), kin_exp) *
                           std::pow(lebesgue_norm(v, 2.0), mass_exp);
        CHECK(num <= rep.gn_const * den * (1.0 + 1e-9));
    }

    // d=3 classical value relates to the mass: C = 4 / (3 sqrt(3) M)
    auto& rep3 = cubic3d_report();
    CHECK(rep3.gn_const ==
          doctest::Approx(4.0 / (3.0 * std::sqrt(3.0) * rep3.mass)).epsilon(1e-4));
}

TEST_CASE("soliton variational identity") {
    auto& rep3 = cubic3d_report();
    CHECK(pohozaev_soliton_check(rep3) <= 1e-3);

    // refuse outside the intercritical window: s=1, d=1, p=3 has s_c < 0
    auto& rep1 = sech_report();
    CHECK_THROWS_AS(pohozaev_soliton_check(rep1), std::domain_error);
}

TEST_CASE("perturbing Q grows the identity discrepancy monotonically") {
    auto base = cubic3d_report();
    double prev = pohozaev_soliton_check(base);
    for (double eps : {0.02, 0.05, 0.1}) {
        GroundStateReport bent = base;
        ComplexField q = base.q;
        const auto& r2 = q.grid.r2();
        for (std::size_t i = 0; i < q.values.size(); ++i)
            q.values[i] *= 1.0 + eps * std::exp(-r2[i] / 16.0);
        bent.q = q;
        auto me = mass_energy(q, base.params);
        bent.mass = me.first;
        bent.energy = me.second;
        bent.hs = sobolev_seminorm(q, base.params.s);
        bent.lp1 = lebesgue_norm(q, base.params.p + 1.0);
        bent.gn_const = gn_constant(bent);
        const double disc = pohozaev_soliton_check(bent);
        CHECK(disc > prev);
        prev = disc;
    }
}

TEST_CASE("threshold classification") {
    auto& rep3 = cubic3d_report();
    const PhysParams& params = rep3.params;

    auto at = classify_initial_data(rep3.q, rep3, params);
    CHECK(at.classification == Classification::above_threshold);
    CHECK(at.energy_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(at.kinetic_ratio == doctest::Approx(1.0).epsilon(1e-12));

    auto scaled = [&](double c) {
        ComplexField u = rep3.q;
        for (auto& v : u.values) v *= c;
        return classify_initial_data(u, rep3, params);
    };

    auto low = scaled(0.8);
    CHECK(low.classification == Classification::scatter_candidate);
    CHECK(low.kinetic_ratio == doctest::Approx(std::pow(0.8, params.s)).epsilon(1e-10));
    CHECK(low.energy_ratio < 1.0);

    auto high = scaled(1.2);
    CHECK(high.kinetic_ratio == doctest::Approx(std::pow(1.2, params.s)).epsilon(1e-10));
    CHECK(high.kinetic_ratio > 1.0);
    if (high.energy_ratio < 1.0)
        CHECK(high.classification == Classification::blowup_candidate);

    // kinetic ratio is exactly c^s for any rescaling of Q
    for (double c : {0.3, 0.9, 1.7})
        CHECK(scaled(c).kinetic_ratio == doctest::Approx(std::pow(c, params.s)).epsilon(1e-10));

    // strongly scaled-up data has negative energy
    auto neg = scaled(3.0);
    CHECK(neg.classification == Classification::negative_energy_blowup);
}
