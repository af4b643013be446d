#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "fnls/checkpoint.hpp"
#include "fnls/field_gen.hpp"
#include "fnls/scenario.hpp"
#include "fnls/series_io.hpp"

using namespace fnls;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    auto dir = fs::temp_directory_path() / ("fnls_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("checkpoint round trip is bit exact") {
    auto dir = temp_dir("ckpt");
    Grid g = make_grid(2, 32, 6.0);
    auto params = make_params(2, 0.8, 3.5, Sign::defocusing);
    ComplexField u = random_band_limited(g, 3.0, 77);
    transform_in_place(u, Space::physical);

    const auto path = (dir / "state.fnls").string();
    write_checkpoint(u, path, 1.25, params);
    auto data = read_checkpoint(path);

    CHECK(data.field.grid.d == 2);
    CHECK(data.field.grid.n == 32);
    CHECK(data.field.grid.l == 6.0);
    CHECK(data.params.s == 0.8);
    CHECK(data.params.p == 3.5);
    CHECK(data.params.sign == Sign::defocusing);
    CHECK(data.time == 1.25);
    for (std::size_t i = 0; i < u.values.size(); ++i) CHECK(data.field.values[i] == u.values[i]);

    // re-saving reproduces the bytes exactly
    const auto path2 = (dir / "state2.fnls").string();
    write_checkpoint(data.field, path2, data.time, data.params);
    CHECK(slurp(path) == slurp(path2));
}

TEST_CASE("checkpoint structured failures") {
    auto dir = temp_dir("ckpt_bad");
    Grid g = make_grid(1, 16, 2.0);
    auto params = make_params(1, 0.5, 2.0, Sign::focusing);
    ComplexField u(g, Space::physical);
    const auto path = (dir / "u.fnls").string();
    write_checkpoint(u, path, 0.0, params);

    // corrupt the magic
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.write("XXXX", 4);
    }
    CHECK_THROWS_WITH_AS(read_checkpoint(path), doctest::Contains("FNLS"), std::runtime_error);

    // bump the version
    write_checkpoint(u, path, 0.0, params);
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(4);
        std::uint32_t v = 2;
        f.write(reinterpret_cast<const char*>(&v), 4);
    }
    CHECK_THROWS_WITH_AS(read_checkpoint(path), doctest::Contains("version"), std::runtime_error);

    // truncate the payload
    write_checkpoint(u, path, 0.0, params);
    fs::resize_file(path, fs::file_size(path) - 16);
    CHECK_THROWS_WITH_AS(read_checkpoint(path), doctest::Contains("shorter"), std::runtime_error);

    // extend the payload
    write_checkpoint(u, path, 0.0, params);
    {
        std::ofstream f(path, std::ios::app | std::ios::binary);
        double extra = 0.0;
        f.write(reinterpret_cast<const char*>(&extra), 8);
    }
    CHECK_THROWS_WITH_AS(read_checkpoint(path), doctest::Contains("longer"), std::runtime_error);
}

TEST_CASE("series CSV column contract") {
    TimeSeries s;
    s.t = {0.0};
    s.mass = {1.0};
    s.energy = {2.0};
    s.hs_norm = {3.0};
    s.radii = {1.0, 2.0};
    s.concentration = {{0.5}, {0.9}};
    s.m_phi = {0.1};
    s.virial_rhs = {0.2};
    s.y = {0.3};
    s.scatter_residual = {0.4};
    s.local_lp1 = {0.0};

    auto dir = temp_dir("csv");
    const auto path = (dir / "series.csv").string();
    write_series_csv(s, path);
    const std::string text = slurp(path);
    std::istringstream lines(text);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "t,mass,energy,hs_norm,conc_R1,conc_R2,m_phi,virial_rhs,y,scatter_residual");
    CHECK(row == "0,1,2,3,0.5,0.9,0.1,0.2,0.3,0.4");

    TimeSeries empty;
    CHECK_THROWS_AS(write_series_csv(empty, (dir / "x.csv").string()), std::invalid_argument);

    auto summary = series_summary(s, {{"demo", {{"k", 1}}, 0.5, 1.0, true}});
    CHECK(summary["pass"] == true);
    CHECK(summary["checks"].size() == 1);
    auto failing = series_summary(s, {{"demo", {}, 2.0, 1.0, false}});
    CHECK(failing["pass"] == false);
}

TEST_CASE("scenario: ground state end to end") {
    auto dir = temp_dir("scn_gs");
    nlohmann::json config = {
        {"kind", "ground-state"},
        {"params", {{"d", 1}, {"s", 1.0}, {"p", 3.0}, {"sign", "focusing"}}},
        {"grid", {{"n", 1024}, {"l", 10.0 * std::numbers::pi}}},
        {"ground_state", {{"tol", 1e-10}, {"max_iter", 2000}}},
    };
    RunOptions opts;
    opts.out_dir = dir.string();
    opts.quiet = true;
    CHECK(run_scenario_json(config, opts) == 0);

    auto report = nlohmann::json::parse(slurp(dir / "ground_state.json"));
    CHECK(std::abs(report["mass"].get<double>() - 4.0) <= 1e-5);
    CHECK(report.contains("gn_const"));
    CHECK(report.contains("tail_mass"));
    CHECK(report["n"] == 1024);

    auto q = read_checkpoint((dir / "ground_state.fnls").string());
    CHECK(q.field.grid.n == 1024);

    auto checks = nlohmann::json::parse(slurp(dir / "checks.json"));
    CHECK(checks["pass"] == true);
}

TEST_CASE("scenario: balakrishnan identities and byte reproducibility") {
    nlohmann::json config = {
        {"kind", "balakrishnan-check"},
        {"params", {{"d", 1}, {"s", 0.75}, {"p", 3.0}, {"sign", "focusing"}}},
        {"grid", {{"n", 128}, {"l", 20.0}}},
        {"balakrishnan", {{"s_list", {0.6, 0.75, 0.9}}, {"quad_count", 200}}},
    };
    auto dir1 = temp_dir("scn_bala1");
    auto dir2 = temp_dir("scn_bala2");
    RunOptions opts;
    opts.seed = 1234;
    opts.quiet = true;

    opts.out_dir = dir1.string();
    CHECK(run_scenario_json(config, opts) == 0);
    opts.out_dir = dir2.string();
    CHECK(run_scenario_json(config, opts) == 0);
    CHECK(slurp(dir1 / "checks.json") == slurp(dir2 / "checks.json"));

    auto checks = nlohmann::json::parse(slurp(dir1 / "checks.json"));
    CHECK(checks["checks"].size() == 9);  // three checks per s value
    for (const auto& rec : checks["checks"]) {
        CHECK(rec["pass"] == true);
        CHECK(rec.contains("name"));
        CHECK(rec.contains("tolerance"));
    }
}

TEST_CASE("scenario: malformed configs exit 1") {
    auto dir = temp_dir("scn_bad");
    RunOptions opts;
    opts.out_dir = dir.string();
    opts.quiet = true;

    CHECK(run_scenario_json({{"kind", "no-such-kind"}}, opts) == 1);
    CHECK(run_scenario_json({{"hello", 1}}, opts) == 1);
    CHECK(run_scenario_file((dir / "missing.json").string(), opts) == 1);

    const auto bad = dir / "bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run_scenario_file(bad.string(), opts) == 1);
}

TEST_CASE("scenario: sweep fan-out") {
    auto dir = temp_dir("scn_sweep");
    nlohmann::json config = {
        {"kind", "balakrishnan-check"},
        {"params", {{"d", 1}, {"s", 0.75}, {"p", 3.0}, {"sign", "focusing"}}},
        {"grid", {{"n", 64}, {"l", 10.0}}},
        {"balakrishnan", {{"s_list", {0.75}}, {"quad_count", 128}, {"closed_form_count", 400}}},
        {"sweep", nlohmann::json::array({
            nlohmann::json{{"balakrishnan", {{"s_list", {0.6}}}}},
            nlohmann::json{{"balakrishnan", {{"s_list", {0.9}}}}},
        })},
    };
    RunOptions opts;
    opts.out_dir = dir.string();
    opts.quiet = true;
    opts.jobs = 2;
    CHECK(run_scenario_json(config, opts) == 0);
    CHECK(fs::exists(dir / "sweep_000" / "checks.json"));
    CHECK(fs::exists(dir / "sweep_001" / "checks.json"));
}
