#include "fnls/series_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace fnls {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);  // shortest round-trip
    return std::string(buf, res.ptr);
}

nlohmann::json to_json(const DiagnosticRecord& rec) {
    return {{"name", rec.name},
            {"params", rec.params},
            {"value", rec.value},
            {"tolerance", rec.tolerance},
            {"pass", rec.pass}};
}

void write_series_csv(const TimeSeries& series, const std::string& path) {
    if (series.records() == 0) throw std::invalid_argument("refusing to write an empty series");
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    out << "t,mass,energy,hs_norm";
    for (std::size_t r = 0; r < series.radii.size(); ++r) out << ",conc_R" << (r + 1);
    out << ",m_phi,virial_rhs,y,scatter_residual\n";

    for (std::size_t i = 0; i < series.records(); ++i) {
        out << format_double(series.t[i]) << ',' << format_double(series.mass[i]) << ','
            << format_double(series.energy[i]) << ',' << format_double(series.hs_norm[i]);
        for (const auto& conc : series.concentration) out << ',' << format_double(conc[i]);
        out << ',' << format_double(series.m_phi[i]) << ',' << format_double(series.virial_rhs[i])
            << ',' << format_double(series.y[i]) << ','
            << format_double(series.scatter_residual[i]) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

nlohmann::json column_stats(const std::vector<double>& v) {
    if (v.empty()) return nullptr;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return {{"final", v.back()}, {"min", *lo}, {"max", *hi}};
}

}  // namespace

nlohmann::json series_summary(const TimeSeries& series,
                              const std::vector<DiagnosticRecord>& checks) {
    nlohmann::json j;
    j["records"] = series.records();
    j["status"] = series.status == EvolveStatus::completed ? "completed" : "blow-up-detected";
    j["t_wrap"] = series.t_wrap;
    j["t_final"] = series.t.empty() ? 0.0 : series.t.back();
    j["mass"] = column_stats(series.mass);
    j["energy"] = column_stats(series.energy);
    j["hs_norm"] = column_stats(series.hs_norm);
    j["m_phi"] = column_stats(series.m_phi);
    j["virial_rhs"] = column_stats(series.virial_rhs);
    j["y"] = column_stats(series.y);
    j["scatter_residual"] = column_stats(series.scatter_residual);
    j["local_lp1"] = column_stats(series.local_lp1);
    j["morawetz_radius"] = series.morawetz_radius;
    nlohmann::json conc = nlohmann::json::array();
    for (std::size_t r = 0; r < series.radii.size(); ++r)
        conc.push_back({{"R", series.radii[r]}, {"stats", column_stats(series.concentration[r])}});
    j["concentration"] = conc;

    bool all_pass = true;
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : checks) {
        recs.push_back(to_json(rec));
        all_pass = all_pass && rec.pass;
    }
    j["checks"] = recs;
    j["pass"] = all_pass;
    return j;
}

void write_series_summary(const TimeSeries& series, const std::vector<DiagnosticRecord>& checks,
                          const std::string& path) {
    write_json(series_summary(series, checks), path);
}

void write_scan_csv(const std::string& xlabel, const std::vector<double>& xs,
                    const std::string& ylabel, const std::vector<double>& ys,
                    const std::string& path) {
    if (xs.size() != ys.size()) throw std::invalid_argument("scan columns differ in length");
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << xlabel << ',' << ylabel << '\n';
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fnls
