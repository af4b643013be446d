#ifndef FNLS_SERIES_IO_HPP
#define FNLS_SERIES_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fnls/dynamics.hpp"

namespace fnls {

/// One emitted diagnostic: a named check with its inputs, measured value,
/// tolerance and verdict.
struct DiagnosticRecord {
    std::string name;
    nlohmann::json params;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

nlohmann::json to_json(const DiagnosticRecord& rec);

/// CSV with columns exactly
/// t,mass,energy,hs_norm,conc_R1,...,m_phi,virial_rhs,y,scatter_residual.
void write_series_csv(const TimeSeries& series, const std::string& path);

/// Final/min/max of every column plus status, wrap horizon and pass flags.
nlohmann::json series_summary(const TimeSeries& series,
                              const std::vector<DiagnosticRecord>& checks = {});
void write_series_summary(const TimeSeries& series, const std::vector<DiagnosticRecord>& checks,
                          const std::string& path);

/// Two-column CSV (label per x) for decay scans and fits.
void write_scan_csv(const std::string& xlabel, const std::vector<double>& xs,
                    const std::string& ylabel, const std::vector<double>& ys,
                    const std::string& path);

void write_json(const nlohmann::json& j, const std::string& path);

/// Stable float formatting used by every CSV writer (round-trip exact).
std::string format_double(double v);

}  // namespace fnls

#endif
