#ifndef FNLS_SCENARIO_HPP
#define FNLS_SCENARIO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace fnls {

struct RunOptions {
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool quiet = false;
    int jobs = 1;
};

/** Runs one scenario document (or a sweep of them) and emits CSV/JSON
 * artifacts into out_dir. Exit codes: 0 all checks passed, 1 malformed
 * config or I/O failure, 2 a diagnostic check failed, 3 a blow-up sentinel
 * fired (expected for blow-up scenarios, a failure for scattering ones).
 */
int run_scenario_json(const nlohmann::json& config, const RunOptions& options);
int run_scenario_file(const std::string& config_path, const RunOptions& options);

}  // namespace fnls

#endif
