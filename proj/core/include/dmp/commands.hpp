#pragma once

/**
 * @file commands.hpp
 * @brief Command implementations behind the CLI.
 *
 * The *_report_body functions are pure: byte-identical JSON for identical
 * config and seed. The cmd_* wrappers run a body, wrap it in the versioned
 * envelope, write files under the configured output directory, and return the
 * process exit code. Recorded verdict failures are successful runs; only
 * configuration or runtime errors are nonzero.
 */

#include <string>

#include <nlohmann/json.hpp>

#include "dmp/config.hpp"

namespace dmp {

nlohmann::json spectrum_report_body(int period);
nlohmann::json check_report_body(const ProblemConfig& config);
nlohmann::json solve_report_body(const ProblemConfig& config);
nlohmann::json deform_report_body(const ProblemConfig& config);
nlohmann::json oracle_report_body(const ProblemConfig& config);

int cmd_spectrum(int period, const std::string& out_dir);
int cmd_check(const ProblemConfig& config);
int cmd_solve(const ProblemConfig& config);
int cmd_deform(const ProblemConfig& config);
int cmd_oracle(const ProblemConfig& config);

}  // namespace dmp
