#ifndef KINGAS_RUNNER_HPP
#define KINGAS_RUNNER_HPP

#include <string>
#include <vector>

#include "kingas/config.hpp"

namespace kingas {

/// Initial condition implied by a config's case.
DiscontinuityIC make_case_ic(const ExperimentConfig& cfg);

/// Executes the configured experiment: writes one profile CSV per sample
/// time, a diagnostics CSV, and a run manifest into cfg.out_dir. Returns the
/// list of written files. Throws ConfigError / PositivityError / IoError on
/// the corresponding failures.
std::vector<std::string> run_case(const ExperimentConfig& cfg,
                                  bool parallel = true);

/// Post-processes existing profile CSVs into a diagnostics CSV in out_dir.
std::string run_diag(const std::vector<std::string>& inputs,
                     const std::string& out_dir);

}  // namespace kingas

#endif
