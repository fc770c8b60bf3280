#pragma once

// Command-line harness: parses arguments and config files, runs one command
// and serializes its report.

#include <iosfwd>
#include <string>
#include <vector>

#include "adsrigid/config.hpp"
#include "adsrigid/report.hpp"

namespace adsrigid::cli {

/// Exit codes: 0 all checks pass, 1 a check failed or a computation was
/// refused, 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs config.command (check, mess, dual, extend, rigidity, fuchsian).
/// Throws Error on configuration problems and refused computations.
CheckReport execute(const RunConfig& config);

const std::vector<std::string>& command_names();

}  // namespace adsrigid::cli
