#pragma once

#include <iosfwd>

#include "app/run_config.hpp"

namespace evenfix::app {

// Executes one command. The report goes to `out` (or to config.output);
// faults are written to `err` as a JSON error document. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace evenfix::app
