#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopfloer::cli {

/** Exit codes: 0 success, 1 domain or parse error, 2 usage error. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/** Contents of the file when `arg` names one, otherwise `arg` itself. */
std::string read_input(const std::string& arg);

/** Worker count from LOOPFLOER_THREADS, defaulting to the hardware concurrency. */
unsigned worker_count();

} // namespace loopfloer::cli
