#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bqf::cli {

// Runs one command. Returns the process exit status:
// 0 success, 2 bad input or failed precondition, 3 not found or budget exhausted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bqf::cli
