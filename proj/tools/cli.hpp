#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace okdh::cli {

/// Runs the okdh command line. Returns 0 on success, 1 on invalid input and
/// 2 when an internal cross-check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace okdh::cli
