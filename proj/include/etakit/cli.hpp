#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace etakit::cli {

enum Exit { kOk = 0, kCheckFailed = 1, kError = 2 };

// Runs the etakit command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etakit::cli
