#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splicekit::cli {

enum ExitCode : int { kOk = 0, kInvalid = 2, kInvariantFailure = 3, kIoFailure = 4 };

// Entry point shared by the executable and the tests; args excludes argv[0].
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace splicekit::cli
