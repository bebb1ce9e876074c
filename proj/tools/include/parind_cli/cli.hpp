#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parind::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs one `parity-inductor` invocation. `args` excludes the program name. Output goes to
/// `out` (or to the file named by --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parind::cli
