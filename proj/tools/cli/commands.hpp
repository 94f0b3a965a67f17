#pragma once

#include <ostream>

namespace mmscli {

enum ExitCode : int { ok = 0, validation = 2, budget = 3 };

/// Entry point of the mmslab tool; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mmscli
