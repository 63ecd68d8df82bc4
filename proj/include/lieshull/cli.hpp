#pragma once

#include <iosfwd>

namespace lieshull {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitComputation = 2,
  kExitPrecondition = 3,
};

/// Command-line entry point: validate | classify | hull | rigidity | density | catalog.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieshull
