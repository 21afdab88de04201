#pragma once

#include <iosfwd>
#include <span>

namespace feltfp::cli {

/// Entry point behind the `feltfp` binary; args includes the program name.
/// Returns the process exit status: 0 success, 1 semantic failure (a check
/// or certification did not hold), 2 usage or input error.
int run(std::span<const char* const> args, std::ostream& out, std::ostream& err);

}  // namespace feltfp::cli
