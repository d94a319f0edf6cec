#pragma once

#include <cstddef>
#include <iosfwd>

namespace opetokit {

/// Entry point of the opetokit tool. Returns the process exit code:
/// 0 clean, 1 negative verdict or domain error, 2 parse, IO or usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

/// OPETOKIT_ARITY_BOUND if set, else the default bound.
std::size_t env_arity_bound();

}  // namespace opetokit
