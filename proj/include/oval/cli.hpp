#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oval {

/// Runs one CLI command. Exit codes: 0 success, 2 validation error,
/// 3 degeneracy error, 4 hypothesis violation, 64 usage error, 1 otherwise.
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace oval
