#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fhzeta/zeta.hpp"

namespace fhzeta::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumerical = 3 };

/// Parses "R", "R+Ii", "R-Ii", "R+i" and the like.
std::optional<cplx> parse_complex(const std::string& text);

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fhzeta::cli
