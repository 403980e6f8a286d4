#pragma once

#include "cfsym/seed.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cfsym::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kPrecisionExhausted = 2,
  kDomainError = 3,
};

/// Minimum significant digits accepted for `decimal:` seeds.
inline constexpr int kMinDecimalDigits = 32;

/// Parses `surd:P,D,Q`, `decimal:<literal>` or `fixture:<name>`.
/// Throws DomainError on anything else.
Seed parse_seed(std::string_view text);

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfsym::cli
