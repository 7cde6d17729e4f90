#pragma once

#include "braidkit/tensor.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Angle token: a number, "pi", or a product/quotient such as "2*pi", "pi/3",
/// "-2*pi/3". Throws std::invalid_argument on anything else.
double parse_angle(std::string_view token);

/// "start:end:count" -> count evenly spaced points including both ends.
std::vector<double> parse_grid(std::string_view spec);

/// "re,im" or "re" -> complex.
Complex parse_complex(std::string_view spec);

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace braidkit::cli
