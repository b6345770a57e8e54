#pragma once

// Command-line front end. Exit status: 0 all tolerances met, 2 tolerance
// violation, 1 usage error.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "blab/scalar.hpp"

namespace blab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitTolerance = 2;
inline constexpr int kMaxN = 64;

// "a+bi" style: "2", "-i", "2.5i", "1+2i", "1e-3-4.5i". Throws
// std::invalid_argument on anything else.
Complex parse_complex(std::string_view s);

// Joins "--opt -i" into "--opt=-i" when the value parses as a number, so
// negative values are not taken for short options.
std::vector<std::string> normalize_args(std::vector<std::string> args);

// args excludes the program name. Reports go to --output or `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blab::cli
