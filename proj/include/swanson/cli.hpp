// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_CLI_HPP
#define SWANSON_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace swanson::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Summary goes to out, diagnostics to err; data files are
// written once at the end. A relative -o path, or the default <command>.<format> when -o is
// absent, is placed under $SWANSON_OUTPUT_DIR if that is set; with neither, no file is written.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// printf("%.17g"), with "nan"/"inf"/"-inf" spelled out.
std::string format_double(double v);

}  // namespace swanson::cli

#endif  // SWANSON_CLI_HPP
