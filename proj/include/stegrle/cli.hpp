#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stegrle/error.hpp"
#include "stegrle/image.hpp"

namespace stegrle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Process exit status for each error kind. Every kind maps to its own code.
int exit_code(ErrorKind kind) noexcept;

/// Parses "x0,y0,x1,y1"; malformed text throws std::invalid_argument.
Rect parse_rect(const std::string& text);

/// Runs the command line (args excludes the program name). Normal output goes
/// to out; failures print one "<ErrorToken>: <detail>" line to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace stegrle::cli
