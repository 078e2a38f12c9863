// cli.hpp — Command-line entry point.
//
//   qb series|sweep|scaling --config <path> [--out <dir>] [--no-plots]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical invariant
// violation, 4 resource guard (cutoff or dimension).

#pragma once

namespace qb::cli {

int run(int argc, const char* const* argv);

} // namespace qb::cli
