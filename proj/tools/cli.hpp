#pragma once

#include <iosfwd>

namespace spancore::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad flags or parameter values
  kInput = 2,     // unreadable or malformed input, unwritable output
  kInternal = 3,  // invariant violation inside the library
};

/// Runs one `spancore` invocation. Results go to --output (stdout for "-"),
/// the provenance record to <output>.provenance.json, or to `err` as a single
/// JSON line when results go to stdout.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spancore::cli
