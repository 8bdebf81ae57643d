#pragma once

#include <string>
#include <vector>

namespace depthlab {

// Exit codes of the command-line driver. The first four form the public
// contract; kExitInternal marks a kernel invariant breach (always a bug).
inline constexpr int kExitHolds = 0;         // success / verdict Holds
inline constexpr int kExitFails = 1;         // verdict Fails, witness reported
inline constexpr int kExitInconclusive = 2;  // undecided within the bounds
inline constexpr int kExitInputError = 3;    // usage, file, or name errors
inline constexpr int kExitInternal = 70;     // internal inconsistency

// Captured outcome of one driver invocation.
struct CliResult {
  int exit_code = 0;
  std::string out;  // the report (stdout)
  std::string err;  // diagnostics (stderr)
};

// Runs one command of the `depthlab` driver. `args` is the argument vector
// without the program name, e.g. {"depth", "M", "--file", "k1.dl"}.
//
// Commands: depth, tor, resolve, tensor, check-formula, reduce, suite.
// Common flags: --file PATH (instance file; required except for `suite`,
// which falls back to the built-in default families), --bound N (Tor/
// resolution truncation; default: the file's options block, else 2(n+1)),
// --dmax N (Hilbert cutoff, default 12), --seed N (default 0),
// --max-degree N (regular-element search, default 3),
// --format text|machine (default text). `resolve` adds --length N and
// `suite` adds --checks a,b,c (default: every check).
//
// Reports are byte-deterministic for identical arguments and inputs; the
// machine format is a single JSON document carrying the command echo, the
// resolved option values, and the per-command results.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace depthlab
