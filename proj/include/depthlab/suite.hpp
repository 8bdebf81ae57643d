#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depthlab/instances.hpp"

namespace depthlab {

// Result of one check on one instance. Skipped marks an instance whose
// preconditions the check could not meet (tallied, never silently dropped).
enum class CheckResult { Holds, Fails, Inconclusive, Skipped };
const char* check_result_name(CheckResult r);

struct CheckTally {
  std::string check;
  int holds = 0;
  int fails = 0;
  int inconclusive = 0;
  int skipped = 0;
  // Always equals the number of suite instances.
  int total() const { return holds + fails + inconclusive + skipped; }
};

// One failing check, replayable from `instance_text` alone (an instance file
// with the ring, the two modules, the pair and the bound in force).
struct FailingTranscript {
  std::string check;
  std::string instance;
  std::string detail;
  bool kernel_suspect = false;  // a theorem-backed check failed
  std::string instance_text;
};

struct SuiteReport {
  std::vector<std::string> checks;     // resolved check names, run order
  std::vector<std::string> instances;  // instance names, index order
  std::vector<CheckTally> tallies;     // aligned with `checks`
  std::vector<FailingTranscript> failures;
  int instance_count = 0;
  int bound = 0;  // 0: each ring used its default bound 2(n+1)

  std::string to_text() const;     // human-readable, deterministic
  std::string to_machine() const;  // one JSON document, deterministic
};

// The canonical check list, in run order:
//   depth_double_oracle     every depth computed by two independent routes
//   tor_balance             Tor_i(M,N) = Tor_i(N,M) degreewise
//   resolution_certificates minimal resolutions pass the full certificate
//   depth_formula           defect 0 on Tor-independent pairs
//   main_inequality         depth R + depth(M o N) >= depth M + depth N
//   depth_positivity        depth(M o N) > 0 iff Tor_1(M/xM, N) = 0, x found
//   gdim_dichotomy          depth M <= depth(M o N), or the syzygy bump by 1
//   reduction_roundtrip     one certified reduction drops all depths by 1
//   corollary_reduct        reduced syzygy pair keeps both depths
//   les_window              long-exact-sequence window for a quotient by x
//   cor_window              four-term sequence and degree-shift isomorphisms
//   fixture_expectations    frozen expected values on the named examples
const std::vector<std::string>& all_check_names();

// Runs each named check (empty list = all of them) on every instance of
// every family, in instance-index order. `bound` <= 0 lets each ring use its
// default Tor bound 2(n+1). The report is deterministic for fixed inputs;
// per-check wall-clock goes to stderr and never into the report. Unknown
// check names raise NameError. Per-instance errors are captured: an internal
// inconsistency becomes a kernel-suspect Fails, a resource-bound failure
// becomes Inconclusive.
SuiteReport run_lemma_suite(const std::vector<InstanceFamily>& families,
                            const std::vector<std::string>& checks, int bound);

}  // namespace depthlab
