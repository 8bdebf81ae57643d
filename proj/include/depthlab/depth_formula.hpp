#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/homology.hpp"

namespace depthlab {

// Truncation bound used by Tor-vanishing checks when none is given
// explicitly: twice the number of variables plus two.
inline int default_tor_bound(int nvars) { return 2 * (nvars + 1); }

// The depth-formula ledger line for a pair (M, N): all four depths, the
// defect
//   depth M + depth N - depth R - depth(M tensor N),
// and the Tor-independence verdict. A non-Holds verdict marks the defect as
// outside the formula's hypotheses (reported but not applicable).
struct DefectRecord {
  int depth_m = 0;
  int depth_n = 0;
  int depth_r = 0;
  int depth_tensor = 0;
  int defect = 0;
  TorVerdict tor_verdict;
  bool applicable() const { return tor_verdict.outcome == Outcome::Holds; }
};

// Computes the DefectRecord for a pair of nonzero modules over the same
// ring; Tor vanishing is decided up to `bound` (rigorously when a finite
// resolution is found). InputError on a zero module.
DefectRecord depth_formula_defect(const FPModule& M, const FPModule& N,
                                  int bound);

// Outcome of the seeded regular-element search.
enum class SearchFailure { DepthZeroWitness, SearchExhausted };

struct RegularElementResult {
  // Set exactly when the search succeeded.
  std::optional<Poly> element;
  // Set exactly when it did not.
  std::optional<SearchFailure> failure;
  // For DepthZeroWitness: index into the searched list of the module with
  // depth zero (no regular element can exist on it).
  int depth_zero_index = -1;
  bool found() const { return element.has_value(); }
};

// Searches for a homogeneous element of the irrelevant maximal ideal that is
// regular on every module in `mods`: seeded random linear forms first, then
// random forms of degree 2, ..., up to `max_degree`, with `trials` candidates
// per degree. Returns the first passing candidate in draw order, so the
// result is reproducible for a fixed seed. InputError if some listed module
// is zero.
RegularElementResult find_regular_element(const std::vector<FPModule>& mods,
                                          int max_degree, int trials,
                                          std::uint64_t seed);

// One certified quotient-descent step: a homogeneous element x regular on
// every module named in `certified`, the rings before and after dividing by
// x, and the named modules before (over ring_before) and after (over
// ring_after = ring_before/(x)).
struct ReductionStep {
  Poly element;
  RingPtr ring_before;
  RingPtr ring_after;
  std::map<std::string, FPModule> modules_before;
  std::map<std::string, FPModule> modules_after;
  std::vector<std::string> certified;
};

// Given a Tor-independent pair with positive depths for R, M, N and
// M tensor N, finds an element x regular on all four, forms Rbar = R/(x),
// Mbar = M/xM, Nbar = N/xN, and verifies the descent facts: Mbar and Nbar
// are Tor-independent over Rbar up to `bound`, and the depths of R, M, N and
// the tensor product each drop by exactly one. A violated precondition
// raises PreconditionError carrying the failing depth; a violated
// postcondition raises InternalError (it contradicts a theorem, so it is a
// kernel-defect suspect). bound < 0 selects the default bound;
// `max_degree`/`trials` control the element search.
ReductionStep reduce_pair(const FPModule& M, const FPModule& N,
                          std::uint64_t seed, int bound = -1,
                          int max_degree = 3, int trials = 40);

// Raised when a multi-step descent runs out of regular-element candidates;
// carries the steps completed so far.
struct DescentExhausted : SearchExhausted {
  DescentExhausted(const std::string& what, std::vector<ReductionStep> steps_)
      : SearchExhausted(what), steps(std::move(steps_)) {}
  std::vector<ReductionStep> steps;
};

// For a Cohen-Macaulay graded ring of depth d and a Tor-independent pair of
// maximal Cohen-Macaulay modules (depth M = depth N = depth R), replaces M
// by its (d-1)-st syzygy (kept as M itself in the degenerate case where that
// syzygy vanishes, i.e. M free) and performs d-1 certified reduction steps,
// ending over a depth-1 ring. At every level the tensor depth is verified to
// equal the level's ring depth. Depth-1 input returns the empty list.
// PreconditionError on violated hypotheses; DescentExhausted (with the
// partial transcript) when a step's element search fails.
std::vector<ReductionStep> descend_to_depth_one(const FPModule& M,
                                                const FPModule& N,
                                                std::uint64_t seed,
                                                int bound = -1,
                                                int max_degree = 3,
                                                int trials = 40);

// Verdict of an exact-sequence or isomorphism verification. Fails carries
// the first failing (p, degree); p = -1 marks a failure of the whole-window
// alternating-sum test (not attached to a single homological index).
struct SeqVerdict {
  Outcome outcome = Outcome::Holds;
  int fail_p = -1;
  int fail_degree = 0;
  std::string note;
};

// Verifies the change-of-rings long exact sequence associated with an
// element x regular on R (InputError otherwise): writing Rbar = R/(x),
// Mbar = M/xM, Nbar = N/xN and T1 = Tor_1^R(N, Rbar),
//
//   ... -> Tor_{p+1}^R(N, Mbar) -> Tor_{p+1}^{Rbar}(Nbar, Mbar)
//       -> Tor_{p-1}^{Rbar}(T1, Mbar) -> Tor_p^R(N, Mbar) -> ...
//
// Exactness is checked degreewise by alternating sums of dimensions over the
// window p <= p_max, in every degree where the truncated-away terms are
// known to vanish (a twist-growth bound; degrees up to dmax otherwise).
// Additionally Tor_0 agreement, and, when x is also regular on N, the
// collapse isomorphisms Tor_p^{Rbar}(Nbar, Mbar) = Tor_p^R(N, Mbar) for
// 1 <= p <= p_max are checked by Hilbert-function equality.
SeqVerdict les_check_spect(const FPModule& N, const FPModule& M, const Poly& x,
                           int p_max, int dmax = 12);

// Verifies, for a Tor-independent pair and x regular on R and M (InputError
// otherwise), the four-term exact sequence
//
//   0 -> Tor_2^{Rbar}(Nbar, Mbar) -> Tor_1^R(N, Rbar) tensor Mbar
//     -> Tor_1^R(N, Mbar) -> Tor_1^{Rbar}(Nbar, Mbar) -> 0
//
// by degreewise alternating sums up to dmax, and the isomorphisms
// Tor_p^{Rbar}(Nbar, Mbar) = Tor_{p-2}^{Rbar}(T1, Mbar) for 3 <= p <= p_max
// by Hilbert-function equality.
SeqVerdict cor_spect_check(const FPModule& N, const FPModule& M, const Poly& x,
                           int p_max, int dmax = 12);

}  // namespace depthlab
