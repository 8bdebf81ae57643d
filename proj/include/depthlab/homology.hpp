#pragma once

#include "depthlab/resolution.hpp"

namespace depthlab {

// Homology of X --delta--> Y at X, modulo the image of `incoming`:
//   { v in X : delta(v) = 0 in Y } / < incoming columns >.
// delta_cols[i] is the image of the i-th cover generator of X in cover
// coordinates of Y; incoming columns live in cover coordinates of X.
FPModule homology_of(const FPModule& X, const FPModule& Y,
                     const std::vector<Vec>& delta_cols,
                     const std::vector<Vec>& incoming_cols);

// H_i(res tensor N): homology of the chain complex obtained by tensoring a
// resolution with N.
FPModule chain_homology_tensor(const Resolution& res, const FPModule& N, int i);
// H^i(Hom(res, N)): cohomology of the cochain complex Hom(-, N).
FPModule cochain_homology_hom(const Resolution& res, const FPModule& N, int i);

// Tor_i^R(M, N); index 0 is the minimal presentation of the tensor product.
FPModule tor(const FPModule& M, const FPModule& N, int i);
// Ext^i_R(M, N).
FPModule ext(const FPModule& M, const FPModule& N, int i);

// Smallest i <= depth(R) with Ext^i(M, R) != 0; nullopt if the bounded
// search is exhausted. InputError on the zero module.
std::optional<int> grade(const FPModule& M);

// Hom_R(T, R) as a subquotient of the graded dual of the cover; `gens` are
// the functionals (rows of the evaluation pairing) aligned with the cover of
// the returned module.
SubquotientResult dual_module(const FPModule& t);

enum class Outcome { Holds, Fails, Inconclusive };
const char* outcome_name(Outcome o);

struct TorVerdict {
  Outcome outcome;
  // Fails: the first index i >= 1 with Tor_i(M, N) != 0.
  std::optional<int> fail_index;
  std::optional<FPModule> witness;
  // Inconclusive: vanishing verified for 1..bound only.
  std::optional<int> checked_bound;
};

// Decides whether Tor_i(M, N) = 0 for all i >= 1. Rigorous (Holds/Fails)
// whenever either module has a finite resolution discovered within
// `bound` + 1 steps; otherwise a truncated check up to `bound`.
TorVerdict is_tor_independent(const FPModule& M, const FPModule& N, int bound);

// Bounded test for total reflexivity: vanishing Ext against the ring for the
// module and its dual in the range 1..bound, plus an exact biduality check
// (injective evaluation with matching Hilbert functions up to dmax).
bool totally_reflexive_bounded(const FPModule& t, int bound, int dmax);

struct GdimResult {
  std::optional<int> gdim;
  Outcome outcome;  // Holds or Inconclusive
  int bound;
};

// Smallest g <= depth(R) whose g-th syzygy passes the bounded total
// reflexivity test; Inconclusive when none does.
GdimResult gdim_estimate(const FPModule& m, int bound, int dmax);

}  // namespace depthlab
