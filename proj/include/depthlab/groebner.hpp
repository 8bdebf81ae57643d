#pragma once

#include <vector>

#include "depthlab/free_module.hpp"

namespace depthlab {

struct GBOptions {
  // Track coordinates of every basis element in terms of the input
  // generators and collect a syzygy from every S-pair that reduces to zero.
  // Pair-elimination criteria are disabled in this mode: skipped pairs would
  // lose generators of the syzygy module.
  bool syzygy_mode = false;
  // The first `frozen_prefix` input generators are known to form a Gröbner
  // basis of their own span; pairs inside that block are skipped. (Sound in
  // syzygy mode as well: syzygies supported inside the block project to zero
  // on the remaining coordinates.)
  int frozen_prefix = 0;
  // Inter-reduce the final basis (plain mode).
  bool reduce = true;
  // Variable count for coordinate vectors when it cannot be inferred from
  // the generators (all-zero input).
  int nvars = -1;
};

struct GBResult {
  std::vector<Vec> basis;
  // Syzygy mode only: generators of Syz(input gens), elements of S^T where
  // T = number of input generators.
  std::vector<Vec> syzygies;
};

// Full division algorithm: returns r with v = sum_k q_k * basis[k] + r and
// no term of r divisible by the lead of any basis element (term-over-position
// order). If `quotients` is non-null it receives the q_k.
Vec normal_form(const PrimeField& F, const std::vector<Vec>& basis, const Vec& v,
                std::vector<Poly>* quotients = nullptr);

GBResult buchberger(const PrimeField& F, const std::vector<Vec>& gens,
                    const GBOptions& opt = {});

// Minimalize, tail-reduce, scale monic, and sort by ascending lead. The
// result is the unique reduced Gröbner basis of the span of `basis`
// (assuming `basis` is a Gröbner basis).
std::vector<Vec> reduced_basis(const PrimeField& F, std::vector<Vec> basis);

// Reduced Gröbner basis of the submodule generated by `gens`.
std::vector<Vec> reduced_groebner(const PrimeField& F, const std::vector<Vec>& gens);

// Generators of Syz(gens) in S^T. Positions `0..frozen_prefix-1` of the
// input are assumed to form a Gröbner basis of their own span.
std::vector<Vec> syzygy_generators(const PrimeField& F, const std::vector<Vec>& gens,
                                   int frozen_prefix = 0, int nvars = -1);

// Convenience wrappers for ideals (rank-one case).
std::vector<Poly> reduced_groebner_ideal(const PrimeField& F,
                                         const std::vector<Poly>& gens);
Poly poly_normal_form(const PrimeField& F, const std::vector<Poly>& gb, const Poly& p);

}  // namespace depthlab
