#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/depth_formula.hpp"

namespace depthlab {

// A reproducible recipe for a batch of module pairs over one ring. When
// `use_known_examples` is set the recipe ignores the random fields and
// materializes the registry of named worked examples instead.
struct InstanceFamily {
  std::string name;
  RingPtr ring;
  int count = 0;               // number of generated pairs
  std::uint64_t seed = 0;
  int gens = 2;                // cover rank of each generated module
  int rels = 2;                // relation rows per module
  int max_deg = 2;             // entry degree bound
  bool positive_depth = true;  // post-compose with the first syzygy
  bool use_known_examples = false;
};

// One named (M, N) pair, optionally with frozen fixture expectations.
struct Instance {
  std::string name;
  RingPtr ring;
  FPModule M;
  FPModule N;
  std::optional<int> expect_depth_m;
  std::optional<int> expect_depth_n;
  std::optional<int> expect_depth_r;
  std::optional<int> expect_depth_tensor;
  std::optional<int> expect_defect;
  std::optional<Outcome> expect_tor;
};

// A random homogeneous presentation with `gens` generators, `rels` relation
// rows and entries of degree at most `max_deg` (at least 1, so the result is
// never zero); minimalized. Identical arguments produce identical modules.
// GenerationError if the bounded retry budget produces only zero modules.
FPModule gen_random_module(const RingPtr& ring, int gens, int rels,
                           int max_deg, std::uint64_t seed);

// The registry of worked examples with frozen expectations:
//  K1: S = F_p[x,y], M = S/(x), N = S/(y) — depths (1,1), depth S = 2,
//      tensor depth 0, defect 0, Tor-independent.
//  K2: R = F_p[x,y]/(xy), M = N = R/(x) — Tor_1 nonzero (the formula's
//      hypotheses fail); all four depths 1.
//  K3: R = F_p[x,y,z]/(x^2+y^2+z^2), M the rank-4 matrix-factorization
//      module, N = R/(z) — Tor-independent with defect 0.
// A fourth slot stays reserved until reference data for it is available.
std::vector<Instance> known_examples();

// The rank-4 maximal Cohen-Macaulay module over the quadric cone in three
// variables, presented by a matrix E with E E^T = (x^2+y^2+z^2) I.
FPModule quadric_mf_module(const RingPtr& r);

// Default instance families: regular rings in two and three variables, one
// quadric hypersurface in two and three variables, and complete
// intersections cut by two relations in three and four variables.
std::vector<InstanceFamily> default_families();

// Materializes the pairs of one family in index order; generated names are
// "<family>[<index>]".
std::vector<Instance> build_family(const InstanceFamily& fam);

}  // namespace depthlab
