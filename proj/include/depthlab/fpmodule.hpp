#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "depthlab/ring.hpp"

namespace depthlab {

class Resolution;

// A graded map between free R-modules, stored by columns: cols[j] is the
// image of the j-th source basis vector, an element of R^{target.rank()}.
// Entries are kept in normal form modulo the ring relations. Column j must
// be homogeneous of degree source.twists[j].
struct ModuleMap {
  RingPtr ring;
  FreeModule target;
  FreeModule source;
  std::vector<Vec> cols;
};

ModuleMap make_map(RingPtr ring, FreeModule target, FreeModule source,
                   std::vector<Vec> cols);
ModuleMap zero_map(RingPtr ring, FreeModule target, FreeModule source);
Vec map_apply(const ModuleMap& m, const Vec& v);
ModuleMap map_compose(const ModuleMap& a, const ModuleMap& b);
bool map_is_zero(const ModuleMap& m);

// A finitely presented graded module M = R^cover / <relations>. Relations
// are columns in cover coordinates, homogeneous with respect to the cover
// twists. Instances share an internally synchronized cache of derived data
// (zero test, membership basis, Hilbert values, depth, resolutions).
class FPModule {
 public:
  FPModule(RingPtr ring, FreeModule cover, std::vector<Vec> relations);

  const RingPtr& ring() const { return ring_; }
  const FreeModule& cover() const { return cover_; }
  const std::vector<Vec>& relations() const { return rels_; }
  int min_twist() const;

  // True iff every cover generator lies in <relations> + I*cover.
  bool is_zero() const;
  // Reduced ambient Gröbner basis of <relations> + I*cover: the submodule of
  // S^cover whose classes are zero in M.
  const std::vector<Vec>& zero_submodule_basis() const;
  // dim_k M_d for min_twist() <= d <= dmax.
  std::map<int, int> hilbert_function(int dmax) const;
  int hilbert_value(int d) const;

  // Canonical representative of an element given in cover coordinates.
  Vec element_nf(const Vec& v) const;
  bool element_is_zero(const Vec& v) const;

  // Minimal presentation: no unit entries, no redundant relations; the
  // cover of the result is a minimal generating set.
  const FPModule& minimal() const;

  // Minimal free resolution over the ring, carried to at least
  // `min_length` maps (or to completion, whichever comes first); cached and
  // extended on demand. Defined alongside the resolution machinery.
  std::shared_ptr<const Resolution> resolution(int min_length) const;
  // Complete minimal free resolution of the module regarded over the
  // ambient polynomial ring.
  std::shared_ptr<const Resolution> ambient_resolution() const;

  // depth over the ambient ring of the maximal ideal on the module
  // (equals depth over the quotient ring). InputError on the zero module.
  int depth() const;

 private:
  struct State {
    std::mutex mu;
    std::optional<bool> zero;
    std::optional<int> depth;
    bool zero_gb_ready = false;
    std::vector<Vec> zero_gb;
    std::map<int, int> hf;
    std::shared_ptr<const FPModule> minimal;
    std::shared_ptr<const Resolution> res_ring;
    std::shared_ptr<const Resolution> res_ambient;
  };

  RingPtr ring_;
  FreeModule cover_;
  std::vector<Vec> rels_;
  std::shared_ptr<State> state_;
};

FPModule free_fp(RingPtr ring, std::vector<int> twists);
FPModule ring_as_module(RingPtr ring);
// k = R/m, the residue field in degree zero.
FPModule residue_field(RingPtr ring);
FPModule zero_fp(RingPtr ring);
FPModule cokernel(const ModuleMap& m);
FPModule direct_sum(const FPModule& a, const FPModule& b);
// Shifts all generator degrees by `a` (the twist M(-a)).
FPModule shift(const FPModule& m, int a);
FPModule tensor_product(const FPModule& a, const FPModule& b);
// The same presentation regarded over the ambient polynomial ring, with
// I*cover added to the relations.
FPModule as_ambient(const FPModule& m);

enum class QuotientRing { Same, Reduced };
// M/xM, either as a module over the same ring or over R/(x).
FPModule quotient_mod_element(const FPModule& m, const Poly& x, QuotientRing how);

// (0 :_M x) = { v in M : x v = 0 }, as a module over the same ring.
FPModule colon_kernel(const FPModule& m, const Poly& x);
// x is a regular element on M iff (0 :_M x) = 0. Exact test.
bool regular_on(const FPModule& m, const Poly& x);

// The subquotient (<gens> + Z)/Z of M = S^cover/Z: cover twists are the
// generator degrees, relations are all coordinate vectors c with
// sum_t c_t gens[t] in Z. Generators that are zero in M are dropped; `gens`
// in the result is the kept, normalized list aligned with the cover.
struct SubquotientResult {
  FPModule module;
  std::vector<Vec> gens;
};
SubquotientResult subquotient(const FPModule& parent, std::vector<Vec> gens);

// Reduced Gröbner basis of I*F (one copy of the relation basis per
// position), sorted ascending by lead.
std::vector<Vec> ideal_times_free(const Ring& ring, const FreeModule& F);

// Generators over R of ker(d) between free modules (first-block syzygy
// computation over the ambient ring).
std::vector<Vec> kernel_gens(const ModuleMap& d);

// A minimal homogeneous generating subset of the R-span of `gens` inside
// R^F: candidates are processed in ascending degree and kept exactly when
// they are not in the span of the kept ones so far.
std::vector<Vec> minimal_generators(const RingPtr& ring, const FreeModule& F,
                                    std::vector<Vec> gens);

FPModule minimal_presentation(const FPModule& m);

// True when the Hilbert functions agree for all degrees up to dmax.
bool same_hilbert_function(const FPModule& a, const FPModule& b, int dmax);

}  // namespace depthlab
