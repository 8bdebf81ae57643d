#pragma once

#include <vector>

#include "depthlab/fpmodule.hpp"

namespace depthlab {

// Hard cap on resolution length; exceeding it raises BoundError.
inline constexpr int kMaxResolutionLength = 64;

// A chain of free modules F_0 <- F_1 <- ... with maps()[i] = d_{i+1} from
// free_at(i+1) to free_at(i). For a minimal free resolution of M, F_0 is the
// minimal cover of M and maps()[0] its minimal presentation matrix. The
// resolution is complete when the last computed map has source rank zero.
class Resolution {
 public:
  Resolution(RingPtr ring, std::vector<FreeModule> frees,
             std::vector<ModuleMap> maps);

  const RingPtr& ring() const { return ring_; }
  int nmaps() const { return static_cast<int>(maps_.size()); }
  const std::vector<ModuleMap>& maps() const { return maps_; }
  const ModuleMap& map(int i) const;  // d_{i+1}
  const FreeModule& free_at(int i) const;
  bool complete() const;
  // Largest i with rank F_i > 0 (-1 if every term vanishes). Requires a
  // complete resolution; BoundError otherwise.
  int proj_dim() const;

 private:
  RingPtr ring_;
  std::vector<FreeModule> frees_;
  std::vector<ModuleMap> maps_;
};

// Extends `res` in place until it has at least `min_length` maps or is
// complete. Every new map is certified on the spot: its composite with the
// previous map must vanish and its entries must lie in the maximal ideal.
void extend_resolution(Resolution& res, int min_length);

// Minimal free resolution of M over its own ring with at least min_length
// maps (or complete). Convenience for FPModule::resolution.
std::shared_ptr<const Resolution> free_resolution(const FPModule& m, int min_length);

// Projective dimension over the ring, when the cached/extendable resolution
// completes within `bound` maps.
std::optional<int> proj_dim_within(const FPModule& m, int bound);
// Projective dimension over the ambient polynomial ring (always finite).
int ambient_proj_dim(const FPModule& m);

// The i-th syzygy module coker(d_{i+1}); syzygy_module(M, 0) is the minimal
// presentation of M itself.
FPModule syzygy_module(const FPModule& m, int i);

// The Koszul complex on the variables of an ambient polynomial ring: the
// minimal free resolution of the residue field, built combinatorially
// (rank C(n,i) in homological degree i, twists i).
Resolution koszul_complex(const RingPtr& ambient);

struct ResolutionCertificate {
  bool composites_zero = true;
  bool entries_in_maximal_ideal = true;
  bool exact = true;           // im d_{i+1} = ker d_i at every inner step
  bool presents_module = true; // coker d_1 matches the given module
  bool ok() const {
    return composites_zero && entries_in_maximal_ideal && exact && presents_module;
  }
};

// Independent certificate of a computed resolution: composites vanish,
// entries avoid unit pivots, kernels match images both ways, and F_0 with
// d_1 presents `m`.
ResolutionCertificate verify_resolution(const Resolution& res, const FPModule& m);

}  // namespace depthlab
