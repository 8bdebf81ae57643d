#include "depthlab/homology.hpp"

namespace depthlab {

namespace {

FreeModule tensor_free(const FreeModule& A, const FreeModule& B) {
  std::vector<int> tw(static_cast<std::size_t>(A.rank()) * B.rank());
  for (int t = 0; t < A.rank(); ++t) {
    for (int k = 0; k < B.rank(); ++k) {
      tw[static_cast<std::size_t>(t) * B.rank() + k] = A.twists[t] + B.twists[k];
    }
  }
  return FreeModule(std::move(tw));
}

FreeModule hom_free(const FreeModule& A, const FreeModule& B) {
  std::vector<int> tw(static_cast<std::size_t>(A.rank()) * B.rank());
  for (int t = 0; t < A.rank(); ++t) {
    for (int k = 0; k < B.rank(); ++k) {
      tw[static_cast<std::size_t>(t) * B.rank() + k] = B.twists[k] - A.twists[t];
    }
  }
  return FreeModule(std::move(tw));
}

// Relations id_A (x) rels(N) on a cover indexed (t, k) -> t*rank(N)+k.
std::vector<Vec> id_tensor_rels(int arank, const FPModule& N) {
  const int nr = N.cover().rank();
  std::vector<Vec> out;
  out.reserve(N.relations().size() * static_cast<std::size_t>(arank));
  for (const Vec& r : N.relations()) {
    for (int t = 0; t < arank; ++t) {
      Vec v = vec_zero(arank * nr);
      for (int k = 0; k < nr; ++k) {
        v[static_cast<std::size_t>(t) * nr + k] = r[static_cast<std::size_t>(k)];
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

// For d: A -> B, the columns of d (x) id_N: (A tensor N) -> (B tensor N),
// indexed (a, k) -> entries at (b, k) equal to d.cols[a][b].
std::vector<Vec> tensor_id_cols(const ModuleMap& d, int nrank) {
  const int ra = d.source.rank();
  const int rb = d.target.rank();
  std::vector<Vec> out(static_cast<std::size_t>(ra) * nrank);
  for (int a = 0; a < ra; ++a) {
    for (int k = 0; k < nrank; ++k) {
      Vec v = vec_zero(rb * nrank);
      for (int b = 0; b < rb; ++b) {
        v[static_cast<std::size_t>(b) * nrank + k] =
            d.cols[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
      out[static_cast<std::size_t>(a) * nrank + k] = std::move(v);
    }
  }
  return out;
}

// For d: A -> B, the columns of Hom(d, N): Hom(B, N) -> Hom(A, N),
// indexed (b, k) -> entries at (a, k) equal to d.cols[a][b].
std::vector<Vec> hom_id_cols(const ModuleMap& d, int nrank) {
  const int ra = d.source.rank();
  const int rb = d.target.rank();
  std::vector<Vec> out(static_cast<std::size_t>(rb) * nrank);
  for (int b = 0; b < rb; ++b) {
    for (int k = 0; k < nrank; ++k) {
      Vec v = vec_zero(ra * nrank);
      for (int a = 0; a < ra; ++a) {
        v[static_cast<std::size_t>(a) * nrank + k] =
            d.cols[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
      out[static_cast<std::size_t>(b) * nrank + k] = std::move(v);
    }
  }
  return out;
}

}  // namespace

FPModule homology_of(const FPModule& X, const FPModule& Y,
                     const std::vector<Vec>& delta_cols,
                     const std::vector<Vec>& incoming_cols) {
  Ring::require_same(X.ring(), Y.ring());
  const RingPtr& ring = X.ring();
  const PrimeField& F = ring->field();
  if (static_cast<int>(delta_cols.size()) != X.cover().rank()) {
    throw ShapeError("differential has the wrong number of columns");
  }
  for (const Vec& c : delta_cols) {
    if (static_cast<int>(c.size()) != Y.cover().rank()) {
      throw ShapeError("differential column does not match the target cover");
    }
  }
  // Kernel lifts: coordinates c with sum c_i delta(e_i) zero in Y.
  std::vector<Vec> combined = Y.zero_submodule_basis();
  const int frozen = static_cast<int>(combined.size());
  combined.insert(combined.end(), delta_cols.begin(), delta_cols.end());
  std::vector<Vec> syz = syzygy_generators(F, combined, frozen, ring->nvars());
  std::vector<Vec> numer;
  numer.reserve(syz.size());
  for (const Vec& s : syz) {
    Vec c(s.begin() + frozen, s.end());
    if (!vec_is_zero(c)) numer.push_back(std::move(c));
  }
  std::vector<Vec> rels = X.relations();
  rels.insert(rels.end(), incoming_cols.begin(), incoming_cols.end());
  FPModule quotiented(ring, X.cover(), std::move(rels));
  return subquotient(quotiented, std::move(numer)).module;
}

FPModule chain_homology_tensor(const Resolution& res, const FPModule& N, int i) {
  Ring::require_same(res.ring(), N.ring());
  if (i < 0) throw InputError("negative homological index");
  if (i >= res.nmaps()) {
    if (res.complete()) return zero_fp(N.ring());
    throw BoundError("resolution is too short for the requested homology");
  }
  const RingPtr& ring = N.ring();
  const int nr = N.cover().rank();
  const FreeModule& Fi = res.free_at(i);
  FPModule X(ring, tensor_free(Fi, N.cover()), id_tensor_rels(Fi.rank(), N));
  std::vector<Vec> delta;
  FPModule Y = zero_fp(ring);
  if (i >= 1) {
    const ModuleMap& di = res.map(i - 1);  // F_i -> F_{i-1}
    Y = FPModule(ring, tensor_free(res.free_at(i - 1), N.cover()),
                 id_tensor_rels(res.free_at(i - 1).rank(), N));
    delta = tensor_id_cols(di, nr);
  } else {
    delta.assign(static_cast<std::size_t>(X.cover().rank()), Vec());
  }
  std::vector<Vec> incoming = tensor_id_cols(res.map(i), nr);
  return homology_of(X, Y, delta, incoming);
}

FPModule cochain_homology_hom(const Resolution& res, const FPModule& N, int i) {
  Ring::require_same(res.ring(), N.ring());
  if (i < 0) throw InputError("negative cohomological index");
  if (i >= res.nmaps()) {
    if (i == res.nmaps() && !res.complete()) {
      throw BoundError("resolution is too short for the requested cohomology");
    }
    if (res.complete()) return zero_fp(N.ring());
    throw BoundError("resolution is too short for the requested cohomology");
  }
  const RingPtr& ring = N.ring();
  const int nr = N.cover().rank();
  const FreeModule& Fi = res.free_at(i);
  FPModule X(ring, hom_free(Fi, N.cover()), id_tensor_rels(Fi.rank(), N));
  // delta: Hom(F_i, N) -> Hom(F_{i+1}, N) via d_{i+1}.
  const ModuleMap& dnext = res.map(i);
  FPModule Y(ring, hom_free(res.free_at(i + 1), N.cover()),
             id_tensor_rels(res.free_at(i + 1).rank(), N));
  std::vector<Vec> delta = hom_id_cols(dnext, nr);
  std::vector<Vec> incoming;
  if (i >= 1) {
    incoming = hom_id_cols(res.map(i - 1), nr);
  }
  return homology_of(X, Y, delta, incoming);
}

FPModule tor(const FPModule& M, const FPModule& N, int i) {
  Ring::require_same(M.ring(), N.ring());
  if (i < 0) throw InputError("negative Tor index");
  if (i == 0) return tensor_product(M, N).minimal();
  if (M.is_zero() || N.is_zero()) return zero_fp(M.ring());
  auto res = M.resolution(i + 1);
  if (i >= res->nmaps()) return zero_fp(M.ring());  // complete by contract
  return chain_homology_tensor(*res, N, i);
}

FPModule ext(const FPModule& M, const FPModule& N, int i) {
  Ring::require_same(M.ring(), N.ring());
  if (i < 0) throw InputError("negative Ext index");
  if (M.is_zero() || N.is_zero()) return zero_fp(M.ring());
  auto res = M.resolution(i + 1);
  if (i >= res->nmaps()) return zero_fp(M.ring());
  return cochain_homology_hom(*res, N, i);
}

// ---------------------------------------------------------------------------
// Depth via a double oracle.

int FPModule::depth() const {
  {
    std::lock_guard<std::mutex> lk(state_->mu);
    if (state_->depth) return *state_->depth;
  }
  if (is_zero()) throw InputError("depth of the zero module");
  const int n = ring_->nvars();
  // Route A: Auslander-Buchsbaum over the ambient polynomial ring.
  const int route_a = n - ambient_resolution()->proj_dim();
  // Route B: first nonvanishing Koszul cochain cohomology, computed from an
  // explicit combinatorial complex independent of the resolution machinery.
  FPModule ms = ring_->is_ambient() ? *this : as_ambient(*this);
  Resolution k = koszul_complex(ms.ring());
  int route_b = -1;
  for (int i = 0; i <= n; ++i) {
    if (!cochain_homology_hom(k, ms, i).is_zero()) {
      route_b = i;
      break;
    }
  }
  if (route_b < 0) {
    throw InternalError("no nonvanishing Koszul cohomology for a nonzero module");
  }
  if (route_a != route_b) {
    throw InternalError("depth oracles disagree: " + std::to_string(route_a) +
                        " vs " + std::to_string(route_b));
  }
  std::lock_guard<std::mutex> lk(state_->mu);
  if (!state_->depth) state_->depth = route_a;
  return *state_->depth;
}

std::optional<int> grade(const FPModule& M) {
  if (M.is_zero()) throw InputError("grade of the zero module");
  FPModule rmod = ring_as_module(M.ring());
  const int depth_r = rmod.depth();
  for (int i = 0; i <= depth_r; ++i) {
    if (!ext(M, rmod, i).is_zero()) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Duals, total reflexivity, G-dimension.

SubquotientResult dual_module(const FPModule& t) {
  const RingPtr& ring = t.ring();
  const FreeModule& f0 = t.cover();
  std::vector<int> dual0_tw;
  dual0_tw.reserve(f0.twists.size());
  for (int w : f0.twists) dual0_tw.push_back(-w);
  FreeModule dual0(dual0_tw);

  const std::vector<Vec>& a = t.relations();
  std::vector<int> dual1_tw;
  dual1_tw.reserve(a.size());
  for (const Vec& c : a) dual1_tw.push_back(-vec_degree(f0, c));
  FreeModule dual1(std::move(dual1_tw));

  std::vector<Vec> at_cols(static_cast<std::size_t>(f0.rank()));
  for (int i = 0; i < f0.rank(); ++i) {
    Vec col = vec_zero(static_cast<int>(a.size()));
    for (std::size_t u = 0; u < a.size(); ++u) {
      col[u] = a[u][static_cast<std::size_t>(i)];
    }
    at_cols[static_cast<std::size_t>(i)] = std::move(col);
  }
  ModuleMap at = make_map(ring, dual1, dual0, std::move(at_cols));
  std::vector<Vec> lambdas = kernel_gens(at);
  FPModule parent = free_fp(ring, dual0.twists);
  return subquotient(parent, std::move(lambdas));
}

bool totally_reflexive_bounded(const FPModule& t, int bound, int dmax) {
  if (t.is_zero()) return true;
  const RingPtr& ring = t.ring();
  const PrimeField& F = ring->field();
  FPModule rmod = ring_as_module(ring);
  for (int i = 1; i <= bound; ++i) {
    if (!ext(t, rmod, i).is_zero()) return false;
  }
  SubquotientResult dual = dual_module(t);
  // Sanity: every functional annihilates every relation.
  for (const Vec& lam : dual.gens) {
    for (const Vec& rel : t.relations()) {
      Poly acc;
      for (std::size_t i = 0; i < lam.size(); ++i) {
        acc = poly_add(F, acc, poly_multiply(F, lam[i], rel[i]));
      }
      if (!ring->is_zero_mod(acc)) {
        throw InternalError("dual functional does not annihilate a relation");
      }
    }
  }
  for (int i = 1; i <= bound; ++i) {
    if (!ext(dual.module, rmod, i).is_zero()) return false;
  }
  // Evaluation T -> Hom(T*, R) is injective (the target embeds in a free
  // module indexed by the dual generators, so the kernel can be computed
  // against that free module directly).
  std::vector<int> dual0_tw;
  for (int w : t.cover().twists) dual0_tw.push_back(-w);
  FreeModule dual0(dual0_tw);
  std::vector<int> ev_tw;
  ev_tw.reserve(dual.gens.size());
  for (const Vec& lam : dual.gens) ev_tw.push_back(-vec_degree(dual0, lam));
  FPModule target = free_fp(ring, ev_tw);
  std::vector<Vec> ev_cols(static_cast<std::size_t>(t.cover().rank()));
  for (int i = 0; i < t.cover().rank(); ++i) {
    Vec col = vec_zero(static_cast<int>(dual.gens.size()));
    for (std::size_t s = 0; s < dual.gens.size(); ++s) {
      col[s] = dual.gens[s][static_cast<std::size_t>(i)];
    }
    ev_cols[static_cast<std::size_t>(i)] = std::move(col);
  }
  FPModule ev_kernel = homology_of(t, target, ev_cols, {});
  if (!ev_kernel.is_zero()) return false;
  // Surjectivity up to dmax: matching Hilbert functions of T and T**.
  SubquotientResult bidual = dual_module(dual.module);
  return same_hilbert_function(t, bidual.module, dmax);
}

GdimResult gdim_estimate(const FPModule& m, int bound, int dmax) {
  if (m.is_zero()) throw InputError("G-dimension of the zero module");
  const int depth_r = ring_as_module(m.ring()).depth();
  for (int g = 0; g <= depth_r; ++g) {
    FPModule t = syzygy_module(m, g);
    if (totally_reflexive_bounded(t, bound, dmax)) {
      return GdimResult{g, Outcome::Holds, bound};
    }
  }
  return GdimResult{std::nullopt, Outcome::Inconclusive, bound};
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds:
      return "holds";
    case Outcome::Fails:
      return "fails";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

TorVerdict is_tor_independent(const FPModule& M, const FPModule& N, int bound) {
  Ring::require_same(M.ring(), N.ring());
  if (bound < 0) throw InputError("negative Tor-independence bound");
  TorVerdict v{Outcome::Holds, std::nullopt, std::nullopt, std::nullopt};
  if (M.is_zero() || N.is_zero()) return v;

  auto check_range = [&](const FPModule& a, const FPModule& b, int hi) -> bool {
    for (int i = 1; i <= hi; ++i) {
      FPModule t = tor(a, b, i);
      if (!t.is_zero()) {
        v.outcome = Outcome::Fails;
        v.fail_index = i;
        v.witness = std::move(t);
        return false;
      }
    }
    return true;
  };

  auto res_m = M.resolution(bound + 1);
  if (res_m->complete()) {
    check_range(M, N, res_m->proj_dim());
    return v;
  }
  auto res_n = N.resolution(bound + 1);
  if (res_n->complete()) {
    check_range(N, M, res_n->proj_dim());
    return v;
  }
  if (check_range(M, N, bound)) {
    v.outcome = Outcome::Inconclusive;
    v.checked_bound = bound;
  }
  return v;
}

}  // namespace depthlab
