#include "depthlab/fpmodule.hpp"

#include <algorithm>

namespace depthlab {

namespace {

void check_entry_vars(const Ring& ring, const Vec& v) {
  for (const Poly& p : v) {
    if (!p.is_zero() && p.lead().mono.nvars() != ring.nvars()) {
      throw ShapeError("polynomial entry has the wrong variable count");
    }
  }
}

Vec nf_entries(const Ring& ring, Vec v) {
  for (Poly& p : v) p = ring.nf(p);
  return v;
}

// Projection of a syzygy in S^(prefix + T) onto its last T coordinates.
Vec tail_block(const Vec& s, int prefix, int T) {
  return Vec(s.begin() + prefix, s.begin() + prefix + T);
}

}  // namespace

// ---------------------------------------------------------------------------
// ModuleMap

ModuleMap make_map(RingPtr ring, FreeModule target, FreeModule source,
                   std::vector<Vec> cols) {
  if (!ring) throw RingError("map over a null ring");
  if (static_cast<int>(cols.size()) != source.rank()) {
    throw ShapeError("map has " + std::to_string(cols.size()) +
                     " columns but source rank is " +
                     std::to_string(source.rank()));
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Vec& c = cols[j];
    if (static_cast<int>(c.size()) != target.rank()) {
      throw ShapeError("map column " + std::to_string(j) +
                       " does not match the target rank");
    }
    check_entry_vars(*ring, c);
    c = nf_entries(*ring, std::move(c));
    if (!vec_is_homogeneous(target, c)) {
      throw GradingError("map column " + std::to_string(j) +
                         " is not homogeneous");
    }
    if (!vec_is_zero(c) &&
        vec_degree(target, c) != source.twists[j]) {
      throw GradingError("map column " + std::to_string(j) +
                         " has degree " + std::to_string(vec_degree(target, c)) +
                         " but its source twist is " +
                         std::to_string(source.twists[j]));
    }
  }
  return ModuleMap{std::move(ring), std::move(target), std::move(source),
                   std::move(cols)};
}

ModuleMap zero_map(RingPtr ring, FreeModule target, FreeModule source) {
  std::vector<Vec> cols(static_cast<std::size_t>(source.rank()),
                        vec_zero(target.rank()));
  return ModuleMap{std::move(ring), std::move(target), std::move(source),
                   std::move(cols)};
}

Vec map_apply(const ModuleMap& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.source.rank()) {
    throw ShapeError("element does not match the map source rank");
  }
  const PrimeField& F = m.ring->field();
  Vec out = vec_zero(m.target.rank());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    out = vec_add(F, out, vec_times_poly(F, m.cols[j], v[j]));
  }
  return nf_entries(*m.ring, std::move(out));
}

ModuleMap map_compose(const ModuleMap& a, const ModuleMap& b) {
  Ring::require_same(a.ring, b.ring);
  if (a.source != b.target) {
    throw ShapeError("composition shape mismatch: inner free modules differ");
  }
  std::vector<Vec> cols;
  cols.reserve(b.cols.size());
  for (const Vec& c : b.cols) cols.push_back(map_apply(a, c));
  return ModuleMap{a.ring, a.target, b.source, std::move(cols)};
}

bool map_is_zero(const ModuleMap& m) {
  for (const Vec& c : m.cols) {
    if (!vec_is_zero(c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FPModule basics

FPModule::FPModule(RingPtr ring, FreeModule cover, std::vector<Vec> relations)
    : ring_(std::move(ring)),
      cover_(std::move(cover)),
      rels_(std::move(relations)),
      state_(std::make_shared<State>()) {
  if (!ring_) throw RingError("module over a null ring");
  for (std::size_t j = 0; j < rels_.size(); ++j) {
    Vec& r = rels_[j];
    if (static_cast<int>(r.size()) != cover_.rank()) {
      throw ShapeError("relation " + std::to_string(j) +
                       " does not match the cover rank");
    }
    check_entry_vars(*ring_, r);
    if (!vec_is_homogeneous(cover_, r)) {
      throw GradingError("relation " + std::to_string(j) + " is not homogeneous");
    }
    r = nf_entries(*ring_, std::move(r));
  }
}

int FPModule::min_twist() const {
  int m = 0;
  bool first = true;
  for (int t : cover_.twists) {
    if (first || t < m) m = t;
    first = false;
  }
  return m;
}

const std::vector<Vec>& FPModule::zero_submodule_basis() const {
  {
    std::lock_guard<std::mutex> lk(state_->mu);
    if (state_->zero_gb_ready) return state_->zero_gb;
  }
  std::vector<Vec> gens = ideal_times_free(*ring_, cover_);
  int frozen = static_cast<int>(gens.size());
  gens.insert(gens.end(), rels_.begin(), rels_.end());
  GBOptions opt;
  opt.frozen_prefix = frozen;
  opt.nvars = ring_->nvars();
  std::vector<Vec> gb = buchberger(ring_->field(), gens, opt).basis;
  std::lock_guard<std::mutex> lk(state_->mu);
  if (!state_->zero_gb_ready) {
    state_->zero_gb = std::move(gb);
    state_->zero_gb_ready = true;
  }
  return state_->zero_gb;
}

Vec FPModule::element_nf(const Vec& v) const {
  if (static_cast<int>(v.size()) != cover_.rank()) {
    throw ShapeError("element does not match the cover rank");
  }
  return normal_form(ring_->field(), zero_submodule_basis(), v);
}

bool FPModule::element_is_zero(const Vec& v) const {
  return vec_is_zero(element_nf(v));
}

bool FPModule::is_zero() const {
  {
    std::lock_guard<std::mutex> lk(state_->mu);
    if (state_->zero) return *state_->zero;
  }
  bool z = true;
  for (int i = 0; i < cover_.rank() && z; ++i) {
    Vec e = vec_zero(cover_.rank());
    e[static_cast<std::size_t>(i)] =
        Poly::from_term(1, Monomial::one(ring_->nvars()));
    if (!element_is_zero(e)) z = false;
  }
  std::lock_guard<std::mutex> lk(state_->mu);
  if (!state_->zero) state_->zero = z;
  return *state_->zero;
}

int FPModule::hilbert_value(int d) const {
  {
    std::lock_guard<std::mutex> lk(state_->mu);
    auto it = state_->hf.find(d);
    if (it != state_->hf.end()) return it->second;
  }
  const std::vector<Vec>& gb = zero_submodule_basis();
  // Lead monomials by position.
  std::vector<std::vector<Monomial>> leads(
      static_cast<std::size_t>(cover_.rank()));
  for (const Vec& g : gb) {
    auto l = vec_lead(g);
    leads[static_cast<std::size_t>(l->pos)].push_back(l->mono);
  }
  int count = 0;
  for (int i = 0; i < cover_.rank(); ++i) {
    int keep_deg = d - cover_.twists[i];
    if (keep_deg < 0) continue;
    for (const Monomial& m : monomials_of_degree(ring_->nvars(), keep_deg)) {
      bool standard = true;
      for (const Monomial& l : leads[static_cast<std::size_t>(i)]) {
        if (l.divides(m)) {
          standard = false;
          break;
        }
      }
      if (standard) ++count;
    }
  }
  std::lock_guard<std::mutex> lk(state_->mu);
  state_->hf.emplace(d, count);
  return count;
}

std::map<int, int> FPModule::hilbert_function(int dmax) const {
  std::map<int, int> out;
  for (int d = min_twist(); d <= dmax; ++d) out[d] = hilbert_value(d);
  return out;
}

bool same_hilbert_function(const FPModule& a, const FPModule& b, int dmax) {
  int lo = std::min(a.min_twist(), b.min_twist());
  for (int d = lo; d <= dmax; ++d) {
    if (a.hilbert_value(d) != b.hilbert_value(d)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

FPModule free_fp(RingPtr ring, std::vector<int> twists) {
  return FPModule(std::move(ring), FreeModule(std::move(twists)), {});
}

FPModule ring_as_module(RingPtr ring) { return free_fp(std::move(ring), {0}); }

FPModule residue_field(RingPtr ring) {
  std::vector<Vec> rels;
  for (int i = 0; i < ring->nvars(); ++i) {
    rels.push_back(Vec{ring->variable(i)});
  }
  return FPModule(std::move(ring), FreeModule({0}), std::move(rels));
}

FPModule zero_fp(RingPtr ring) {
  return FPModule(std::move(ring), FreeModule(), {});
}

FPModule cokernel(const ModuleMap& m) {
  return FPModule(m.ring, m.target, m.cols);
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  Ring::require_same(a.ring(), b.ring());
  std::vector<int> twists = a.cover().twists;
  twists.insert(twists.end(), b.cover().twists.begin(), b.cover().twists.end());
  std::vector<Vec> rels;
  for (const Vec& r : a.relations()) {
    Vec v = r;
    v.resize(twists.size());
    rels.push_back(std::move(v));
  }
  for (const Vec& r : b.relations()) {
    Vec v = vec_zero(static_cast<int>(twists.size()));
    std::copy(r.begin(), r.end(),
              v.begin() + a.cover().rank());
    rels.push_back(std::move(v));
  }
  return FPModule(a.ring(), FreeModule(std::move(twists)), std::move(rels));
}

FPModule shift(const FPModule& m, int a) {
  std::vector<int> twists = m.cover().twists;
  for (int& t : twists) t += a;
  return FPModule(m.ring(), FreeModule(std::move(twists)), m.relations());
}

FPModule tensor_product(const FPModule& a, const FPModule& b) {
  Ring::require_same(a.ring(), b.ring());
  const int ra = a.cover().rank();
  const int rb = b.cover().rank();
  std::vector<int> twists(static_cast<std::size_t>(ra) * rb);
  for (int i = 0; i < ra; ++i) {
    for (int j = 0; j < rb; ++j) {
      twists[static_cast<std::size_t>(i) * rb + j] =
          a.cover().twists[i] + b.cover().twists[j];
    }
  }
  std::vector<Vec> rels;
  rels.reserve(a.relations().size() * rb + b.relations().size() * ra);
  for (const Vec& c : a.relations()) {
    for (int j = 0; j < rb; ++j) {
      Vec v = vec_zero(ra * rb);
      for (int i = 0; i < ra; ++i) {
        v[static_cast<std::size_t>(i) * rb + j] = c[static_cast<std::size_t>(i)];
      }
      rels.push_back(std::move(v));
    }
  }
  for (const Vec& c : b.relations()) {
    for (int i = 0; i < ra; ++i) {
      Vec v = vec_zero(ra * rb);
      for (int j = 0; j < rb; ++j) {
        v[static_cast<std::size_t>(i) * rb + j] = c[static_cast<std::size_t>(j)];
      }
      rels.push_back(std::move(v));
    }
  }
  return FPModule(a.ring(), FreeModule(std::move(twists)), std::move(rels));
}

FPModule as_ambient(const FPModule& m) {
  if (m.ring()->is_ambient()) return m;
  std::vector<Vec> rels = m.relations();
  std::vector<Vec> block = ideal_times_free(*m.ring(), m.cover());
  rels.insert(rels.end(), block.begin(), block.end());
  return FPModule(m.ring()->ambient(), m.cover(), std::move(rels));
}

FPModule quotient_mod_element(const FPModule& m, const Poly& x, QuotientRing how) {
  if (!x.is_homogeneous()) {
    throw GradingError("quotient element is not homogeneous");
  }
  if (how == QuotientRing::Reduced) {
    RingPtr rbar = m.ring()->quotient_by(x);
    return FPModule(rbar, m.cover(), m.relations());
  }
  std::vector<Vec> rels = m.relations();
  for (int i = 0; i < m.cover().rank(); ++i) {
    Vec v = vec_zero(m.cover().rank());
    v[static_cast<std::size_t>(i)] = x;
    rels.push_back(std::move(v));
  }
  return FPModule(m.ring(), m.cover(), std::move(rels));
}

// ---------------------------------------------------------------------------
// Subquotients and kernels

std::vector<Vec> ideal_times_free(const Ring& ring, const FreeModule& F) {
  std::vector<Vec> out;
  out.reserve(ring.relation_basis().size() * static_cast<std::size_t>(F.rank()));
  for (const Poly& g : ring.relation_basis()) {
    for (int i = 0; i < F.rank(); ++i) {
      Vec v = vec_zero(F.rank());
      v[static_cast<std::size_t>(i)] = g;
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
    auto la = vec_lead(a);
    auto lb = vec_lead(b);
    return top_compare(la->mono, la->pos, lb->mono, lb->pos) == Ordering::LT;
  });
  return out;
}

SubquotientResult subquotient(const FPModule& parent, std::vector<Vec> gens) {
  const PrimeField& F = parent.ring()->field();
  std::vector<Vec> kept;
  kept.reserve(gens.size());
  for (Vec& g : gens) {
    Vec h = parent.element_nf(g);
    if (!vec_is_zero(h)) kept.push_back(std::move(h));
  }
  const std::vector<Vec>& Z = parent.zero_submodule_basis();
  std::vector<int> twists;
  twists.reserve(kept.size());
  for (const Vec& g : kept) twists.push_back(vec_degree(parent.cover(), g));

  std::vector<Vec> combined = Z;
  combined.insert(combined.end(), kept.begin(), kept.end());
  std::vector<Vec> syz =
      syzygy_generators(F, combined, static_cast<int>(Z.size()),
                        parent.ring()->nvars());
  std::vector<Vec> rels;
  for (const Vec& s : syz) {
    Vec c = tail_block(s, static_cast<int>(Z.size()),
                       static_cast<int>(kept.size()));
    c = nf_entries(*parent.ring(), std::move(c));
    if (!vec_is_zero(c)) rels.push_back(std::move(c));
  }
  FPModule mod(parent.ring(), FreeModule(std::move(twists)), std::move(rels));
  return SubquotientResult{std::move(mod), std::move(kept)};
}

std::vector<Vec> kernel_gens(const ModuleMap& d) {
  const PrimeField& F = d.ring->field();
  std::vector<Vec> combined = ideal_times_free(*d.ring, d.target);
  const int frozen = static_cast<int>(combined.size());
  combined.insert(combined.end(), d.cols.begin(), d.cols.end());
  std::vector<Vec> syz =
      syzygy_generators(F, combined, frozen, d.ring->nvars());
  std::vector<Vec> out;
  for (const Vec& s : syz) {
    Vec c = tail_block(s, frozen, d.source.rank());
    c = nf_entries(*d.ring, std::move(c));
    if (!vec_is_zero(c)) out.push_back(std::move(c));
  }
  return out;
}

FPModule colon_kernel(const FPModule& m, const Poly& x) {
  if (!x.is_homogeneous()) {
    throw GradingError("colon element is not homogeneous");
  }
  const PrimeField& F = m.ring()->field();
  const std::vector<Vec>& Z = m.zero_submodule_basis();
  std::vector<Vec> combined = Z;
  const int frozen = static_cast<int>(combined.size());
  for (int i = 0; i < m.cover().rank(); ++i) {
    Vec v = vec_zero(m.cover().rank());
    v[static_cast<std::size_t>(i)] = m.ring()->nf(x);
    combined.push_back(std::move(v));
  }
  std::vector<Vec> syz =
      syzygy_generators(F, combined, frozen, m.ring()->nvars());
  std::vector<Vec> numer;
  for (const Vec& s : syz) {
    Vec c = tail_block(s, frozen, m.cover().rank());
    if (!vec_is_zero(c)) numer.push_back(std::move(c));
  }
  return subquotient(m, std::move(numer)).module;
}

bool regular_on(const FPModule& m, const Poly& x) {
  return colon_kernel(m, x).is_zero();
}

// ---------------------------------------------------------------------------
// Minimal generators and minimal presentations

std::vector<Vec> minimal_generators(const RingPtr& ring, const FreeModule& F,
                                    std::vector<Vec> gens) {
  const PrimeField& f = ring->field();
  struct Cand {
    Vec v;
    int deg;
    std::size_t idx;
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Vec h = nf_entries(*ring, std::move(gens[i]));
    if (vec_is_zero(h)) continue;
    int d = vec_degree(F, h);
    cands.push_back(Cand{std::move(h), d, i});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.idx < b.idx;
  });
  std::vector<Vec> base = ideal_times_free(*ring, F);
  std::vector<Vec> kept;
  std::vector<Vec> gb = base;  // already a reduced basis
  for (Cand& c : cands) {
    if (vec_is_zero(normal_form(f, gb, c.v))) continue;
    kept.push_back(std::move(c.v));
    std::vector<Vec> combined = base;
    combined.insert(combined.end(), kept.begin(), kept.end());
    GBOptions opt;
    opt.frozen_prefix = static_cast<int>(base.size());
    opt.nvars = ring->nvars();
    gb = buchberger(f, combined, opt).basis;
  }
  return kept;
}

namespace {

FPModule compute_minimal(const FPModule& M) {
  const Ring& R = *M.ring();
  const PrimeField& F = R.field();
  std::vector<int> tw = M.cover().twists;
  std::vector<Vec> cols = M.relations();

  for (;;) {
    int pi = -1, pj = -1;
    for (std::size_t j = 0; j < cols.size() && pj < 0; ++j) {
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        const Poly& e = cols[j][i];
        if (!e.is_zero() && e.degree() == 0) {
          pi = static_cast<int>(i);
          pj = static_cast<int>(j);
          break;
        }
      }
    }
    if (pj < 0) break;
    PrimeField::Elem inv =
        F.inverse(cols[static_cast<std::size_t>(pj)][static_cast<std::size_t>(pi)]
                      .lead()
                      .coeff);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(j) == pj) continue;
      const Poly& a = cols[j][static_cast<std::size_t>(pi)];
      if (a.is_zero()) continue;
      Poly factor = poly_scale(F, inv, a);
      cols[j] = vec_sub(F, cols[j],
                        vec_times_poly(F, cols[static_cast<std::size_t>(pj)], factor));
      cols[j] = nf_entries(R, std::move(cols[j]));
    }
    cols.erase(cols.begin() + pj);
    tw.erase(tw.begin() + pi);
    for (Vec& c : cols) c.erase(c.begin() + pi);
  }

  FreeModule cover(std::move(tw));
  std::vector<Vec> rels = minimal_generators(M.ring(), cover, std::move(cols));
  return FPModule(M.ring(), cover, std::move(rels));
}

}  // namespace

const FPModule& FPModule::minimal() const {
  {
    std::lock_guard<std::mutex> lk(state_->mu);
    if (state_->minimal) return *state_->minimal;
  }
  auto result = std::make_shared<const FPModule>(compute_minimal(*this));
  std::lock_guard<std::mutex> lk(state_->mu);
  if (!state_->minimal) state_->minimal = std::move(result);
  return *state_->minimal;
}

FPModule minimal_presentation(const FPModule& m) { return m.minimal(); }

}  // namespace depthlab
