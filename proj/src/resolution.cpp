#include "depthlab/resolution.hpp"

#include <algorithm>

namespace depthlab {

Resolution::Resolution(RingPtr ring, std::vector<FreeModule> frees,
                       std::vector<ModuleMap> maps)
    : ring_(std::move(ring)), frees_(std::move(frees)), maps_(std::move(maps)) {
  if (!ring_) throw RingError("resolution over a null ring");
  if (frees_.size() != maps_.size() + 1) {
    throw ShapeError("resolution needs one more free module than maps");
  }
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].target != frees_[i] || maps_[i].source != frees_[i + 1]) {
      throw ShapeError("resolution map " + std::to_string(i) +
                       " does not match its free modules");
    }
  }
}

const ModuleMap& Resolution::map(int i) const {
  if (i < 0 || i >= nmaps()) {
    throw BoundError("resolution map index " + std::to_string(i) +
                     " out of range (have " + std::to_string(nmaps()) + ")");
  }
  return maps_[static_cast<std::size_t>(i)];
}

const FreeModule& Resolution::free_at(int i) const {
  if (i < 0 || i >= static_cast<int>(frees_.size())) {
    throw BoundError("resolution term index " + std::to_string(i) +
                     " out of range");
  }
  return frees_[static_cast<std::size_t>(i)];
}

bool Resolution::complete() const {
  return !maps_.empty() && maps_.back().source.rank() == 0;
}

int Resolution::proj_dim() const {
  if (!complete()) {
    throw BoundError("projective dimension requires a complete resolution");
  }
  for (int i = static_cast<int>(frees_.size()) - 1; i >= 0; --i) {
    if (frees_[static_cast<std::size_t>(i)].rank() > 0) return i;
  }
  return -1;
}

namespace {

void check_entries_positive_degree(const ModuleMap& m, const char* what) {
  for (const Vec& c : m.cols) {
    for (const Poly& p : c) {
      if (!p.is_zero() && p.terms().back().mono.degree() == 0) {
        throw InternalError(std::string("resolution step is not minimal: ") + what);
      }
    }
  }
}

ModuleMap next_step(const RingPtr& ring, const ModuleMap& last) {
  std::vector<Vec> kg = kernel_gens(last);
  std::vector<Vec> cols = minimal_generators(ring, last.source, std::move(kg));
  std::vector<int> twists;
  twists.reserve(cols.size());
  for (const Vec& c : cols) twists.push_back(vec_degree(last.source, c));
  return make_map(ring, last.source, FreeModule(std::move(twists)),
                  std::move(cols));
}

}  // namespace

void extend_resolution(Resolution& res, int min_length) {
  while (!res.complete() && res.nmaps() < min_length) {
    if (res.nmaps() >= kMaxResolutionLength) {
      throw BoundError("resolution exceeded the hard length cap of " +
                       std::to_string(kMaxResolutionLength));
    }
    const ModuleMap& last = res.maps().back();
    ModuleMap next = next_step(res.ring(), last);
    if (!map_is_zero(map_compose(last, next))) {
      throw InternalError("consecutive resolution maps do not compose to zero");
    }
    check_entries_positive_degree(next, "entries contain units");
    std::vector<FreeModule> frees;
    frees.reserve(static_cast<std::size_t>(res.nmaps()) + 2);
    for (int i = 0; i <= res.nmaps(); ++i) frees.push_back(res.free_at(i));
    frees.push_back(next.source);
    std::vector<ModuleMap> maps = res.maps();
    maps.push_back(std::move(next));
    res = Resolution(res.ring(), std::move(frees), std::move(maps));
  }
}

namespace {

Resolution start_resolution(const FPModule& m) {
  const FPModule& mp = m.minimal();
  FreeModule f0 = mp.cover();
  std::vector<Vec> cols = mp.relations();
  std::vector<int> twists;
  twists.reserve(cols.size());
  for (const Vec& c : cols) twists.push_back(vec_degree(f0, c));
  ModuleMap d1 = make_map(m.ring(), f0, FreeModule(std::move(twists)),
                          std::move(cols));
  check_entries_positive_degree(d1, "presentation has unit entries");
  std::vector<FreeModule> frees{f0, d1.source};
  std::vector<ModuleMap> maps;
  maps.push_back(std::move(d1));
  return Resolution(m.ring(), std::move(frees), std::move(maps));
}

}  // namespace

std::shared_ptr<const Resolution> FPModule::resolution(int min_length) const {
  if (min_length < 1) min_length = 1;
  std::shared_ptr<const Resolution> cur;
  {
    std::lock_guard<std::mutex> lk(state_->mu);
    cur = state_->res_ring;
  }
  if (cur && (cur->complete() || cur->nmaps() >= min_length)) return cur;
  Resolution work = cur ? *cur : start_resolution(*this);
  extend_resolution(work, min_length);
  auto sp = std::make_shared<const Resolution>(std::move(work));
  std::lock_guard<std::mutex> lk(state_->mu);
  if (!state_->res_ring || (!state_->res_ring->complete() &&
                            state_->res_ring->nmaps() < sp->nmaps())) {
    state_->res_ring = sp;
  }
  return state_->res_ring;
}

std::shared_ptr<const Resolution> FPModule::ambient_resolution() const {
  {
    std::lock_guard<std::mutex> lk(state_->mu);
    if (state_->res_ambient) return state_->res_ambient;
  }
  std::shared_ptr<const Resolution> sp;
  if (ring_->is_ambient()) {
    sp = resolution(ring_->nvars() + 1);
  } else {
    sp = as_ambient(*this).resolution(ring_->nvars() + 1);
  }
  if (!sp->complete()) {
    throw InternalError(
        "resolution over the polynomial ring did not terminate within the "
        "variable count");
  }
  std::lock_guard<std::mutex> lk(state_->mu);
  if (!state_->res_ambient) state_->res_ambient = std::move(sp);
  return state_->res_ambient;
}

std::shared_ptr<const Resolution> free_resolution(const FPModule& m,
                                                  int min_length) {
  return m.resolution(min_length);
}

std::optional<int> proj_dim_within(const FPModule& m, int bound) {
  auto res = m.resolution(bound + 1);
  if (!res->complete()) return std::nullopt;
  int pd = res->proj_dim();
  if (pd > bound) return std::nullopt;
  return pd;
}

int ambient_proj_dim(const FPModule& m) {
  return m.ambient_resolution()->proj_dim();
}

FPModule syzygy_module(const FPModule& m, int i) {
  if (i < 0) throw InputError("negative syzygy index");
  if (i == 0) return m.minimal();
  auto res = m.resolution(i + 1);
  if (i < res->nmaps()) return cokernel(res->map(i));
  return zero_fp(m.ring());
}

Resolution koszul_complex(const RingPtr& ambient) {
  if (!ambient->is_ambient()) {
    throw InputError("the Koszul complex is built over a polynomial ring");
  }
  const int n = ambient->nvars();
  // Subsets of {0..n-1} of size i, in lexicographic order.
  std::vector<std::vector<std::vector<int>>> subsets(
      static_cast<std::size_t>(n) + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < n; ++b) {
      if (mask & (1u << b)) s.push_back(b);
    }
    subsets[s.size()].push_back(std::move(s));
  }
  for (auto& level : subsets) std::sort(level.begin(), level.end());

  std::vector<FreeModule> frees;
  for (int i = 0; i <= n; ++i) {
    frees.push_back(FreeModule(std::vector<int>(subsets[static_cast<std::size_t>(i)].size(),
                                                i)));
  }
  frees.push_back(FreeModule());  // terminal zero module

  std::vector<ModuleMap> maps;
  for (int i = 0; i < n; ++i) {
    const auto& tgt_sets = subsets[static_cast<std::size_t>(i)];
    const auto& src_sets = subsets[static_cast<std::size_t>(i) + 1];
    auto index_of = [&](const std::vector<int>& s) {
      auto it = std::lower_bound(tgt_sets.begin(), tgt_sets.end(), s);
      return static_cast<int>(it - tgt_sets.begin());
    };
    std::vector<Vec> cols;
    cols.reserve(src_sets.size());
    for (const auto& T : src_sets) {
      Vec col = vec_zero(static_cast<int>(tgt_sets.size()));
      for (std::size_t j = 0; j < T.size(); ++j) {
        std::vector<int> rest;
        for (std::size_t k = 0; k < T.size(); ++k) {
          if (k != j) rest.push_back(T[k]);
        }
        Poly entry = ambient->variable(T[j]);
        if (j % 2 == 1) entry = poly_neg(ambient->field(), entry);
        col[static_cast<std::size_t>(index_of(rest))] = entry;
      }
      cols.push_back(std::move(col));
    }
    maps.push_back(make_map(ambient, frees[static_cast<std::size_t>(i)],
                            frees[static_cast<std::size_t>(i) + 1],
                            std::move(cols)));
  }
  maps.push_back(zero_map(ambient, frees[static_cast<std::size_t>(n)], FreeModule()));
  return Resolution(ambient, std::move(frees), std::move(maps));
}

ResolutionCertificate verify_resolution(const Resolution& res, const FPModule& m) {
  ResolutionCertificate cert;
  const RingPtr& ring = res.ring();
  const PrimeField& F = ring->field();

  for (int i = 0; i + 1 < res.nmaps(); ++i) {
    if (!map_is_zero(map_compose(res.map(i), res.map(i + 1)))) {
      cert.composites_zero = false;
    }
  }
  for (int i = 0; i < res.nmaps(); ++i) {
    for (const Vec& c : res.map(i).cols) {
      for (const Poly& p : c) {
        if (!p.is_zero() && p.terms().back().mono.degree() == 0) {
          cert.entries_in_maximal_ideal = false;
        }
      }
    }
  }
  // Exactness at F_t (t >= 1): every kernel generator of d_t lies in the
  // image of d_{t+1} (the reverse inclusion is the composite check).
  for (int t = 1; t < res.nmaps(); ++t) {
    std::vector<Vec> kg = kernel_gens(res.map(t - 1));
    std::vector<Vec> span = ideal_times_free(*ring, res.free_at(t));
    int frozen = static_cast<int>(span.size());
    span.insert(span.end(), res.map(t).cols.begin(), res.map(t).cols.end());
    GBOptions opt;
    opt.frozen_prefix = frozen;
    opt.nvars = ring->nvars();
    std::vector<Vec> gb = buchberger(F, span, opt).basis;
    for (const Vec& g : kg) {
      if (!vec_is_zero(normal_form(F, gb, g))) {
        cert.exact = false;
        break;
      }
    }
    if (!cert.exact) break;
  }
  // F_0 and d_1 present the module: compare canonical membership bases.
  if (!Ring::same_ring(*ring, *m.ring())) {
    cert.presents_module = false;
  } else {
    FPModule presented(ring, res.free_at(0),
                       res.nmaps() > 0 ? res.map(0).cols : std::vector<Vec>{});
    const FPModule& mini = m.minimal();
    if (presented.cover() != mini.cover()) {
      cert.presents_module = false;
    } else {
      const std::vector<Vec>& a = presented.zero_submodule_basis();
      const std::vector<Vec>& b = mini.zero_submodule_basis();
      if (a.size() != b.size()) {
        cert.presents_module = false;
      } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != b[i]) {
            cert.presents_module = false;
            break;
          }
        }
      }
    }
  }
  return cert;
}

}  // namespace depthlab
