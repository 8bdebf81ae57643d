#include "depthlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace depthlab {

namespace {

struct GBElem {
  Vec v;           // monic
  Monomial lm;     // lead monomial
  int lp = 0;      // lead position
  Vec coords;      // syzygy mode: v = sum coords[t] * gens[t]
  bool frozen = false;
};

// Drops the lead term of the polynomial at position `pos`.
void drop_lead_term(Vec& v, int pos) {
  const auto& terms = v[static_cast<std::size_t>(pos)].terms();
  std::vector<Term> rest(terms.begin() + 1, terms.end());
  v[static_cast<std::size_t>(pos)] = Poly(std::move(rest));
}

// Division by the (monic) elements: work = sum q_k elems[k] + remainder.
// Quotient terms are accumulated per divisor when `qterms` is non-null.
Vec reduce_full(const PrimeField& F, const std::vector<GBElem>& elems, Vec work,
                std::vector<std::vector<Term>>* qterms) {
  Vec rem = vec_zero(static_cast<int>(work.size()));
  while (auto lead = vec_lead(work)) {
    bool reduced = false;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      const GBElem& e = elems[k];
      if (e.lp != lead->pos || !e.lm.divides(lead->mono)) continue;
      Monomial q = lead->mono.divided_by(e.lm);
      PrimeField::Elem c = lead->coeff;  // divisor is monic
      work = vec_sub(F, work, vec_times_term(F, e.v, c, q));
      if (qterms) (*qterms)[k].push_back(Term{c, q});
      reduced = true;
      break;
    }
    if (!reduced) {
      rem[static_cast<std::size_t>(lead->pos)] = poly_add(
          F, rem[static_cast<std::size_t>(lead->pos)],
          Poly::from_term(lead->coeff, lead->mono));
      drop_lead_term(work, lead->pos);
    }
  }
  return rem;
}

std::vector<Poly> collect_quotients(const PrimeField& F,
                                    std::vector<std::vector<Term>>& qterms) {
  std::vector<Poly> out;
  out.reserve(qterms.size());
  for (auto& terms : qterms) out.push_back(Poly::collect(F, std::move(terms)));
  return out;
}

Vec unit_vec(const PrimeField& F, int rank, int pos, PrimeField::Elem c, int nvars) {
  Vec v = vec_zero(rank);
  v[static_cast<std::size_t>(pos)] = Poly::from_term(c, Monomial::one(nvars));
  return v;
}

}  // namespace

Vec normal_form(const PrimeField& F, const std::vector<Vec>& basis, const Vec& v,
                std::vector<Poly>* quotients) {
  std::vector<GBElem> elems;
  std::vector<PrimeField::Elem> lead_coeffs;
  elems.reserve(basis.size());
  // Normalize divisors to monic internally; rescale quotients afterwards.
  for (const Vec& b : basis) {
    auto lead = vec_lead(b);
    GBElem e;
    if (lead) {
      lead_coeffs.push_back(lead->coeff);
      e.v = lead->coeff == 1 ? b : vec_scale(F, F.inverse(lead->coeff), b);
      e.lm = lead->mono;
      e.lp = lead->pos;
    } else {
      lead_coeffs.push_back(0);
      e.lp = -1;  // never matches
      e.lm = Monomial(0);
    }
    elems.push_back(std::move(e));
  }
  std::vector<std::vector<Term>> qterms;
  if (quotients) qterms.resize(basis.size());
  Vec r = reduce_full(F, elems, v, quotients ? &qterms : nullptr);
  if (quotients) {
    *quotients = collect_quotients(F, qterms);
    for (std::size_t k = 0; k < quotients->size(); ++k) {
      if (lead_coeffs[k] != 0 && lead_coeffs[k] != 1) {
        (*quotients)[k] =
            poly_scale(F, F.inverse(lead_coeffs[k]), (*quotients)[k]);
      }
    }
  }
  return r;
}

GBResult buchberger(const PrimeField& F, const std::vector<Vec>& gens,
                    const GBOptions& opt) {
  GBResult result;
  if (gens.empty()) return result;
  const int rank = static_cast<int>(gens[0].size());
  const int T = static_cast<int>(gens.size());
  int nvars = opt.nvars;
  for (const Vec& g : gens) {
    if (static_cast<int>(g.size()) != rank) {
      throw ShapeError("generators live in free modules of different ranks");
    }
    for (const Poly& p : g) {
      if (!p.is_zero()) nvars = p.lead().mono.nvars();
    }
  }
  if (nvars < 0) {
    throw InputError("cannot infer variable count from all-zero generators");
  }

  std::vector<GBElem> basis;
  // Pair queue ordered by (lcm degree, i, j); `done` marks popped pairs for
  // the chain criterion.
  std::set<std::tuple<int, int, int>> queue;
  std::set<std::pair<int, int>> done;

  auto add_pairs = [&](int n) {
    for (int i = 0; i < n; ++i) {
      if (basis[static_cast<std::size_t>(i)].frozen &&
          basis[static_cast<std::size_t>(n)].frozen) {
        continue;
      }
      if (basis[static_cast<std::size_t>(i)].lp !=
          basis[static_cast<std::size_t>(n)].lp) {
        continue;
      }
      Monomial l = basis[static_cast<std::size_t>(i)].lm.lcm(
          basis[static_cast<std::size_t>(n)].lm);
      queue.insert({l.degree(), i, n});
    }
  };

  for (int t = 0; t < T; ++t) {
    const Vec& g = gens[static_cast<std::size_t>(t)];
    auto lead = vec_lead(g);
    if (!lead) {
      // A zero generator contributes the coordinate vector itself.
      if (opt.syzygy_mode) {
        result.syzygies.push_back(unit_vec(F, T, t, 1, nvars));
      }
      continue;
    }
    GBElem e;
    PrimeField::Elem inv = F.inverse(lead->coeff);
    e.v = lead->coeff == 1 ? g : vec_scale(F, inv, g);
    e.lm = lead->mono;
    e.lp = lead->pos;
    e.frozen = t < opt.frozen_prefix;
    if (opt.syzygy_mode) e.coords = unit_vec(F, T, t, inv, nvars);
    basis.push_back(std::move(e));
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    const GBElem& fi = basis[static_cast<std::size_t>(i)];
    const GBElem& fj = basis[static_cast<std::size_t>(j)];
    Monomial L = fi.lm.lcm(fj.lm);

    if (!opt.syzygy_mode) {
      // Product criterion: sound for ideals only (rank one).
      if (rank == 1 && fi.lm.coprime(fj.lm)) {
        done.insert({i, j});
        continue;
      }
      // Chain criterion citing only pairs popped strictly earlier.
      bool skip = false;
      for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
        if (k == i || k == j) continue;
        const GBElem& fk = basis[static_cast<std::size_t>(k)];
        if (fk.lp != fi.lp || !fk.lm.divides(L)) continue;
        auto p1 = std::minmax(i, k);
        auto p2 = std::minmax(j, k);
        if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second})) {
          skip = true;
        }
      }
      if (skip) {
        done.insert({i, j});
        continue;
      }
    }

    Monomial mi = L.divided_by(fi.lm);
    Monomial mj = L.divided_by(fj.lm);
    Vec spair = vec_sub(F, vec_times_term(F, fi.v, 1, mi),
                        vec_times_term(F, fj.v, 1, mj));
    std::vector<std::vector<Term>> qterms;
    if (opt.syzygy_mode) qterms.resize(basis.size());
    Vec r = reduce_full(F, basis, std::move(spair),
                        opt.syzygy_mode ? &qterms : nullptr);
    done.insert({i, j});

    Vec combo;
    if (opt.syzygy_mode) {
      std::vector<Poly> q = collect_quotients(F, qterms);
      combo = vec_sub(F, vec_times_term(F, fi.coords, 1, mi),
                      vec_times_term(F, fj.coords, 1, mj));
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k].is_zero()) continue;
        combo = vec_sub(
            F, combo,
            vec_times_poly(F, basis[k].coords, q[k]));
      }
    }

    if (vec_is_zero(r)) {
      if (opt.syzygy_mode && !vec_is_zero(combo)) {
        result.syzygies.push_back(std::move(combo));
      }
      continue;
    }

    GBElem e;
    auto lead = vec_lead(r);
    PrimeField::Elem inv = F.inverse(lead->coeff);
    e.v = lead->coeff == 1 ? std::move(r) : vec_scale(F, inv, r);
    e.lm = lead->mono;
    e.lp = lead->pos;
    if (opt.syzygy_mode) {
      e.coords = lead->coeff == 1 ? std::move(combo) : vec_scale(F, inv, combo);
    }
    basis.push_back(std::move(e));
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  result.basis.reserve(basis.size());
  for (GBElem& e : basis) result.basis.push_back(std::move(e.v));
  if (!opt.syzygy_mode && opt.reduce) {
    result.basis = reduced_basis(F, std::move(result.basis));
  }
  return result;
}

std::vector<Vec> reduced_basis(const PrimeField& F, std::vector<Vec> basis) {
  struct LeadInfo {
    Monomial lm;
    int lp;
    std::size_t idx;
  };
  std::vector<LeadInfo> leads;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto lead = vec_lead(basis[i]);
    if (!lead) continue;
    if (lead->coeff != 1) {
      basis[i] = vec_scale(F, F.inverse(lead->coeff), basis[i]);
    }
    leads.push_back(LeadInfo{lead->mono, lead->pos, i});
  }
  // Ascending TOP order of leads: divisors precede multiples.
  std::sort(leads.begin(), leads.end(), [](const LeadInfo& a, const LeadInfo& b) {
    Ordering c = top_compare(a.lm, a.lp, b.lm, b.lp);
    if (c != Ordering::EQ) return c == Ordering::LT;
    return a.idx < b.idx;
  });
  std::vector<LeadInfo> kept;
  for (const LeadInfo& li : leads) {
    bool redundant = false;
    for (const LeadInfo& kl : kept) {
      if (kl.lp == li.lp && kl.lm.divides(li.lm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(li);
  }
  // Tail-reduce each element by all the others.
  std::vector<Vec> out;
  out.reserve(kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    std::vector<Vec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t b = 0; b < kept.size(); ++b) {
      if (b != a) others.push_back(basis[kept[b].idx]);
    }
    out.push_back(normal_form(F, others, basis[kept[a].idx]));
  }
  return out;
}

std::vector<Vec> reduced_groebner(const PrimeField& F, const std::vector<Vec>& gens) {
  GBOptions opt;
  GBResult r = buchberger(F, gens, opt);
  return r.basis;
}

std::vector<Vec> syzygy_generators(const PrimeField& F, const std::vector<Vec>& gens,
                                   int frozen_prefix, int nvars) {
  GBOptions opt;
  opt.syzygy_mode = true;
  opt.frozen_prefix = frozen_prefix;
  opt.nvars = nvars;
  GBResult r = buchberger(F, gens, opt);
  return std::move(r.syzygies);
}

std::vector<Poly> reduced_groebner_ideal(const PrimeField& F,
                                         const std::vector<Poly>& gens) {
  std::vector<Vec> wrapped;
  wrapped.reserve(gens.size());
  for (const Poly& p : gens) wrapped.push_back(Vec{p});
  std::vector<Vec> gb = reduced_groebner(F, wrapped);
  std::vector<Poly> out;
  out.reserve(gb.size());
  for (Vec& v : gb) out.push_back(std::move(v[0]));
  return out;
}

Poly poly_normal_form(const PrimeField& F, const std::vector<Poly>& gb, const Poly& p) {
  std::vector<Vec> wrapped;
  wrapped.reserve(gb.size());
  for (const Poly& q : gb) wrapped.push_back(Vec{q});
  Vec r = normal_form(F, wrapped, Vec{p});
  return r[0];
}

}  // namespace depthlab
