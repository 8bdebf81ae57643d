#include "depthlab/ring.hpp"

#include <algorithm>

#include "depthlab/poly_text.hpp"

namespace depthlab {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  // Recursive enumeration of exponent tuples summing to `degree`.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      exps[static_cast<std::size_t>(var)] = remaining;
      out.emplace_back(nvars, exps.begin(), exps.end());
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), monomial_greater);
  return out;
}

Ring::Ring(PrimeField field, std::vector<std::string> names,
           std::vector<Poly> input_rels, std::vector<Poly> gb)
    : field_(field),
      names_(std::move(names)),
      input_rels_(std::move(input_rels)),
      gb_(std::move(gb)),
      krull_dim_(compute_krull_dim(nvars(), gb_)) {}

RingPtr Ring::polynomial_ring(std::uint32_t p, std::vector<std::string> names) {
  if (names.empty() || static_cast<int>(names.size()) > kMaxVars) {
    throw InputError("variable count must be between 1 and " +
                     std::to_string(kMaxVars));
  }
  PrimeField F(p);
  return RingPtr(new Ring(F, std::move(names), {}, {}));
}

RingPtr Ring::quotient_ring(std::uint32_t p, std::vector<std::string> names,
                            std::vector<Poly> relations) {
  if (names.empty() || static_cast<int>(names.size()) > kMaxVars) {
    throw InputError("variable count must be between 1 and " +
                     std::to_string(kMaxVars));
  }
  PrimeField F(p);
  for (const Poly& r : relations) {
    if (!r.is_homogeneous()) {
      throw GradingError("ring relation is not homogeneous");
    }
    if (!r.is_zero() && r.lead().mono.nvars() != static_cast<int>(names.size())) {
      throw ShapeError("ring relation has the wrong variable count");
    }
  }
  std::vector<Poly> gb = reduced_groebner_ideal(F, relations);
  for (const Poly& g : gb) {
    if (g.degree() == 0) {
      throw InputError("relations generate the unit ideal");
    }
  }
  return RingPtr(new Ring(F, std::move(names), std::move(relations), std::move(gb)));
}

Poly Ring::parse(const std::string& text) const {
  return parse_poly(field_, text, names_);
}

std::string Ring::print(const Poly& p) const { return poly_to_string(p, names_); }

std::vector<Monomial> Ring::standard_monomials(int degree) const {
  std::vector<Monomial> all = monomials_of_degree(nvars(), degree);
  if (gb_.empty()) return all;
  std::vector<Monomial> out;
  out.reserve(all.size());
  for (const Monomial& m : all) {
    if (is_standard(m)) out.push_back(m);
  }
  return out;
}

bool Ring::is_standard(const Monomial& m) const {
  for (const Poly& g : gb_) {
    if (g.lead().mono.divides(m)) return false;
  }
  return true;
}

RingPtr Ring::ambient() const {
  if (is_ambient()) {
    return RingPtr(new Ring(field_, names_, {}, {}));
  }
  return polynomial_ring(field_.characteristic(), names_);
}

RingPtr Ring::quotient_by(const Poly& x) const {
  if (!x.is_homogeneous()) {
    throw GradingError("quotient element is not homogeneous");
  }
  if (x.is_zero() || is_zero_mod(x)) {
    throw InputError("quotient element is zero in the ring");
  }
  if (x.degree() == 0) {
    throw InputError("quotient by a unit");
  }
  std::vector<Poly> rels = input_rels_;
  rels.push_back(x);
  return quotient_ring(field_.characteristic(), names_, std::move(rels));
}

bool Ring::same_ring(const Ring& a, const Ring& b) {
  if (a.field_.characteristic() != b.field_.characteristic()) return false;
  if (a.nvars() != b.nvars()) return false;
  if (a.gb_.size() != b.gb_.size()) return false;
  for (std::size_t i = 0; i < a.gb_.size(); ++i) {
    if (a.gb_[i] != b.gb_[i]) return false;
  }
  return true;
}

void Ring::require_same(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) throw RingError("operation on a null ring");
  if (a.get() == b.get()) return;
  if (!same_ring(*a, *b)) {
    throw RingError("operands are defined over different rings");
  }
}

int Ring::compute_krull_dim(int nvars, const std::vector<Poly>& gb) {
  // dim S/I = dim S/lt(I): the largest set U of variables such that no lead
  // monomial is supported entirely inside U.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    int size = 0;
    for (int i = 0; i < nvars; ++i) {
      if (mask & (1u << i)) ++size;
    }
    if (size <= best) continue;
    bool independent = true;
    for (const Poly& g : gb) {
      const Monomial& m = g.lead().mono;
      bool inside = true;
      for (int i = 0; i < nvars && inside; ++i) {
        if (m.exponent(i) > 0 && !(mask & (1u << i))) inside = false;
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace depthlab
