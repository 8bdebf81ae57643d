#pragma once

#include <optional>
#include <vector>

#include "depthlab/poly.hpp"

namespace depthlab {

// A graded free module F = ⊕_i S(-twists[i]); a basis vector e_i in degree
// twists[i]. rank() is the number of basis vectors.
struct FreeModule {
  std::vector<int> twists;

  FreeModule() = default;
  explicit FreeModule(std::vector<int> t) : twists(std::move(t)) {}
  static FreeModule of_rank(int r, int twist = 0) {
    return FreeModule(std::vector<int>(static_cast<std::size_t>(r), twist));
  }

  int rank() const { return static_cast<int>(twists.size()); }
  bool operator==(const FreeModule& o) const { return twists == o.twists; }
  bool operator!=(const FreeModule& o) const { return !(*this == o); }
};

// An element of a free module, stored densely: one polynomial per position.
using Vec = std::vector<Poly>;

struct VecLead {
  PrimeField::Elem coeff;
  Monomial mono;
  int pos;
};

inline Vec vec_zero(int rank) { return Vec(static_cast<std::size_t>(rank)); }

inline bool vec_is_zero(const Vec& v) {
  for (const Poly& p : v) {
    if (!p.is_zero()) return false;
  }
  return true;
}

// Term-over-position order: monomials compare degrevlex first; on equal
// monomials the smaller position is greater (e_0 > e_1 > ...).
inline Ordering top_compare(const Monomial& ma, int pa, const Monomial& mb, int pb) {
  Ordering c = monomial_compare(ma, mb);
  if (c != Ordering::EQ) return c;
  if (pa != pb) return pa < pb ? Ordering::GT : Ordering::LT;
  return Ordering::EQ;
}

// Greatest term of v in the TOP order; nullopt for the zero vector.
inline std::optional<VecLead> vec_lead(const Vec& v) {
  std::optional<VecLead> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Term& t = v[i].lead();
    if (!best ||
        top_compare(t.mono, static_cast<int>(i), best->mono, best->pos) ==
            Ordering::GT) {
      best = VecLead{t.coeff, t.mono, static_cast<int>(i)};
    }
  }
  return best;
}

Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b);
Vec vec_sub(const PrimeField& F, const Vec& a, const Vec& b);
Vec vec_neg(const PrimeField& F, const Vec& a);
Vec vec_scale(const PrimeField& F, PrimeField::Elem c, const Vec& a);
Vec vec_times_term(const PrimeField& F, const Vec& a, PrimeField::Elem c,
                   const Monomial& m);
Vec vec_times_poly(const PrimeField& F, const Vec& a, const Poly& p);
Vec vec_monic(const PrimeField& F, const Vec& a);

// Degree of a nonzero homogeneous element of F (monomial degree plus twist).
// Throws GradingError if v is not homogeneous in F, InputError if zero.
int vec_degree(const FreeModule& F_mod, const Vec& v);
bool vec_is_homogeneous(const FreeModule& F_mod, const Vec& v);

}  // namespace depthlab
