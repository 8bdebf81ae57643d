#include "depthlab/free_module.hpp"

namespace depthlab {

namespace {
void check_same_rank(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw ShapeError("module elements have different ranks");
  }
}
}  // namespace

Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b) {
  check_same_rank(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_add(F, a[i], b[i]);
  return out;
}

Vec vec_sub(const PrimeField& F, const Vec& a, const Vec& b) {
  check_same_rank(a, b);
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_sub(F, a[i], b[i]);
  return out;
}

Vec vec_neg(const PrimeField& F, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_neg(F, a[i]);
  return out;
}

Vec vec_scale(const PrimeField& F, PrimeField::Elem c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_scale(F, c, a[i]);
  return out;
}

Vec vec_times_term(const PrimeField& F, const Vec& a, PrimeField::Elem c,
                   const Monomial& m) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = poly_times_term(F, a[i], c, m);
  }
  return out;
}

Vec vec_times_poly(const PrimeField& F, const Vec& a, const Poly& p) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = poly_multiply(F, a[i], p);
  return out;
}

Vec vec_monic(const PrimeField& F, const Vec& a) {
  auto lead = vec_lead(a);
  if (!lead) return a;
  return vec_scale(F, F.inverse(lead->coeff), a);
}

int vec_degree(const FreeModule& F_mod, const Vec& v) {
  if (static_cast<int>(v.size()) != F_mod.rank()) {
    throw ShapeError("element rank does not match module rank");
  }
  std::optional<int> deg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (const Term& t : v[i].terms()) {
      int d = t.mono.degree() + F_mod.twists[i];
      if (!deg) {
        deg = d;
      } else if (*deg != d) {
        throw GradingError("element is not homogeneous");
      }
    }
  }
  if (!deg) throw InputError("degree of the zero element");
  return *deg;
}

bool vec_is_homogeneous(const FreeModule& F_mod, const Vec& v) {
  if (static_cast<int>(v.size()) != F_mod.rank()) {
    throw ShapeError("element rank does not match module rank");
  }
  std::optional<int> deg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const Term& t : v[i].terms()) {
      int d = t.mono.degree() + F_mod.twists[i];
      if (!deg) {
        deg = d;
      } else if (*deg != d) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace depthlab
