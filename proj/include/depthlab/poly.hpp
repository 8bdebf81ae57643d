#pragma once

#include <cstdint>
#include <vector>

#include "depthlab/monomial.hpp"
#include "depthlab/prime_field.hpp"

namespace depthlab {

struct Term {
  PrimeField::Elem coeff;
  Monomial mono;
};

// A polynomial over F_p: terms with nonzero coefficients kept in strictly
// descending monomial order. The zero polynomial has no terms.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  static Poly zero() { return Poly(); }
  static Poly constant(const PrimeField& F, long long c, int nvars);
  static Poly from_term(PrimeField::Elem c, const Monomial& m);

  // Builds a polynomial from arbitrary (coeff, monomial) pairs: sorts,
  // merges equal monomials, and drops zeros.
  static Poly collect(const PrimeField& F, std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& lead() const;
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  std::vector<Term> terms_;
};

Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_neg(const PrimeField& F, const Poly& a);
Poly poly_scale(const PrimeField& F, PrimeField::Elem c, const Poly& a);
// a * (c * m) with term-wise monomial multiplication (order preserved).
Poly poly_times_term(const PrimeField& F, const Poly& a, PrimeField::Elem c,
                     const Monomial& m);
Poly poly_multiply(const PrimeField& F, const Poly& a, const Poly& b);
// Scales so the leading coefficient is 1; zero stays zero.
Poly poly_monic(const PrimeField& F, const Poly& a);

}  // namespace depthlab
