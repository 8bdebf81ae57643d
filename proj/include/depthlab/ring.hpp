#pragma once

#include <memory>
#include <string>
#include <vector>

#include "depthlab/groebner.hpp"
#include "depthlab/poly.hpp"

namespace depthlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// All degree-d monomials in `nvars` variables, in descending order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

// A graded quotient ring R = F_p[x_1..x_n]/I with I homogeneous. The reduced
// Gröbner basis of I is computed on construction; instances are immutable and
// shared through RingPtr.
class Ring {
 public:
  static RingPtr polynomial_ring(std::uint32_t p, std::vector<std::string> names);
  static RingPtr quotient_ring(std::uint32_t p, std::vector<std::string> names,
                               std::vector<Poly> relations);

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& var_names() const { return names_; }
  // The relations as given (used for serialization).
  const std::vector<Poly>& relations() const { return input_rels_; }
  // Reduced Gröbner basis of the defining ideal; empty iff the ring is a
  // polynomial ring.
  const std::vector<Poly>& relation_basis() const { return gb_; }
  bool is_ambient() const { return gb_.empty(); }
  int krull_dim() const { return krull_dim_; }

  Poly nf(const Poly& p) const { return poly_normal_form(field_, gb_, p); }
  bool is_zero_mod(const Poly& p) const { return nf(p).is_zero(); }

  Poly variable(int i) const {
    return Poly::from_term(1, Monomial::variable(nvars(), i));
  }
  Poly parse(const std::string& text) const;
  std::string print(const Poly& p) const;

  // Monomials of degree d not divisible by any lead monomial of the
  // relation basis: a vector-space basis of R_d, in descending order.
  std::vector<Monomial> standard_monomials(int degree) const;
  bool is_standard(const Monomial& m) const;

  // The underlying polynomial ring S (same characteristic and variables).
  RingPtr ambient() const;
  // R/(x) for a homogeneous element x of positive degree that is nonzero
  // in R.
  RingPtr quotient_by(const Poly& x) const;

  // Structural equality: same characteristic, same variable count, same
  // reduced relation basis. Variable names are ignored.
  static bool same_ring(const Ring& a, const Ring& b);
  static void require_same(const RingPtr& a, const RingPtr& b);

 private:
  Ring(PrimeField field, std::vector<std::string> names,
       std::vector<Poly> input_rels, std::vector<Poly> gb);
  static int compute_krull_dim(int nvars, const std::vector<Poly>& gb);

  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<Poly> input_rels_;
  std::vector<Poly> gb_;
  int krull_dim_;
};

}  // namespace depthlab
