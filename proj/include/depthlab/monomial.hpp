#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "depthlab/errors.hpp"

namespace depthlab {

inline constexpr int kMaxVars = 8;

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

// A monomial in up to kMaxVars variables with a cached total degree.
// Exponents are stored in a fixed-size array; nvars records how many
// positions are meaningful.
class Monomial {
 public:
  Monomial() : nvars_(0), degree_(0) { exps_.fill(0); }

  explicit Monomial(int nvars) : nvars_(nvars), degree_(0) {
    check_nvars(nvars);
    exps_.fill(0);
  }

  template <typename It>
  Monomial(int nvars, It first, It last) : nvars_(nvars), degree_(0) {
    check_nvars(nvars);
    exps_.fill(0);
    int i = 0;
    for (It it = first; it != last; ++it, ++i) {
      if (i >= nvars) throw ShapeError("too many exponents for monomial");
      exps_[i] = static_cast<std::uint16_t>(*it);
      degree_ += exps_[i];
    }
  }

  Monomial(int nvars, std::initializer_list<int> exps)
      : Monomial(nvars, exps.begin(), exps.end()) {}

  static Monomial one(int nvars) { return Monomial(nvars); }

  static Monomial variable(int nvars, int i, int power = 1) {
    Monomial m(nvars);
    if (i < 0 || i >= nvars) throw ShapeError("variable index out of range");
    m.exps_[i] = static_cast<std::uint16_t>(power);
    m.degree_ = power;
    return m;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int exponent(int i) const { return exps_[i]; }

  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& o) const {
    check_same(o);
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + o.exps_[i]);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    check_same(o);
    for (int i = 0; i < nvars_; ++i) {
      if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
  }

  // Exact quotient *this / o; throws if o does not divide *this.
  Monomial divided_by(const Monomial& o) const {
    check_same(o);
    Monomial r(nvars_);
    int deg = 0;
    for (int i = 0; i < nvars_; ++i) {
      if (o.exps_[i] > exps_[i]) {
        throw ShapeError("monomial division with negative exponent");
      }
      r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
      deg += r.exps_[i];
    }
    r.degree_ = deg;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    check_same(o);
    Monomial r(nvars_);
    int deg = 0;
    for (int i = 0; i < nvars_; ++i) {
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
      deg += r.exps_[i];
    }
    r.degree_ = deg;
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    check_same(o);
    Monomial r(nvars_);
    int deg = 0;
    for (int i = 0; i < nvars_; ++i) {
      r.exps_[i] = std::min(exps_[i], o.exps_[i]);
      deg += r.exps_[i];
    }
    r.degree_ = deg;
    return r;
  }

  bool coprime(const Monomial& o) const {
    check_same(o);
    for (int i = 0; i < nvars_; ++i) {
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    }
    return true;
  }

  bool operator==(const Monomial& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_) return false;
    for (int i = 0; i < nvars_; ++i) {
      if (exps_[i] != o.exps_[i]) return false;
    }
    return true;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  static void check_nvars(int nvars) {
    if (nvars < 0 || nvars > kMaxVars) {
      throw ShapeError("number of variables must be between 0 and " +
                       std::to_string(kMaxVars));
    }
  }
  void check_same(const Monomial& o) const {
    if (nvars_ != o.nvars_) {
      throw ShapeError("monomial operands have different variable counts");
    }
  }

  std::array<std::uint16_t, kMaxVars> exps_;
  int nvars_;
  int degree_;

  friend Ordering monomial_compare(const Monomial& a, const Monomial& b);
};

// Graded reverse lexicographic order. Higher total degree wins; on equal
// degree, scan exponent differences from the last variable backwards and the
// first nonzero difference being negative makes the monomial greater.
inline Ordering monomial_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) {
    throw ShapeError("cannot compare monomials in different variable counts");
  }
  if (a.degree_ != b.degree_) {
    return a.degree_ > b.degree_ ? Ordering::GT : Ordering::LT;
  }
  for (int i = a.nvars_ - 1; i >= 0; --i) {
    int d = static_cast<int>(a.exps_[i]) - static_cast<int>(b.exps_[i]);
    if (d != 0) return d < 0 ? Ordering::GT : Ordering::LT;
  }
  return Ordering::EQ;
}

inline bool monomial_less(const Monomial& a, const Monomial& b) {
  return monomial_compare(a, b) == Ordering::LT;
}
inline bool monomial_greater(const Monomial& a, const Monomial& b) {
  return monomial_compare(a, b) == Ordering::GT;
}

}  // namespace depthlab
