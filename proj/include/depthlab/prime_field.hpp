#pragma once

#include <cstdint>
#include <string>

#include "depthlab/errors.hpp"

namespace depthlab {

// Arithmetic in F_p for an odd-sized word prime p (p < 2^31). Elements are
// canonical representatives 0..p-1 stored in uint32_t.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || !is_prime(p)) {
      throw InputError("field characteristic must be a prime >= 2, got " +
                       std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<Elem>(s);
  }

  Elem sub(Elem a, Elem b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }

  // Multiplicative inverse via extended Euclid; throws DivisionByZero on 0.
  Elem inverse(Elem a) const {
    if (a == 0) throw DivisionByZero();
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inverse(b)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }

  std::uint32_t p_;
};

}  // namespace depthlab
