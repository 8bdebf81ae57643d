#include "depthlab/poly.hpp"

#include <algorithm>
#include <map>

namespace depthlab {

Poly Poly::constant(const PrimeField& F, long long c, int nvars) {
  PrimeField::Elem e = F.from_int(c);
  if (e == 0) return Poly();
  return Poly({Term{e, Monomial::one(nvars)}});
}

Poly Poly::from_term(PrimeField::Elem c, const Monomial& m) {
  if (c == 0) return Poly();
  return Poly({Term{c, m}});
}

Poly Poly::collect(const PrimeField& F, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return monomial_greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  return Poly(std::move(out));
}

const Term& Poly::lead() const {
  if (terms_.empty()) throw InputError("lead term of the zero polynomial");
  return terms_.front();
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().mono.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const Term& t : terms_) {
    if (t.mono.degree() != d) return false;
  }
  return true;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) {
      return false;
    }
  }
  return true;
}

// Merge of two descending term lists.
Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    Ordering c = monomial_compare(ta[i].mono, tb[j].mono);
    if (c == Ordering::GT) {
      out.push_back(ta[i++]);
    } else if (c == Ordering::LT) {
      out.push_back(tb[j++]);
    } else {
      PrimeField::Elem s = F.add(ta[i].coeff, tb[j].coeff);
      if (s != 0) out.push_back(Term{s, ta[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  return Poly(std::move(out));
}

Poly poly_neg(const PrimeField& F, const Poly& a) {
  std::vector<Term> out = a.terms();
  for (Term& t : out) t.coeff = F.neg(t.coeff);
  return Poly(std::move(out));
}

Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b) {
  return poly_add(F, a, poly_neg(F, b));
}

Poly poly_scale(const PrimeField& F, PrimeField::Elem c, const Poly& a) {
  if (c == 0) return Poly();
  std::vector<Term> out = a.terms();
  for (Term& t : out) t.coeff = F.mul(c, t.coeff);
  return Poly(std::move(out));
}

Poly poly_times_term(const PrimeField& F, const Poly& a, PrimeField::Elem c,
                     const Monomial& m) {
  if (c == 0) return Poly();
  std::vector<Term> out;
  out.reserve(a.terms().size());
  for (const Term& t : a.terms()) {
    out.push_back(Term{F.mul(c, t.coeff), t.mono.times(m)});
  }
  return Poly(std::move(out));
}

Poly poly_multiply(const PrimeField& F, const Poly& a, const Poly& b) {
  // Accumulate into a map keyed by monomial (ascending), then reverse.
  auto cmp = [](const Monomial& x, const Monomial& y) { return monomial_less(x, y); };
  std::map<Monomial, PrimeField::Elem, decltype(cmp)> acc(cmp);
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      Monomial m = s.mono.times(t.mono);
      PrimeField::Elem c = F.mul(s.coeff, t.coeff);
      auto [it, inserted] = acc.emplace(m, c);
      if (!inserted) {
        it->second = F.add(it->second, c);
        if (it->second == 0) acc.erase(it);
      } else if (c == 0) {
        acc.erase(it);
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    out.push_back(Term{it->second, it->first});
  }
  return Poly(std::move(out));
}

Poly poly_monic(const PrimeField& F, const Poly& a) {
  if (a.is_zero()) return a;
  PrimeField::Elem inv = F.inverse(a.lead().coeff);
  return poly_scale(F, inv, a);
}

}  // namespace depthlab
