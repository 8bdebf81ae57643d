#include "depthlab/poly_text.hpp"

#include <cctype>
#include <optional>

namespace depthlab {

namespace {

struct PolyScanner {
  const PrimeField& F;
  const std::string& text;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;
  int line;
  int col;

  PolyScanner(const PrimeField& F_, const std::string& text_,
              const std::vector<std::string>& vars_, int base_line, int base_col)
      : F(F_), text(text_), vars(vars_), line(base_line), col(base_col) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos < text.size(); ++k, ++pos) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      advance(1);
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  // Longest variable name matching at the current position, if any.
  std::optional<int> match_var() const {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const std::string& name = vars[v];
      if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
        best = static_cast<int>(v);
        best_len = name.size();
      }
    }
    if (best < 0) return std::nullopt;
    return best;
  }

  long long read_integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected an integer");
    }
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1LL << 40)) fail("integer literal too large");
      advance(1);
    }
    return v;
  }

  // factor := integer | var ['^' integer]; returns false if no factor starts
  // at the current position.
  bool read_factor(PrimeField::Elem& coeff, Monomial& mono) {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = read_integer();
      skip_ws();
      if (peek() == '^') fail("exponent applied to an integer literal");
      coeff = F.mul(coeff, F.from_int(v));
      return true;
    }
    if (auto v = match_var()) {
      advance(vars[*v].size());
      int e = 1;
      skip_ws();
      if (peek() == '^') {
        advance(1);
        long long ev = read_integer();
        if (ev < 0 || ev > 60000) fail("exponent out of range");
        e = static_cast<int>(ev);
      }
      mono = mono.times(Monomial::variable(static_cast<int>(vars.size()),
                                           *v, e));
      return true;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      fail(std::string("unknown variable name starting at '") + c + "'");
    }
    return false;
  }

  // term := factor (['*'] factor)*
  Term read_term() {
    PrimeField::Elem coeff = 1;
    Monomial mono = Monomial::one(static_cast<int>(vars.size()));
    if (!read_factor(coeff, mono)) fail("expected a term");
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        advance(1);
        if (!read_factor(coeff, mono)) fail("expected a factor after '*'");
        continue;
      }
      PrimeField::Elem save_c = coeff;
      Monomial save_m = mono;
      std::size_t save_pos = pos;
      int save_line = line, save_col = col;
      if (!read_factor(coeff, mono)) {
        coeff = save_c;
        mono = save_m;
        pos = save_pos;
        line = save_line;
        col = save_col;
        break;
      }
    }
    return Term{coeff, mono};
  }

  Poly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos >= text.size()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      advance(1);
    }
    for (;;) {
      Term t = read_term();
      if (negate) t.coeff = F.neg(t.coeff);
      terms.push_back(t);
      skip_ws();
      if (pos >= text.size()) break;
      char c = peek();
      if (c == '+' || c == '-') {
        negate = c == '-';
        advance(1);
      } else {
        fail(std::string("unexpected character '") + c + "' in polynomial");
      }
    }
    return Poly::collect(F, std::move(terms));
  }
};

}  // namespace

Poly parse_poly(const PrimeField& F, const std::string& text,
                const std::vector<std::string>& vars, int base_line, int base_col) {
  PolyScanner sc(F, text, vars, base_line, base_col);
  Poly p = sc.parse();
  if (!sc.at_end()) sc.fail("trailing characters after polynomial");
  return p;
}

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    if (!first) out += " + ";
    first = false;
    bool need_coeff = t.coeff != 1 || t.mono.is_one();
    bool wrote = false;
    if (need_coeff) {
      out += std::to_string(t.coeff);
      wrote = true;
    }
    for (int i = 0; i < t.mono.nvars(); ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (wrote) out += "*";
      out += vars[static_cast<std::size_t>(i)];
      if (e > 1) {
        out += "^";
        out += std::to_string(e);
      }
      wrote = true;
    }
  }
  return out;
}

}  // namespace depthlab
