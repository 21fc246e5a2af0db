#pragma once

// Recursive descent parsers for the textual input language: fields,
// extensions, exponent groups, group elements, and restricted series. The
// grammar is whitespace-free; every failure carries the byte offset and the
// tokens that would have been accepted there.
//
//   field      := "gf(" int ["^" int] ")" ["[" poly "]"]
//               | "q" ["(" sym ";" poly ")"]
//   extension  := field "/" field            (larger field first)
//   group      := "z" | "q" | "z*z"
//   gelem      := int | int "/" int | "(" gelem "," gelem ")"
//   series     := ["-"] product (("+"|"-") product)*
//   product    := factor ("*" factor)*
//   factor     := "(" series ")" | rational | genpow | "t" ["^" exponent]
//   genpow     := sym ["^" int]
//   exponent   := gelem
//   poly       := signed monomials in the generator symbol

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvd/extension.hpp"
#include "pvd/series.hpp"

namespace pvd {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool try_eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool try_eat(std::string_view word) {
    if (text.substr(pos, word.size()) != word) return false;
    pos += word.size();
    return true;
  }
};

namespace detail {

[[noreturn]] inline void parse_fail(const Cursor& c,
                                    std::vector<std::string> expected) {
  std::string msg = "at offset " + std::to_string(c.pos) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg += " or ";
    msg += expected[i];
  }
  throw ParseError(c.pos, std::move(expected), msg);
}

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_symbol_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline Int parse_unsigned(Cursor& c) {
  if (!is_digit(c.peek())) parse_fail(c, {"digit"});
  Int v = 0;
  while (is_digit(c.peek())) {
    v = v * 10 + (c.peek() - '0');
    ++c.pos;
  }
  return v;
}

inline Int parse_int(Cursor& c) {
  bool neg = c.try_eat('-');
  Int v = parse_unsigned(c);
  return neg ? Int(-v) : v;
}

// rational with optional denominator
inline Rat parse_rat(Cursor& c) {
  Int num = parse_int(c);
  if (c.try_eat('/')) {
    Int den = parse_unsigned(c);
    if (den == 0) parse_fail(c, {"nonzero denominator"});
    return Rat(num, den);
  }
  return Rat(num);
}

inline std::string parse_symbol(Cursor& c) {
  if (!is_symbol_char(c.peek())) parse_fail(c, {"symbol"});
  std::string s;
  while (is_symbol_char(c.peek()) || is_digit(c.peek())) {
    s.push_back(c.peek());
    ++c.pos;
  }
  return s;
}

// polynomial in one named symbol, e.g. r^3-2 or x^2+x+1; coefficients low
// to high in the returned vector
inline std::vector<Rat> parse_poly(Cursor& c, const std::string& sym) {
  std::vector<Rat> coeffs;
  auto put = [&](const Int& power, const Rat& v) {
    if (power < 0 || power > 64) parse_fail(c, {"power between 0 and 64"});
    std::size_t p = static_cast<std::size_t>(power);
    if (coeffs.size() <= p) coeffs.resize(p + 1, Rat(0));
    coeffs[p] += v;
  };
  bool first = true;
  while (true) {
    int sign = 1;
    if (c.try_eat('-')) {
      sign = -1;
    } else if (c.try_eat('+')) {
      if (first) parse_fail(c, {"monomial"});
    } else if (!first) {
      break;
    }
    first = false;
    Rat coeff(1);
    bool have_coeff = false;
    if (is_digit(c.peek())) {
      coeff = parse_rat(c);
      have_coeff = true;
      if (!c.try_eat('*')) {
        put(0, sign * coeff);
        continue;
      }
    }
    Cursor save = c;
    std::string name = is_symbol_char(c.peek()) ? parse_symbol(c) : "";
    if (name != sym) {
      if (have_coeff) parse_fail(save, {"symbol " + sym});
      parse_fail(save, {"number", "symbol " + sym});
    }
    Int power = 1;
    if (c.try_eat('^')) power = parse_unsigned(c);
    put(power, sign * coeff);
  }
  if (coeffs.empty()) parse_fail(c, {"polynomial"});
  return coeffs;
}

}  // namespace detail

inline FieldDescriptor parse_field(Cursor& c) {
  if (c.try_eat("gf(")) {
    Int n = detail::parse_unsigned(c);
    Int p = n;
    int k = 1;
    if (c.try_eat('^')) {
      Int e = detail::parse_unsigned(c);
      if (e <= 0 || e > 64) detail::parse_fail(c, {"exponent between 1 and 64"});
      k = static_cast<int>(e);
    } else {
      // factor a prime power
      if (n < 2) detail::parse_fail(c, {"prime power"});
      p = 2;
      while (p * p <= n && n % p != 0) ++p;
      if (p * p > n) p = n;
      k = 0;
      Int m = n;
      while (m > 1) {
        if (m % p != 0) detail::parse_fail(c, {"prime power"});
        m /= p;
        ++k;
      }
    }
    if (!c.try_eat(')')) detail::parse_fail(c, {")"});
    std::vector<Rat> modulus;
    if (c.try_eat('[')) {
      modulus = detail::parse_poly(c, "a");
      if (!c.try_eat(']')) detail::parse_fail(c, {"]"});
    }
    if (k == 1 && modulus.empty()) return make_prime_field(p);
    return make_galois_field(p, k, modulus);
  }
  if (c.try_eat('q')) {
    if (c.try_eat('(')) {
      std::string sym = detail::parse_symbol(c);
      if (sym == "t") {
        fail(Errc::Validation, "the symbol t is reserved for the indeterminate");
      }
      if (!c.try_eat(';')) detail::parse_fail(c, {";"});
      std::vector<Rat> minpoly = detail::parse_poly(c, sym);
      if (!c.try_eat(')')) detail::parse_fail(c, {")"});
      return make_number_field(sym, minpoly);
    }
    return make_rationals();
  }
  detail::parse_fail(c, {"gf(", "q"});
}

// written larger field first, matching ext_str
inline ExtPtr parse_extension(Cursor& c) {
  FieldDescriptor F = parse_field(c);
  if (!c.try_eat('/')) detail::parse_fail(c, {"/"});
  FieldDescriptor K = parse_field(c);
  return make_ext(std::move(K), std::move(F));
}

inline GroupDescriptor parse_group(Cursor& c) {
  if (c.try_eat('z')) {
    if (c.try_eat('*')) {
      if (!c.try_eat('z')) detail::parse_fail(c, {"z"});
      return g_lex_pair(g_int(), g_int());
    }
    return g_int();
  }
  if (c.try_eat('q')) return g_rational();
  detail::parse_fail(c, {"z", "q", "z*z"});
}

inline GroupElement parse_group_element(Cursor& c, const GroupDescriptor& G) {
  switch (G.kind) {
    case GroupKind::Int:
      return ge_int(detail::parse_int(c));
    case GroupKind::Rational:
      return ge_rat(detail::parse_rat(c));
    case GroupKind::LexPair: {
      if (!c.try_eat('(')) detail::parse_fail(c, {"("});
      GroupElement a = parse_group_element(c, G.parts[0]);
      if (!c.try_eat(',')) detail::parse_fail(c, {","});
      GroupElement b = parse_group_element(c, G.parts[1]);
      if (!c.try_eat(')')) detail::parse_fail(c, {")"});
      return ge_pair(std::move(a), std::move(b));
    }
    default:
      fail(Errc::UnsupportedGroup, "cannot parse elements of this group");
  }
}

namespace detail {

inline Series parse_series_sum(Cursor& c, const ExtPtr& ext,
                               const GroupDescriptor& G,
                               const GroupElement& tau, int budget);

// exponent of a bare t: the smallest natural step of the group
inline GroupElement one_step(const GroupDescriptor& G) {
  switch (G.kind) {
    case GroupKind::Int:
      return ge_int(1);
    case GroupKind::Rational:
      return ge_rat(1);
    case GroupKind::LexPair:
      return ge_pair(g_zero(G.parts[0]), one_step(G.parts[1]));
    default:
      fail(Errc::UnsupportedGroup, "no canonical exponent step");
  }
}

inline Series parse_series_factor(Cursor& c, const ExtPtr& ext,
                                  const GroupDescriptor& G,
                                  const GroupElement& tau, int budget) {
  const FieldDescriptor& F = ext->F;
  if (c.try_eat('(')) {
    Series inner = parse_series_sum(c, ext, G, tau, budget);
    if (!c.try_eat(')')) parse_fail(c, {")"});
    return inner;
  }
  if (is_digit(c.peek())) {
    Rat v = parse_rat(c);
    return s_const(ext, G, f_from_rat(F, v), tau, budget);
  }
  if (c.peek() == 't') {
    Cursor save = c;
    ++c.pos;
    if (is_symbol_char(c.peek()) || is_digit(c.peek())) {
      c = save;  // a longer symbol such as "theta": try the generator below
    } else {
      GroupElement e =
          c.try_eat('^') ? parse_group_element(c, G) : one_step(G);
      return s_delta(ext, G, std::move(e), tau, budget);
    }
  }
  if (is_symbol_char(c.peek())) {
    Cursor save = c;
    std::string sym = parse_symbol(c);
    if (sym != F.generator) {
      parse_fail(save, {"number", "t", F.generator, "("});
    }
    Int power = 1;
    if (c.try_eat('^')) power = parse_unsigned(c);
    FieldElement v = f_pow(F, f_gen(F), power);
    return s_const(ext, G, std::move(v), tau, budget);
  }
  parse_fail(c, {"number", "t", F.generator, "("});
}

inline Series parse_series_product(Cursor& c, const ExtPtr& ext,
                                   const GroupDescriptor& G,
                                   const GroupElement& tau, int budget) {
  Series acc = parse_series_factor(c, ext, G, tau, budget);
  while (c.try_eat('*')) {
    acc = s_mul(acc, parse_series_factor(c, ext, G, tau, budget));
  }
  return acc;
}

inline Series parse_series_sum(Cursor& c, const ExtPtr& ext,
                               const GroupDescriptor& G,
                               const GroupElement& tau, int budget) {
  bool neg = c.try_eat('-');
  Series acc = parse_series_product(c, ext, G, tau, budget);
  if (neg) acc = s_neg(acc);
  while (true) {
    if (c.try_eat('+')) {
      acc = s_add(acc, parse_series_product(c, ext, G, tau, budget));
    } else if (c.try_eat('-')) {
      acc = s_sub(acc, parse_series_product(c, ext, G, tau, budget));
    } else {
      return acc;
    }
  }
}

}  // namespace detail

inline Series parse_series(Cursor& c, const ExtPtr& ext,
                           const GroupDescriptor& G, const GroupElement& tau,
                           int budget = kDefaultTermBudget) {
  return detail::parse_series_sum(c, ext, G, tau, budget);
}

namespace detail {

template <typename F>
auto parse_whole(std::string_view text, F&& f) {
  Cursor c{text, 0};
  auto out = f(c);
  if (!c.done()) parse_fail(c, {"end of input"});
  return out;
}

}  // namespace detail

inline FieldDescriptor field_of_string(std::string_view s) {
  return detail::parse_whole(s, [](Cursor& c) { return parse_field(c); });
}

inline ExtPtr ext_of_string(std::string_view s) {
  return detail::parse_whole(s, [](Cursor& c) { return parse_extension(c); });
}

inline GroupDescriptor group_of_string(std::string_view s) {
  return detail::parse_whole(s, [](Cursor& c) { return parse_group(c); });
}

inline GroupElement element_of_string(std::string_view s,
                                      const GroupDescriptor& G) {
  return detail::parse_whole(
      s, [&](Cursor& c) { return parse_group_element(c, G); });
}

inline Series series_of_string(std::string_view s, const ExtPtr& ext,
                               const GroupDescriptor& G,
                               const GroupElement& tau,
                               int budget = kDefaultTermBudget) {
  return detail::parse_whole(
      s, [&](Cursor& c) { return parse_series(c, ext, G, tau, budget); });
}

}  // namespace pvd
