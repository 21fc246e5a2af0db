#pragma once

// Exact arithmetic for the coefficient fields: prime fields gf(p), Galois
// fields gf(p^k) presented as F_p[x]/(m), the rationals, and simple number
// fields q(g; m) presented as Q[x]/(m). An element is its coefficient
// vector over the base (F_p or Q) in the power basis of the presentation,
// always reduced: length equals the presentation degree, finite-field
// entries lie in [0, p).

#include <cstddef>
#include <string>
#include <vector>

#include "pvd/errors.hpp"
#include "pvd/numeric.hpp"
#include "pvd/rng.hpp"

namespace pvd {

enum class FieldKind { PrimeField, GaloisField, Rationals, NumberField };

namespace detail {

// Base-field coefficient arithmetic; p == 0 means Q, p prime means F_p.
inline Rat c_norm(const Int& p, const Rat& x) {
  if (p == 0) return x;
  return Rat(mod_norm(numerator(x), p));
}

inline Rat c_add(const Int& p, const Rat& a, const Rat& b) { return c_norm(p, a + b); }
inline Rat c_sub(const Int& p, const Rat& a, const Rat& b) { return c_norm(p, a - b); }
inline Rat c_mul(const Int& p, const Rat& a, const Rat& b) { return c_norm(p, a * b); }

inline Rat c_inv(const Int& p, const Rat& a) {
  if (a == 0) fail(Errc::ZeroInversion, "coefficient inverse of zero");
  if (p == 0) return Rat(1) / a;
  return Rat(mod_inverse(numerator(a), p));
}

using Poly = std::vector<Rat>;  // coefficients low to high

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly poly_add(const Int& p, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rat x = i < a.size() ? a[i] : Rat(0);
    Rat y = i < b.size() ? b[i] : Rat(0);
    r[i] = c_add(p, x, y);
  }
  poly_trim(r);
  return r;
}

inline Poly poly_scale(const Int& p, const Poly& a, const Rat& s) {
  Poly r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c_mul(p, a[i], s);
  poly_trim(r);
  return r;
}

inline Poly poly_mul(const Int& p, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = c_add(p, r[i + j], c_mul(p, a[i], b[j]));
    }
  }
  poly_trim(r);
  return r;
}

// Remainder of a modulo m; m need not be monic (its lead is inverted).
inline Poly poly_rem(const Int& p, Poly a, const Poly& m) {
  poly_trim(a);
  if (m.empty()) fail(Errc::Validation, "division by zero polynomial");
  Rat lead_inv = c_inv(p, m.back());
  while (poly_deg(a) >= poly_deg(m)) {
    Rat q = c_mul(p, a.back(), lead_inv);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = c_sub(p, a[shift + i], c_mul(p, q, m[i]));
    }
    poly_trim(a);
  }
  return a;
}

// u with u * a == 1 (mod m). Requires gcd(a, m) constant, which holds for
// every nonzero a of degree < deg m when m is irreducible.
inline Poly poly_mod_inverse(const Int& p, const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = poly_rem(p, a, m);
  if (r1.empty()) fail(Errc::ZeroInversion, "inverse of zero field element");
  Poly s0 = {}, s1 = {Rat(1)};
  while (!r1.empty()) {
    // One division step: r0 = q * r1 + r2.
    Poly q;
    Poly rem = r0;
    Rat lead_inv = c_inv(p, r1.back());
    while (poly_deg(rem) >= poly_deg(r1)) {
      std::size_t shift = rem.size() - r1.size();
      Rat coef = c_mul(p, rem.back(), lead_inv);
      if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
      q[shift] = c_add(p, q[shift], coef);
      for (std::size_t i = 0; i < r1.size(); ++i) {
        rem[shift + i] = c_sub(p, rem[shift + i], c_mul(p, coef, r1[i]));
      }
      poly_trim(rem);
    }
    Poly s2 = poly_add(p, s0, poly_scale(p, poly_mul(p, q, s1), Rat(-1)));
    r0 = r1; r1 = rem;
    s0 = s1; s1 = s2;
  }
  if (poly_deg(r0) != 0) {
    fail(Errc::Validation, "element shares a factor with the modulus");
  }
  return poly_rem(p, poly_scale(p, s0, c_inv(p, r0[0])), m);
}

}  // namespace detail

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  Int p = 0;                 // characteristic; 0 in characteristic zero
  std::vector<Rat> modulus;  // monic presentation polynomial, low to high;
                             // empty for gf(p) and q
  std::string generator;     // symbol of the presentation root; empty when
                             // there is none

  int degree() const {
    return modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1;
  }

  bool finite() const {
    return kind == FieldKind::PrimeField || kind == FieldKind::GaloisField;
  }

  Int order() const {
    if (!finite()) fail(Errc::Validation, "order of an infinite field");
    Int n = 1;
    for (int i = 0; i < degree(); ++i) n *= p;
    return n;
  }

  bool operator==(const FieldDescriptor&) const = default;
};

struct FieldElement {
  std::vector<Rat> c;  // length = descriptor degree, reduced form

  bool operator==(const FieldElement&) const = default;
};

inline FieldElement f_zero(const FieldDescriptor& F) {
  return FieldElement{std::vector<Rat>(F.degree(), Rat(0))};
}

inline FieldElement f_from_rat(const FieldDescriptor& F, const Rat& v) {
  FieldElement r = f_zero(F);
  if (F.p == 0) {
    r.c[0] = v;
  } else {
    Int den = denominator(v);
    Rat x(mod_norm(numerator(v), F.p));
    if (den != 1) x = detail::c_mul(F.p, x, detail::c_inv(F.p, Rat(mod_norm(den, F.p))));
    r.c[0] = x;
  }
  return r;
}

inline FieldElement f_from_int(const FieldDescriptor& F, const Int& v) {
  return f_from_rat(F, Rat(v));
}

inline FieldElement f_one(const FieldDescriptor& F) { return f_from_int(F, 1); }

// Class of the presentation root x; for gf(p) and q this is 1 (the only
// canonical generator those presentations carry).
inline FieldElement f_gen(const FieldDescriptor& F) {
  if (F.degree() == 1) return f_one(F);
  FieldElement r = f_zero(F);
  r.c[1] = 1;
  return r;
}

inline bool f_is_zero(const FieldElement& x) {
  for (const Rat& v : x.c) {
    if (v != 0) return false;
  }
  return true;
}

inline bool f_is_one(const FieldDescriptor& F, const FieldElement& x) {
  return x == f_one(F);
}

namespace detail {

inline FieldElement from_poly(const FieldDescriptor& F, Poly v) {
  if (!F.modulus.empty()) v = poly_rem(F.p, std::move(v), F.modulus);
  poly_trim(v);
  if (poly_deg(v) >= F.degree()) {
    fail(Errc::Validation, "element degree exceeds the presentation");
  }
  v.resize(F.degree(), Rat(0));
  for (Rat& x : v) x = c_norm(F.p, x);
  return FieldElement{std::move(v)};
}

}  // namespace detail

inline FieldElement f_add(const FieldDescriptor& F, const FieldElement& a,
                          const FieldElement& b) {
  FieldElement r = f_zero(F);
  for (int i = 0; i < F.degree(); ++i) r.c[i] = detail::c_add(F.p, a.c[i], b.c[i]);
  return r;
}

inline FieldElement f_neg(const FieldDescriptor& F, const FieldElement& a) {
  FieldElement r = f_zero(F);
  for (int i = 0; i < F.degree(); ++i) r.c[i] = detail::c_sub(F.p, Rat(0), a.c[i]);
  return r;
}

inline FieldElement f_sub(const FieldDescriptor& F, const FieldElement& a,
                          const FieldElement& b) {
  return f_add(F, a, f_neg(F, b));
}

inline FieldElement f_mul(const FieldDescriptor& F, const FieldElement& a,
                          const FieldElement& b) {
  if (F.degree() == 1) {
    FieldElement r = f_zero(F);
    r.c[0] = detail::c_mul(F.p, a.c[0], b.c[0]);
    return r;
  }
  return detail::from_poly(F, detail::poly_mul(F.p, a.c, b.c));
}

inline FieldElement f_inv(const FieldDescriptor& F, const FieldElement& a) {
  if (f_is_zero(a)) fail(Errc::ZeroInversion, "inverse of zero field element");
  if (F.degree() == 1) {
    FieldElement r = f_zero(F);
    r.c[0] = detail::c_inv(F.p, a.c[0]);
    return r;
  }
  detail::Poly v = a.c;
  detail::poly_trim(v);
  return detail::from_poly(F, detail::poly_mod_inverse(F.p, v, F.modulus));
}

inline FieldElement f_div(const FieldDescriptor& F, const FieldElement& a,
                          const FieldElement& b) {
  return f_mul(F, a, f_inv(F, b));
}

inline FieldElement f_pow(const FieldDescriptor& F, FieldElement base, Int e) {
  if (e < 0) {
    base = f_inv(F, base);
    e = -e;
  }
  FieldElement acc = f_one(F);
  while (e > 0) {
    if ((e & 1) != 0) acc = f_mul(F, acc, base);
    base = f_mul(F, base, base);
    e >>= 1;
  }
  return acc;
}

// Index codec for finite fields: n = sum c_i * p^i with c_0 least
// significant. Ascending index is the deterministic enumeration order used
// everywhere (embeddings, subspace bases, brute-force lattices).
inline Int f_index(const FieldDescriptor& F, const FieldElement& x) {
  if (!F.finite()) fail(Errc::Validation, "index into an infinite field");
  Int n = 0;
  for (int i = F.degree() - 1; i >= 0; --i) n = n * F.p + numerator(x.c[i]);
  return n;
}

inline FieldElement f_nth(const FieldDescriptor& F, Int n) {
  if (!F.finite()) fail(Errc::Validation, "index into an infinite field");
  if (n < 0 || n >= F.order()) fail(Errc::Validation, "field index out of range");
  FieldElement r = f_zero(F);
  for (int i = 0; i < F.degree(); ++i) {
    r.c[i] = Rat(n % F.p);
    n /= F.p;
  }
  return r;
}

// Evaluates a base-coefficient polynomial at a point of F; used to check
// presentation roots under embeddings.
inline FieldElement f_eval_poly(const FieldDescriptor& F,
                                const std::vector<Rat>& coeffs,
                                const FieldElement& x) {
  FieldElement acc = f_zero(F);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = f_add(F, f_mul(F, acc, x), f_from_rat(F, coeffs[i]));
  }
  return acc;
}

// Polynomial rendering in the presentation generator, descending powers,
// no spaces: "a^2+2*a+1", "r^2-r+1", "-1/2*r+3", "0".
inline std::string f_str(const FieldDescriptor& F, const FieldElement& x) {
  if (f_is_zero(x)) return "0";
  std::string out;
  for (int i = F.degree() - 1; i >= 0; --i) {
    Rat v = x.c[i];
    if (v == 0) continue;
    bool negative = v < 0;
    Rat mag = negative ? Rat(-v) : v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (i == 0) {
      out += rat_str(mag);
    } else {
      if (mag != 1) {
        out += rat_str(mag);
        out += "*";
      }
      out += F.generator;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace detail {

// Irreducibility over F_p by trial division: no monic divisor of degree in
// [1, deg/2]. Composite trial divisors are harmless since their irreducible
// factors are tried as well.
inline bool fp_poly_irreducible(const Int& p, const Poly& m) {
  int deg = poly_deg(m);
  if (deg < 1) return false;
  std::int64_t pp = static_cast<std::int64_t>(p);
  for (int d = 1; 2 * d <= deg; ++d) {
    Int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (Int n = 0; n < count; ++n) {
      Poly g(d + 1, Rat(0));
      Int rest = n;
      for (int i = 0; i < d; ++i) {
        g[i] = Rat(rest % pp);
        rest /= pp;
      }
      g[d] = 1;
      if (poly_rem(p, m, g).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree k over F_p, where
// candidates are ordered by the index n = sum c_i * p^i of their low
// coefficient vector. Reproduces x^2+x+1 for gf(4), x^3+x+1 for gf(8) and
// x^2+1 for gf(9).
inline Poly smallest_irreducible(const Int& p, int k) {
  Int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  std::int64_t pp = static_cast<std::int64_t>(p);
  for (Int n = 0; n < count; ++n) {
    Poly m(k + 1, Rat(0));
    Int rest = n;
    for (int i = 0; i < k; ++i) {
      m[i] = Rat(rest % pp);
      rest /= pp;
    }
    m[k] = 1;
    if (fp_poly_irreducible(p, m)) return m;
  }
  fail(Errc::Validation, "no irreducible polynomial found");
}

}  // namespace detail

inline FieldDescriptor make_rationals() {
  return FieldDescriptor{FieldKind::Rationals, 0, {}, ""};
}

inline FieldDescriptor make_prime_field(const Int& p) {
  if (!is_prime(p)) fail(Errc::Validation, "gf(" + p.str() + "): " + p.str() + " is not prime");
  return FieldDescriptor{FieldKind::PrimeField, p, {}, ""};
}

// gf(p^k), k >= 2. With no modulus given, the canonical one is the
// lexicographically smallest irreducible (see smallest_irreducible).
inline FieldDescriptor make_galois_field(const Int& p, int k,
                                         std::vector<Rat> modulus = {},
                                         std::string generator = "a") {
  if (!is_prime(p)) fail(Errc::Validation, "gf base " + p.str() + " is not prime");
  if (k < 2) fail(Errc::Validation, "galois field degree must be at least 2");
  if (modulus.empty()) {
    modulus = detail::smallest_irreducible(p, k);
  } else {
    for (Rat& c : modulus) c = detail::c_norm(p, c);
    detail::poly_trim(modulus);
    if (detail::poly_deg(modulus) != k || modulus.back() != 1) {
      fail(Errc::Validation, "modulus must be monic of degree " + std::to_string(k));
    }
    if (!detail::fp_poly_irreducible(p, modulus)) {
      fail(Errc::Validation, "modulus is reducible");
    }
  }
  if (generator.empty()) fail(Errc::Validation, "galois field needs a generator symbol");
  return FieldDescriptor{FieldKind::GaloisField, p, std::move(modulus),
                         std::move(generator)};
}

// Simple number field q(g; m) with m monic over the integers. The rational
// root test gives a complete irreducibility certificate through degree 3;
// above that a reduction mod small primes is attempted and the descriptor
// is accepted if no certificate of reducibility is found.
inline FieldDescriptor make_number_field(std::string generator,
                                         std::vector<Rat> minpoly) {
  detail::poly_trim(minpoly);
  int deg = detail::poly_deg(minpoly);
  if (deg < 1) fail(Errc::Validation, "minimal polynomial must be nonconstant");
  if (minpoly.back() != 1) fail(Errc::Validation, "minimal polynomial must be monic");
  for (const Rat& c : minpoly) {
    if (denominator(c) != 1) {
      fail(Errc::Validation, "minimal polynomial must have integer coefficients");
    }
  }
  if (generator.empty()) fail(Errc::Validation, "number field needs a generator symbol");
  if (deg == 1) fail(Errc::Validation, "degree one extension of q is q itself");
  // Rational root test: a rational root of a monic integer polynomial is an
  // integer dividing the constant term.
  Int c0 = numerator(minpoly[0]);
  auto has_root = [&](const Int& r) {
    Rat acc = 0;
    for (std::size_t i = minpoly.size(); i-- > 0;) acc = acc * r + minpoly[i];
    return acc == 0;
  };
  if (c0 == 0) fail(Errc::Validation, "minimal polynomial has root 0");
  Int bound = c0 < 0 ? Int(-c0) : c0;
  for (Int d = 1; d <= bound; ++d) {
    if (bound % d != 0) continue;
    if (has_root(d) || has_root(-d)) {
      fail(Errc::Validation, "minimal polynomial has rational root");
    }
  }
  if (deg > 3) {
    for (Int q : {Int(2), Int(3), Int(5), Int(7), Int(11), Int(13)}) {
      detail::Poly red(minpoly.size());
      for (std::size_t i = 0; i < minpoly.size(); ++i) {
        red[i] = detail::c_norm(q, minpoly[i]);
      }
      if (detail::poly_deg(red) == deg && detail::fp_poly_irreducible(q, red)) {
        break;  // certified irreducible
      }
    }
  }
  return FieldDescriptor{FieldKind::NumberField, 0, std::move(minpoly),
                         std::move(generator)};
}

// Renders the integer polynomial of a presentation, e.g. "a^3-2".
inline std::string modulus_str(const FieldDescriptor& F) {
  FieldDescriptor shell = F;
  shell.modulus.clear();
  // Reuse element rendering by treating the modulus as coefficients of a
  // virtual element of one higher degree.
  std::string out;
  for (int i = F.degree(); i >= 0; --i) {
    Rat v = i < static_cast<int>(F.modulus.size()) ? F.modulus[i] : Rat(0);
    if (v == 0) continue;
    bool negative = v < 0;
    Rat mag = negative ? Rat(-v) : v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (i == 0) {
      out += rat_str(mag);
    } else {
      if (mag != 1) {
        out += rat_str(mag);
        out += "*";
      }
      out += F.generator;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// Canonical text of a field: "gf(4)", "q", "q(r;r^3-2)". Galois fields with
// the canonical modulus print by order alone; a nondefault modulus is spelled
// out so the text stays faithful.
inline std::string field_str(const FieldDescriptor& F) {
  switch (F.kind) {
    case FieldKind::PrimeField:
      return "gf(" + F.p.str() + ")";
    case FieldKind::GaloisField: {
      std::string base = "gf(" + F.order().str() + ")";
      FieldDescriptor canonical = make_galois_field(F.p, F.degree());
      if (F.modulus == canonical.modulus && F.generator == canonical.generator) {
        return base;
      }
      return base + "[" + modulus_str(F) + "]";
    }
    case FieldKind::Rationals:
      return "q";
    case FieldKind::NumberField:
      return "q(" + F.generator + ";" + modulus_str(F) + ")";
  }
  return "?";
}

inline FieldElement f_random(const FieldDescriptor& F, Rng& rng) {
  if (F.finite()) {
    Int order = F.order();
    // Desk-scale orders fit in 64 bits.
    return f_nth(F, Int(rng.below(static_cast<std::uint64_t>(order))));
  }
  FieldElement r = f_zero(F);
  for (int i = 0; i < F.degree(); ++i) {
    Int num = rng.range(-4, 4);
    Int den = 1 + static_cast<std::int64_t>(rng.below(3));
    r.c[i] = Rat(num) / Rat(den);
  }
  return r;
}

inline FieldElement f_random_nonzero(const FieldDescriptor& F, Rng& rng) {
  for (;;) {
    FieldElement x = f_random(F, rng);
    if (!f_is_zero(x)) return x;
  }
}

}  // namespace pvd
