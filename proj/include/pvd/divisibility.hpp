#pragma once

// Group of divisibility machinery for the restricted series ring S (series
// whose constant coefficient lies in K) inside R = F[[G+]]. The class map
// psi sends a nonzero quotient num/den to (ord num - ord den, lead num /
// lead den * K#) in the lex sum of the exponent group over F#/K#.
// Divisibility has two independent routes: the psi route (positivity in the
// value group) and a truncated long-division oracle; the two must agree on
// every conclusive case, and tests enforce that.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvd/series.hpp"

namespace pvd {

enum class RingName { R, S };

struct QuotientElement {
  Series num;
  Series den;
};

// Value group of S: the exponent group lex-summed over F#/K#.
inline GroupDescriptor value_group(ExtPtr ext, GroupDescriptor gamma) {
  return g_lex_sum(std::move(gamma), g_trivial_quotient(std::move(ext)));
}

struct DivClass {
  GroupElement gamma;  // ord num - ord den
  FieldElement coset;  // lead num / lead den, read modulo K#
};

inline GroupElement div_class_element(const DivClass& d) {
  return ge_pair(d.gamma, ge_coset(d.coset));
}

inline DivClass psi(const QuotientElement& q) {
  detail::check_compatible(q.num, q.den);
  if (s_is_zero(q.num)) fail(Errc::ZeroSeries, "psi of a zero numerator");
  if (s_is_zero(q.den)) fail(Errc::ZeroSeries, "psi of a zero denominator");
  DivClass d;
  d.gamma = g_sub(q.num.group, s_min(q.num), s_min(q.den));
  d.coset = f_div(q.num.ext->F, s_lead(q.num), s_lead(q.den));
  return d;
}

inline bool div_class_eq(const ExtPtr& ext, const GroupDescriptor& gamma,
                         const DivClass& a, const DivClass& b) {
  GroupDescriptor vg = value_group(ext, gamma);
  return g_eq(vg, div_class_element(a), div_class_element(b));
}

inline std::string div_class_str(const ExtPtr& ext, const GroupDescriptor& gamma,
                                 const DivClass& d) {
  std::string coset = ext_contains(*ext, d.coset)
                          ? std::string("K#")
                          : f_str(ext->F, d.coset) + "*K#";
  return "(" + g_str(gamma, d.gamma) + ", " + coset + ")";
}

namespace detail {

inline void require_operands(const Series& f, const Series& g, RingName ring) {
  check_compatible(f, g);
  if (s_is_zero(f)) fail(Errc::ZeroSeries, "divisibility with a zero divisor");
  if (s_is_zero(g)) fail(Errc::ZeroSeries, "divisibility with a zero dividend");
  if (ring == RingName::S) {
    if (!s_in_s(f) || !s_in_s(g)) {
      fail(Errc::NotInRing, "operands must lie in S for S-divisibility");
    }
  }
}

}  // namespace detail

// psi route: f divides g in R iff ord f <= ord g; in S iff psi(g/f) lies in
// the positive cone of the value group, which bundles the three cases
// (strictly larger order, equal order with ratio in K#, anything else) into
// one positivity test.
inline bool divides(const Series& f, const Series& g, RingName ring) {
  detail::require_operands(f, g, ring);
  if (ring == RingName::R) {
    Cmp c = g_compare(f.group, s_min(f), s_min(g));
    return c == Cmp::LT || c == Cmp::EQ;
  }
  DivClass d = psi(QuotientElement{g, f});
  return is_positive(value_group(f.ext, f.group), div_class_element(d));
}

// Truncated long-division oracle: materializes g/f as far as the inputs'
// precision allows and reads membership off the quotient. Returns nullopt
// when the quotient is not determined far enough to decide, never a guess.
inline std::optional<bool> truncated_divides(const Series& f, const Series& g,
                                             RingName ring) {
  detail::require_operands(f, g, ring);
  const GroupElement& mf = s_min(f);
  const GroupElement& mg = s_min(g);
  if (g_compare(f.group, mg, mf) == Cmp::LT) {
    return false;  // quotient falls outside R, conclusively
  }
  Series f0 = s_shift(f, g_neg(f.group, mf));  // order 0, invertible
  Series inv;
  try {
    inv = s_invert(f0);
  } catch (const Error& e) {
    if (e.code() == Errc::PrecisionLoss) return std::nullopt;
    throw;
  }
  Series prod = s_mul(g, inv);  // g / f shifted up by mf
  if (ring == RingName::R) return true;
  if (g_compare(f.group, prod.tau, mf) != Cmp::GT) {
    return std::nullopt;  // quotient constant term not determined
  }
  Series h = s_shift(prod, g_neg(f.group, mf));
  return s_in_s(h);
}

// Truncated quotient g / f for callers that need the witness itself.
inline std::optional<Series> truncated_quotient(const Series& f, const Series& g) {
  detail::require_operands(f, g, RingName::R);
  const GroupElement& mf = s_min(f);
  if (g_compare(f.group, s_min(g), mf) == Cmp::LT) return std::nullopt;
  Series f0 = s_shift(f, g_neg(f.group, mf));
  Series inv;
  try {
    inv = s_invert(f0);
  } catch (const Error& e) {
    if (e.code() == Errc::PrecisionLoss) return std::nullopt;
    throw;
  }
  Series prod = s_mul(g, inv);
  if (g_compare(f.group, prod.tau, mf) != Cmp::GT) return std::nullopt;
  return s_shift(prod, g_neg(f.group, mf));
}

// Boundary map on nonzero quotients of S, defined for integer exponents:
// the order difference. Units of the valuation overring land on 0.
inline Int boundary(const QuotientElement& q) {
  if (q.num.group.kind != GroupKind::Int) {
    fail(Errc::UnsupportedGroup, "boundary map needs integer exponents");
  }
  detail::check_compatible(q.num, q.den);
  if (s_is_zero(q.num) || s_is_zero(q.den)) {
    fail(Errc::ZeroSeries, "boundary of a zero quotient");
  }
  if (!s_in_s(q.num) || !s_in_s(q.den)) {
    fail(Errc::NotInRing, "boundary operands must lie in S");
  }
  return s_min(q.num).as_int() - s_min(q.den).as_int();
}

struct Factorization {
  Series unit;                // unit of S
  std::vector<Series> atoms;  // order 1 members of S
};

// Splits a nonzero member of S with integer exponents into a unit of S times
// order one atoms. With f = c * t^n * u (normal form): when c lies in K the
// unit c*u stays in S and the atoms are n plain t's; otherwise c is folded
// into one atom c*t*u whose constant term is 0, and n-1 plain t's follow.
inline Factorization factor_atoms(const Series& f) {
  if (f.group.kind != GroupKind::Int) {
    fail(Errc::UnsupportedGroup, "atom factorization needs integer exponents");
  }
  if (s_is_zero(f)) fail(Errc::ZeroSeries, "factorization of zero");
  if (!s_in_s(f)) fail(Errc::NotInRing, "factorization operand must lie in S");

  Factorization out;
  Int n = s_min(f).as_int();
  if (n == 0) {
    out.unit = f;  // constant term in K#, already a unit of S
    return out;
  }
  NormalForm nf = s_normal_form(f);
  Series t = s_delta(f.ext, f.group, ge_int(1), f.tau, f.budget);
  if (ext_contains(*f.ext, nf.lead)) {
    out.unit = s_scale(nf.unit, nf.lead);
    for (Int i = 0; i < n; ++i) out.atoms.push_back(t);
  } else {
    out.unit = s_const(f.ext, f.group, f_one(f.ext->F), f.tau, f.budget);
    out.atoms.push_back(s_scale(s_shift(nf.unit, ge_int(1)), nf.lead));
    for (Int i = 1; i < n; ++i) out.atoms.push_back(t);
  }
  return out;
}

// Splits a nonunit member of S into two nonunit members when it is not an
// atom. Order one elements of S are atoms: in any product the orders add,
// an order zero factor in S is a unit of S, so nullopt certifies atomicity
// within S. Elements of order n >= 2 split off a single t.
inline std::optional<std::pair<Series, Series>> atom_split_witness(
    const Series& f) {
  if (f.group.kind != GroupKind::Int) {
    fail(Errc::UnsupportedGroup, "atom splitting needs integer exponents");
  }
  if (s_is_zero(f)) fail(Errc::ZeroSeries, "splitting zero");
  if (!s_in_s(f)) fail(Errc::NotInRing, "splitting operand must lie in S");
  if (s_unit_s(f)) fail(Errc::Validation, "units are not factorization subjects");
  if (s_min(f).as_int() < 2) return std::nullopt;
  Series t = s_delta(f.ext, f.group, ge_int(1), f.tau, f.budget);
  return std::make_pair(t, s_shift(f, ge_int(-1)));
}

}  // namespace pvd
