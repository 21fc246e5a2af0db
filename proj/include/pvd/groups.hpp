#pragma once

// Ordered abelian groups built from five kinds: the integers, the
// rationals, lexicographic pairs of linear kinds, trivially ordered
// quotients F#/K# of an extension pair, and lexicographic sums of a linear
// kind over such a quotient. Comparison is four valued: once an antichain
// quotient enters, INCOMPARABLE is an ordinary outcome, not an error.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pvd/extension.hpp"

namespace pvd {

enum class GroupKind { Int, Rational, LexPair, TrivialQuotient, LexSum };

struct GroupDescriptor {
  GroupKind kind = GroupKind::Int;
  std::vector<GroupDescriptor> parts;  // LexPair and LexSum: exactly two
  ExtPtr ext;                          // TrivialQuotient only

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (a.kind != b.kind || a.parts != b.parts) return false;
    if (a.kind != GroupKind::TrivialQuotient) return true;
    return a.ext->K == b.ext->K && a.ext->F == b.ext->F;
  }
};

struct GroupElement {
  std::variant<Int, Rat, std::vector<GroupElement>, FieldElement> v;

  const Int& as_int() const { return std::get<Int>(v); }
  const Rat& as_rat() const { return std::get<Rat>(v); }
  const std::vector<GroupElement>& as_pair() const {
    return std::get<std::vector<GroupElement>>(v);
  }
  const FieldElement& as_coset() const { return std::get<FieldElement>(v); }
};

inline GroupElement ge_int(Int n) { return GroupElement{std::move(n)}; }
inline GroupElement ge_rat(Rat q) { return GroupElement{std::move(q)}; }
inline GroupElement ge_pair(GroupElement a, GroupElement b) {
  std::vector<GroupElement> p;
  p.push_back(std::move(a));
  p.push_back(std::move(b));
  return GroupElement{std::move(p)};
}
inline GroupElement ge_coset(FieldElement rep) {
  return GroupElement{std::move(rep)};
}

inline bool linearly_ordered(const GroupDescriptor& G) {
  switch (G.kind) {
    case GroupKind::Int:
    case GroupKind::Rational:
      return true;
    case GroupKind::LexPair:
    case GroupKind::LexSum:
      return linearly_ordered(G.parts[0]) && linearly_ordered(G.parts[1]);
    case GroupKind::TrivialQuotient:
      return G.ext->trivial();  // one coset only
  }
  return false;
}

inline GroupDescriptor g_int() { return GroupDescriptor{GroupKind::Int, {}, nullptr}; }
inline GroupDescriptor g_rational() {
  return GroupDescriptor{GroupKind::Rational, {}, nullptr};
}

inline GroupDescriptor g_lex_pair(GroupDescriptor a, GroupDescriptor b) {
  if (!linearly_ordered(a) || !linearly_ordered(b)) {
    fail(Errc::Validation, "lex pair parts must be linearly ordered");
  }
  return GroupDescriptor{GroupKind::LexPair, {std::move(a), std::move(b)}, nullptr};
}

inline GroupDescriptor g_trivial_quotient(ExtPtr ext) {
  if (!ext) fail(Errc::Validation, "quotient needs an extension pair");
  return GroupDescriptor{GroupKind::TrivialQuotient, {}, std::move(ext)};
}

// Lex sum of a linearly ordered kind over an antichain quotient: order is
// decided by the first coordinate, equality needs the cosets to agree.
inline GroupDescriptor g_lex_sum(GroupDescriptor linear, GroupDescriptor quotient) {
  if (!linearly_ordered(linear)) {
    fail(Errc::Validation, "lex sum base must be linearly ordered");
  }
  if (quotient.kind != GroupKind::TrivialQuotient) {
    fail(Errc::Validation, "lex sum fiber must be a trivially ordered quotient");
  }
  return GroupDescriptor{GroupKind::LexSum, {std::move(linear), std::move(quotient)},
                         nullptr};
}

inline void validate_payload(const GroupDescriptor& G, const GroupElement& x) {
  switch (G.kind) {
    case GroupKind::Int:
      if (!std::holds_alternative<Int>(x.v)) {
        fail(Errc::PayloadMismatch, "expected an integer payload");
      }
      return;
    case GroupKind::Rational:
      if (!std::holds_alternative<Rat>(x.v)) {
        fail(Errc::PayloadMismatch, "expected a rational payload");
      }
      return;
    case GroupKind::LexPair:
    case GroupKind::LexSum: {
      if (!std::holds_alternative<std::vector<GroupElement>>(x.v) ||
          x.as_pair().size() != 2) {
        fail(Errc::PayloadMismatch, "expected a two component payload");
      }
      validate_payload(G.parts[0], x.as_pair()[0]);
      validate_payload(G.parts[1], x.as_pair()[1]);
      return;
    }
    case GroupKind::TrivialQuotient: {
      if (!std::holds_alternative<FieldElement>(x.v)) {
        fail(Errc::PayloadMismatch, "expected a coset representative payload");
      }
      const FieldElement& rep = x.as_coset();
      if (static_cast<int>(rep.c.size()) != G.ext->F.degree()) {
        fail(Errc::PayloadMismatch, "coset representative has wrong width");
      }
      if (f_is_zero(rep)) {
        fail(Errc::PayloadMismatch, "coset representative must be nonzero");
      }
      return;
    }
  }
}

inline GroupElement g_zero(const GroupDescriptor& G) {
  switch (G.kind) {
    case GroupKind::Int: return ge_int(0);
    case GroupKind::Rational: return ge_rat(0);
    case GroupKind::LexPair:
    case GroupKind::LexSum:
      return ge_pair(g_zero(G.parts[0]), g_zero(G.parts[1]));
    case GroupKind::TrivialQuotient:
      return ge_coset(f_one(G.ext->F));  // identity coset K#
  }
  fail(Errc::UnsupportedKind, "zero of unknown kind");
}

inline GroupElement g_add(const GroupDescriptor& G, const GroupElement& x,
                          const GroupElement& y) {
  validate_payload(G, x);
  validate_payload(G, y);
  switch (G.kind) {
    case GroupKind::Int: return ge_int(x.as_int() + y.as_int());
    case GroupKind::Rational: return ge_rat(x.as_rat() + y.as_rat());
    case GroupKind::LexPair:
    case GroupKind::LexSum:
      return ge_pair(g_add(G.parts[0], x.as_pair()[0], y.as_pair()[0]),
                     g_add(G.parts[1], x.as_pair()[1], y.as_pair()[1]));
    case GroupKind::TrivialQuotient:
      return ge_coset(f_mul(G.ext->F, x.as_coset(), y.as_coset()));
  }
  fail(Errc::UnsupportedKind, "addition of unknown kind");
}

inline GroupElement g_neg(const GroupDescriptor& G, const GroupElement& x) {
  validate_payload(G, x);
  switch (G.kind) {
    case GroupKind::Int: return ge_int(-x.as_int());
    case GroupKind::Rational: return ge_rat(-x.as_rat());
    case GroupKind::LexPair:
    case GroupKind::LexSum:
      return ge_pair(g_neg(G.parts[0], x.as_pair()[0]),
                     g_neg(G.parts[1], x.as_pair()[1]));
    case GroupKind::TrivialQuotient:
      return ge_coset(f_inv(G.ext->F, x.as_coset()));
  }
  fail(Errc::UnsupportedKind, "negation of unknown kind");
}

inline GroupElement g_sub(const GroupDescriptor& G, const GroupElement& x,
                          const GroupElement& y) {
  return g_add(G, x, g_neg(G, y));
}

enum class Cmp { LT, EQ, GT, Incomparable };

inline Cmp g_compare(const GroupDescriptor& G, const GroupElement& x,
                     const GroupElement& y) {
  validate_payload(G, x);
  validate_payload(G, y);
  switch (G.kind) {
    case GroupKind::Int: {
      const Int &a = x.as_int(), &b = y.as_int();
      return a < b ? Cmp::LT : a > b ? Cmp::GT : Cmp::EQ;
    }
    case GroupKind::Rational: {
      const Rat &a = x.as_rat(), &b = y.as_rat();
      return a < b ? Cmp::LT : a > b ? Cmp::GT : Cmp::EQ;
    }
    case GroupKind::LexPair:
    case GroupKind::LexSum: {
      Cmp first = g_compare(G.parts[0], x.as_pair()[0], y.as_pair()[0]);
      if (first != Cmp::EQ) return first;
      return g_compare(G.parts[1], x.as_pair()[1], y.as_pair()[1]);
    }
    case GroupKind::TrivialQuotient:
      return same_coset(*G.ext, x.as_coset(), y.as_coset()) ? Cmp::EQ
                                                            : Cmp::Incomparable;
  }
  fail(Errc::UnsupportedKind, "comparison of unknown kind");
}

inline bool g_eq(const GroupDescriptor& G, const GroupElement& x,
                 const GroupElement& y) {
  return g_compare(G, x, y) == Cmp::EQ;
}

inline bool is_positive(const GroupDescriptor& G, const GroupElement& x) {
  Cmp c = g_compare(G, g_zero(G), x);
  return c == Cmp::LT || c == Cmp::EQ;
}

inline bool is_strictly_positive(const GroupDescriptor& G, const GroupElement& x) {
  return g_compare(G, g_zero(G), x) == Cmp::LT;
}

inline std::string g_str(const GroupDescriptor& G, const GroupElement& x) {
  validate_payload(G, x);
  switch (G.kind) {
    case GroupKind::Int: return x.as_int().str();
    case GroupKind::Rational: return rat_str(x.as_rat());
    case GroupKind::LexPair:
    case GroupKind::LexSum:
      return "(" + g_str(G.parts[0], x.as_pair()[0]) + "," +
             g_str(G.parts[1], x.as_pair()[1]) + ")";
    case GroupKind::TrivialQuotient:
      return f_str(G.ext->F, x.as_coset());
  }
  return "?";
}

inline std::string group_str(const GroupDescriptor& G) {
  switch (G.kind) {
    case GroupKind::Int: return "z";
    case GroupKind::Rational: return "q";
    case GroupKind::LexPair:
      return group_str(G.parts[0]) + "*" + group_str(G.parts[1]);
    case GroupKind::TrivialQuotient: return "F#/K#";
    case GroupKind::LexSum:
      return group_str(G.parts[0]) + " o " + group_str(G.parts[1]);
  }
  return "?";
}

// Minimality of a strictly positive element, decided analytically per kind.
inline bool is_atom(const GroupDescriptor& G, const GroupElement& x) {
  validate_payload(G, x);
  if (!is_strictly_positive(G, x)) return false;
  switch (G.kind) {
    case GroupKind::Int:
      return x.as_int() == 1;
    case GroupKind::Rational:
      return false;  // q/2 always lies strictly between
    case GroupKind::TrivialQuotient:
      return false;  // positive cone is {0}; unreachable after the guard
    case GroupKind::LexPair: {
      const GroupDescriptor& A = G.parts[0];
      const GroupDescriptor& B = G.parts[1];
      if (A.kind == GroupKind::Int && B.kind == GroupKind::Int) {
        return x.as_pair()[0].as_int() == 0 && x.as_pair()[1].as_int() == 1;
      }
      fail(Errc::UnsupportedKind, "no atom rule for this lex pair");
    }
    case GroupKind::LexSum: {
      // Atoms are the elements sitting over an atom of the linear part; the
      // coset coordinate is free because distinct cosets are incomparable.
      const GroupDescriptor& L = G.parts[0];
      const GroupElement& head = x.as_pair()[0];
      if (L.kind == GroupKind::Int) return head.as_int() == 1;
      if (L.kind == GroupKind::Rational) return false;
      if (L.kind == GroupKind::LexPair && L.parts[0].kind == GroupKind::Int &&
          L.parts[1].kind == GroupKind::Int) {
        return head.as_pair()[0].as_int() == 0 && head.as_pair()[1].as_int() == 1;
      }
      fail(Errc::UnsupportedKind, "no atom rule for this lex sum base");
    }
  }
  fail(Errc::UnsupportedKind, "no atom rule for this kind");
}

enum class NonAtomicKind { NoAtoms, UnreachableWitness };

struct AtomicityReport {
  bool atomic = false;
  std::optional<GroupElement> witness;  // strictly positive, not a sum of atoms
  NonAtomicKind why = NonAtomicKind::NoAtoms;
  std::string reason;
};

// Atomicity of the positive cone, decided analytically per kind.
inline AtomicityReport positive_cone_atomicity(const GroupDescriptor& G) {
  switch (G.kind) {
    case GroupKind::Int:
      return {true, std::nullopt, NonAtomicKind::NoAtoms,
              "every positive n is a sum of n copies of the atom 1"};
    case GroupKind::Rational:
      return {false, ge_rat(1), NonAtomicKind::NoAtoms,
              "no atoms: q/2 lies strictly between 0 and any positive q"};
    case GroupKind::TrivialQuotient:
      return {true, std::nullopt, NonAtomicKind::NoAtoms,
              "positive cone is {0}; atomicity is vacuous"};
    case GroupKind::LexPair: {
      if (G.parts[0].kind == GroupKind::Int && G.parts[1].kind == GroupKind::Int) {
        return {false, ge_pair(ge_int(1), ge_int(0)),
                NonAtomicKind::UnreachableWitness,
                "atoms are exactly (0,1); their sums never leave first "
                "coordinate 0"};
      }
      fail(Errc::UnsupportedKind, "no atomicity rule for this lex pair");
    }
    case GroupKind::LexSum: {
      const GroupDescriptor& L = G.parts[0];
      GroupElement identity = g_zero(G.parts[1]);
      if (L.kind == GroupKind::Int) {
        return {true, std::nullopt, NonAtomicKind::NoAtoms,
                "atoms (1,c) reach every (n,d) as (1,d) + (n-1)(1,1)"};
      }
      if (L.kind == GroupKind::Rational) {
        return {false, ge_pair(ge_rat(1), identity), NonAtomicKind::NoAtoms,
                "no atoms: the linear part is densely ordered"};
      }
      if (L.kind == GroupKind::LexPair && L.parts[0].kind == GroupKind::Int &&
          L.parts[1].kind == GroupKind::Int) {
        return {false, ge_pair(ge_pair(ge_int(1), ge_int(0)), identity),
                NonAtomicKind::UnreachableWitness,
                "atoms sit over (0,1); sums of k atoms sit over (0,k)"};
      }
      fail(Errc::UnsupportedKind, "no atomicity rule for this lex sum base");
    }
  }
  fail(Errc::UnsupportedKind, "no atomicity rule for this kind");
}

}  // namespace pvd
