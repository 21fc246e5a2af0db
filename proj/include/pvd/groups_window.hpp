#pragma once

// Bounded verification for finitely generated subgroups: convexity and
// directedness checked against every element inside a finite window. A
// verdict is relative to the window, never a proof about the whole group;
// the budget failure is explicit (WindowExhausted), not a silent truncation.

#include <cstdint>
#include <optional>
#include <vector>

#include "pvd/groups.hpp"

namespace pvd {

inline constexpr std::uint64_t kComboCap = 200000;
inline constexpr std::uint64_t kMemberCap = 2000;
inline constexpr std::uint64_t kAmbientCap = 200000;

// Window norm: integers by magnitude, rationals by |num| + den - 1 so that
// integers keep their magnitude, pairs by the larger component, cosets 0.
inline Int window_norm(const GroupDescriptor& G, const GroupElement& x) {
  switch (G.kind) {
    case GroupKind::Int:
      return abs(x.as_int());
    case GroupKind::Rational:
      return abs(numerator(x.as_rat())) + denominator(x.as_rat()) - 1;
    case GroupKind::LexPair:
    case GroupKind::LexSum: {
      Int a = window_norm(G.parts[0], x.as_pair()[0]);
      Int b = window_norm(G.parts[1], x.as_pair()[1]);
      return a > b ? a : b;
    }
    case GroupKind::TrivialQuotient:
      return 0;
  }
  fail(Errc::UnsupportedKind, "norm of unknown kind");
}

namespace detail {

inline void collect_coset_leaves(const GroupElement& x,
                                 std::vector<FieldElement>& out) {
  if (std::holds_alternative<FieldElement>(x.v)) {
    out.push_back(x.as_coset());
    return;
  }
  if (std::holds_alternative<std::vector<GroupElement>>(x.v)) {
    for (const GroupElement& part : x.as_pair()) collect_coset_leaves(part, out);
  }
}

inline void push_unique(const GroupDescriptor& G, std::vector<GroupElement>& v,
                        GroupElement x, std::uint64_t cap, const char* what) {
  for (const GroupElement& seen : v) {
    if (g_eq(G, seen, x)) return;
  }
  if (v.size() >= cap) {
    fail(Errc::WindowExhausted, std::string(what) + " outgrew its budget");
  }
  v.push_back(std::move(x));
}

}  // namespace detail

// All ambient elements of norm <= window. The coset axis of an infinite
// quotient cannot be enumerated; it is restricted to the supplied pool plus
// the identity coset, and the caller's verdict is bounded accordingly.
inline std::vector<GroupElement> window_elements(
    const GroupDescriptor& G, const Int& window,
    const std::vector<FieldElement>& coset_pool = {}) {
  std::vector<GroupElement> out;
  switch (G.kind) {
    case GroupKind::Int: {
      for (Int n = -window; n <= window; ++n) out.push_back(ge_int(n));
      return out;
    }
    case GroupKind::Rational: {
      for (Int q = 1; q <= window + 1; ++q) {
        for (Int p = -(window + 1); p <= window + 1; ++p) {
          Rat r(p, q);
          if (window_norm(G, ge_rat(r)) > window) continue;
          detail::push_unique(G, out, ge_rat(r), kAmbientCap, "ambient window");
        }
      }
      return out;
    }
    case GroupKind::TrivialQuotient: {
      if (G.ext->F.finite()) {
        for (const FieldElement& rep : coset_reps(*G.ext)) {
          out.push_back(ge_coset(rep));
        }
        return out;
      }
      out.push_back(g_zero(G));
      for (const FieldElement& rep : coset_pool) {
        if (f_is_zero(rep)) continue;
        detail::push_unique(G, out, ge_coset(rep), kAmbientCap, "coset pool");
      }
      return out;
    }
    case GroupKind::LexPair:
    case GroupKind::LexSum: {
      std::vector<GroupElement> left = window_elements(G.parts[0], window, coset_pool);
      std::vector<GroupElement> right = window_elements(G.parts[1], window, coset_pool);
      if (left.size() * right.size() > kAmbientCap) {
        fail(Errc::WindowExhausted, "ambient window outgrew its budget");
      }
      for (const GroupElement& a : left) {
        for (const GroupElement& b : right) out.push_back(ge_pair(a, b));
      }
      return out;
    }
  }
  fail(Errc::UnsupportedKind, "window of unknown kind");
}

enum class WindowVerdict { ConvexDirected, FailsConvex, FailsDirected };

struct WindowCheckResult {
  WindowVerdict verdict = WindowVerdict::ConvexDirected;
  std::optional<GroupElement> witness;
  std::uint64_t members = 0;   // subgroup elements found inside the window
  std::uint64_t ambient = 0;   // ambient elements compared against
  bool subgroup_closed = false;  // member set is literally a finite subgroup
};

// Enumerates the subgroup generated by gens as all integer combinations
// with coefficients in [-window, window], keeps the members inside the
// window, and tests convexity and directedness against the ambient window.
inline WindowCheckResult convex_directed_window_check(
    const GroupDescriptor& G, const std::vector<GroupElement>& gens,
    const Int& window) {
  if (window < 1) fail(Errc::Validation, "window must be at least 1");
  for (const GroupElement& g : gens) validate_payload(G, g);

  // Coefficient box enumeration.
  std::uint64_t combos = 1;
  std::uint64_t side = static_cast<std::uint64_t>(2 * window + 1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    combos *= side;
    if (combos > kComboCap) {
      fail(Errc::WindowExhausted, "coefficient box outgrew its budget");
    }
  }

  std::vector<GroupElement> members;
  members.push_back(g_zero(G));
  std::vector<Int> coeff(gens.size(), -window);
  bool done = gens.empty();
  while (!done) {
    GroupElement value = g_zero(G);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      GroupElement scaled = g_zero(G);
      Int times = coeff[i] < 0 ? Int(-coeff[i]) : coeff[i];
      for (Int t = 0; t < times; ++t) scaled = g_add(G, scaled, gens[i]);
      if (coeff[i] < 0) scaled = g_neg(G, scaled);
      value = g_add(G, value, scaled);
    }
    if (window_norm(G, value) <= window) {
      detail::push_unique(G, members, std::move(value), kMemberCap,
                          "member enumeration");
    }
    std::size_t pos = 0;
    for (;; ++pos) {
      if (pos == coeff.size()) {
        done = true;
        break;
      }
      if (coeff[pos] < window) {
        ++coeff[pos];
        break;
      }
      coeff[pos] = -window;
    }
  }

  WindowCheckResult result;
  result.members = members.size();

  // Closure flag: is the member set a finite subgroup outright? Then the
  // verdicts below are statements about the subgroup itself.
  if (members.size() <= 200) {
    result.subgroup_closed = true;
    for (const GroupElement& a : members) {
      for (const GroupElement& b : members) {
        GroupElement d = g_sub(G, a, b);
        bool found = false;
        for (const GroupElement& m : members) {
          if (g_eq(G, m, d)) {
            found = true;
            break;
          }
        }
        if (!found) {
          result.subgroup_closed = false;
          break;
        }
      }
      if (!result.subgroup_closed) break;
    }
  }

  std::vector<FieldElement> pool;
  for (const GroupElement& m : members) detail::collect_coset_leaves(m, pool);
  std::vector<GroupElement> ambient = window_elements(G, window, pool);
  result.ambient = ambient.size();

  auto is_member = [&](const GroupElement& x) {
    for (const GroupElement& m : members) {
      if (g_eq(G, m, x)) return true;
    }
    return false;
  };

  // Convexity: no outside element strictly between two members.
  for (const GroupElement& z : ambient) {
    if (is_member(z)) continue;
    bool below = false, above = false;
    for (const GroupElement& m : members) {
      Cmp c = g_compare(G, m, z);
      if (c == Cmp::LT) below = true;
      if (c == Cmp::GT) above = true;
      if (below && above) break;
    }
    if (below && above) {
      result.verdict = WindowVerdict::FailsConvex;
      result.witness = z;
      return result;
    }
  }

  // Directedness: every member splits as a difference of positive members.
  std::vector<GroupElement> positives;
  for (const GroupElement& m : members) {
    if (is_positive(G, m)) positives.push_back(m);
  }
  for (const GroupElement& m : members) {
    bool split = false;
    for (const GroupElement& p : positives) {
      GroupElement q = g_sub(G, p, m);
      for (const GroupElement& pp : positives) {
        if (g_eq(G, pp, q)) {
          split = true;
          break;
        }
      }
      if (split) break;
    }
    if (!split) {
      result.verdict = WindowVerdict::FailsDirected;
      result.witness = m;
      return result;
    }
  }

  result.verdict = WindowVerdict::ConvexDirected;
  return result;
}

// Atoms inside the window; the coset pool seeds infinite quotient axes.
inline std::vector<GroupElement> atoms_in_window(
    const GroupDescriptor& G, const Int& window,
    const std::vector<FieldElement>& coset_pool = {}) {
  std::vector<GroupElement> atoms;
  for (const GroupElement& x : window_elements(G, window, coset_pool)) {
    if (is_atom(G, x)) atoms.push_back(x);
  }
  return atoms;
}

// All sums of between 1 and depth atoms, deduplicated; used to certify that
// a witness is unreachable.
inline std::vector<GroupElement> bounded_atom_sums(
    const GroupDescriptor& G, const std::vector<GroupElement>& atoms,
    int depth) {
  std::vector<GroupElement> sums;
  std::vector<GroupElement> frontier;
  for (const GroupElement& a : atoms) {
    detail::push_unique(G, frontier, a, kMemberCap, "atom sums");
  }
  for (int d = 0; d < depth; ++d) {
    for (const GroupElement& s : frontier) {
      detail::push_unique(G, sums, s, kMemberCap, "atom sums");
    }
    if (d + 1 == depth) break;
    std::vector<GroupElement> next;
    for (const GroupElement& s : frontier) {
      for (const GroupElement& a : atoms) {
        detail::push_unique(G, next, g_add(G, s, a), kMemberCap, "atom sums");
      }
    }
    frontier = std::move(next);
  }
  return sums;
}

}  // namespace pvd
