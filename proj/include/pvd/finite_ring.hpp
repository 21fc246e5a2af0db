#pragma once

// Brute-force model of the depth-tau truncation of S over a finite
// extension: elements are coefficient tuples (a_0, ..., a_{tau-1}) with
// a_0 in K and the rest in F, multiplication is truncated convolution.
// Ideals are enumerated exhaustively by two independent strategies so the
// predicted lattice can be checked against something that knows nothing
// about the prediction.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pvd/extension.hpp"
#include "pvd/poset.hpp"
#include "pvd/subspaces.hpp"

namespace pvd {

inline constexpr std::size_t kRingCap = 4096;

struct FiniteRing {
  ExtPtr ext;
  int tau = 0;
  std::vector<FieldElement> k_embedded;  // K enumerated and embedded into F
  std::vector<FieldElement> f_elems;     // F in index order
  std::size_t size = 0;

  // flat size-by-size operation tables, filled for small rings so that the
  // ideal enumerations run on plain integers; empty means compute on demand
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;

  // element = index into the tuple space; tuples decoded on demand
};

using RingElement = std::vector<FieldElement>;  // length tau, entry 0 in K

inline RingElement ring_decode(const FiniteRing& ring, std::size_t idx) {
  RingElement out;
  out.reserve(ring.tau);
  std::size_t k = ring.k_embedded.size();
  std::size_t f = ring.f_elems.size();
  out.push_back(ring.k_embedded[idx % k]);
  idx /= k;
  for (int i = 1; i < ring.tau; ++i) {
    out.push_back(ring.f_elems[idx % f]);
    idx /= f;
  }
  return out;
}

inline std::size_t ring_encode(const FiniteRing& ring, const RingElement& e) {
  std::size_t f = ring.f_elems.size();
  std::size_t head = 0;
  while (head < ring.k_embedded.size() && !(ring.k_embedded[head] == e[0])) {
    ++head;
  }
  if (head == ring.k_embedded.size()) {
    fail(Errc::NotInRing, "constant coefficient is not in K");
  }
  std::size_t idx = 0;
  for (int i = ring.tau - 1; i >= 1; --i) {
    idx = idx * f + static_cast<std::size_t>(f_index(ring.ext->F, e[i]));
  }
  return idx * ring.k_embedded.size() + head;
}

namespace detail {

inline std::size_t ring_add_raw(const FiniteRing& ring, std::size_t a,
                                std::size_t b) {
  RingElement x = ring_decode(ring, a);
  RingElement y = ring_decode(ring, b);
  for (int i = 0; i < ring.tau; ++i) x[i] = f_add(ring.ext->F, x[i], y[i]);
  return ring_encode(ring, x);
}

inline std::size_t ring_mul_raw(const FiniteRing& ring, std::size_t a,
                                std::size_t b) {
  RingElement x = ring_decode(ring, a);
  RingElement y = ring_decode(ring, b);
  RingElement z(ring.tau, f_zero(ring.ext->F));
  for (int i = 0; i < ring.tau; ++i) {
    if (f_is_zero(x[i])) continue;
    for (int j = 0; i + j < ring.tau; ++j) {
      z[i + j] = f_add(ring.ext->F, z[i + j], f_mul(ring.ext->F, x[i], y[j]));
    }
  }
  return ring_encode(ring, z);
}

}  // namespace detail

inline FiniteRing make_finite_ring(ExtPtr ext, int tau,
                                   std::size_t cap = kRingCap) {
  if (tau < 1) fail(Errc::Validation, "depth must be at least 1");
  if (!ext->K.finite()) {
    fail(Errc::InfiniteLattice, "quotient ring is infinite over infinite K");
  }
  FiniteRing ring;
  ring.ext = std::move(ext);
  ring.tau = tau;
  Int korder = ring.ext->K.order();
  Int forder = ring.ext->F.order();
  Int total = korder;
  for (int i = 1; i < tau; ++i) total *= forder;
  if (total > Int(cap)) {
    fail(Errc::TooLarge, "quotient ring has more than " + std::to_string(cap) +
                             " elements");
  }
  ring.size = static_cast<std::size_t>(total);
  for (Int i = 0; i < korder; ++i) {
    ring.k_embedded.push_back(embed(*ring.ext, f_nth(ring.ext->K, i)));
  }
  for (Int i = 0; i < forder; ++i) {
    ring.f_elems.push_back(f_nth(ring.ext->F, i));
  }
  if (ring.size <= 512) {
    ring.add_table.resize(ring.size * ring.size);
    ring.mul_table.resize(ring.size * ring.size);
    for (std::size_t a = 0; a < ring.size; ++a) {
      for (std::size_t b = a; b < ring.size; ++b) {
        std::uint32_t s =
            static_cast<std::uint32_t>(detail::ring_add_raw(ring, a, b));
        std::uint32_t p =
            static_cast<std::uint32_t>(detail::ring_mul_raw(ring, a, b));
        ring.add_table[a * ring.size + b] = s;
        ring.add_table[b * ring.size + a] = s;
        ring.mul_table[a * ring.size + b] = p;
        ring.mul_table[b * ring.size + a] = p;
      }
    }
  }
  return ring;
}

inline std::size_t ring_add(const FiniteRing& ring, std::size_t a,
                            std::size_t b) {
  if (!ring.add_table.empty()) return ring.add_table[a * ring.size + b];
  return detail::ring_add_raw(ring, a, b);
}

inline std::size_t ring_mul(const FiniteRing& ring, std::size_t a,
                            std::size_t b) {
  if (!ring.mul_table.empty()) return ring.mul_table[a * ring.size + b];
  return detail::ring_mul_raw(ring, a, b);
}

inline std::size_t ring_zero(const FiniteRing&) { return 0; }

inline std::size_t ring_one(const FiniteRing& ring) {
  RingElement e(ring.tau, f_zero(ring.ext->F));
  e[0] = f_one(ring.ext->F);
  return ring_encode(ring, e);
}

inline int ring_order(const FiniteRing& ring, std::size_t a) {
  RingElement x = ring_decode(ring, a);
  for (int i = 0; i < ring.tau; ++i) {
    if (!f_is_zero(x[i])) return i;
  }
  return ring.tau;  // zero element
}

inline bool ring_is_unit(const FiniteRing& ring, std::size_t a) {
  for (std::size_t b = 0; b < ring.size; ++b) {
    if (ring_mul(ring, a, b) == ring_one(ring)) return true;
  }
  return false;
}

// An ideal is a membership bitmap over the element indices.
using IdealSet = std::vector<bool>;

inline std::size_t ideal_count(const IdealSet& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
}

// Smallest ideal containing the generators: close under addition and under
// multiplication by every ring element.
inline IdealSet ideal_closure(const FiniteRing& ring,
                              const std::vector<std::size_t>& gens) {
  IdealSet in(ring.size, false);
  std::vector<std::size_t> members{ring_zero(ring)};
  in[ring_zero(ring)] = true;
  std::vector<std::size_t> frontier;
  for (std::size_t g : gens) {
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    auto absorb = [&](std::size_t v) {
      if (!in[v]) {
        in[v] = true;
        members.push_back(v);
        next.push_back(v);
      }
    };
    for (std::size_t x : frontier) {
      for (std::size_t r = 0; r < ring.size; ++r) absorb(ring_mul(ring, x, r));
      for (std::size_t m : members) absorb(ring_add(ring, x, m));
    }
    frontier = std::move(next);
  }
  return in;
}

inline bool is_ideal(const FiniteRing& ring, const IdealSet& s) {
  if (!s[ring_zero(ring)]) return false;
  for (std::size_t a = 0; a < ring.size; ++a) {
    if (!s[a]) continue;
    for (std::size_t b = 0; b < ring.size; ++b) {
      if (s[b] && !s[ring_add(ring, a, b)]) return false;
      if (!s[ring_mul(ring, a, b)]) return false;
    }
  }
  return true;
}

// Strategy one: principal ideals, then close the family under pairwise sums.
inline std::vector<IdealSet> enumerate_ideals_by_sums(const FiniteRing& ring) {
  std::set<IdealSet> family;
  std::vector<IdealSet> principals;
  for (std::size_t a = 0; a < ring.size; ++a) {
    IdealSet p = ideal_closure(ring, {a});
    if (family.insert(p).second) principals.push_back(p);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IdealSet> snapshot(family.begin(), family.end());
    for (const IdealSet& a : snapshot) {
      for (const IdealSet& p : principals) {
        IdealSet u = a;
        std::vector<std::size_t> extra;
        for (std::size_t i = 0; i < ring.size; ++i) {
          if (p[i] && !u[i]) extra.push_back(i);
        }
        if (extra.empty()) continue;
        for (std::size_t i : extra) u[i] = true;
        // sum of two ideals: close the union under addition only
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < ring.size; ++i) {
          if (u[i]) members.push_back(i);
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::size_t j = 0; j < members.size(); ++j) {
            std::size_t v = ring_add(ring, members[i], members[j]);
            if (!u[v]) {
              u[v] = true;
              members.push_back(v);
            }
          }
        }
        if (family.insert(u).second) grew = true;
      }
    }
  }
  return {family.begin(), family.end()};
}

// Strategy two: grow ideals one generator at a time from the zero ideal.
inline std::vector<IdealSet> enumerate_ideals_by_growth(const FiniteRing& ring) {
  std::set<IdealSet> seen;
  std::vector<IdealSet> queue{ideal_closure(ring, {})};
  seen.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    IdealSet current = queue[head];
    for (std::size_t e = 0; e < ring.size; ++e) {
      if (current[e]) continue;
      std::vector<std::size_t> gens{e};
      for (std::size_t i = 0; i < ring.size; ++i) {
        if (current[i]) gens.push_back(i);
      }
      IdealSet bigger = ideal_closure(ring, gens);
      if (seen.insert(bigger).second) queue.push_back(bigger);
    }
  }
  return {seen.begin(), seen.end()};
}

// Structural signature of an ideal, computed from raw members only: the
// minimal order n of a nonzero member together with the K-span of the
// order-n coefficients. The span determines the label.
inline std::string ideal_label(const FiniteRing& ring, const IdealSet& s) {
  std::size_t n = ideal_count(s);
  if (n == 1) return "<0>";
  if (n == ring.size) return "R";
  int lvl = ring.tau;
  for (std::size_t a = 0; a < ring.size; ++a) {
    if (s[a] && a != ring_zero(ring)) lvl = std::min(lvl, ring_order(ring, a));
  }
  std::vector<FieldElement> coeffs;
  for (std::size_t a = 0; a < ring.size; ++a) {
    if (!s[a] || a == ring_zero(ring)) continue;
    RingElement x = ring_decode(ring, a);
    if (!f_is_zero(x[lvl])) coeffs.push_back(x[lvl]);
  }
  Subspace w = make_subspace(*ring.ext, coeffs);
  if (w.dim() >= ring.ext->dim) return "<X^" + std::to_string(lvl) + ">_V";
  return "(" + std::to_string(lvl) + "," + subspace_label(*ring.ext, w) + ")";
}

struct BruteLattice {
  std::vector<IdealSet> ideals;  // same index space as poset
  FinitePoset poset;
};

// Poset of all ideals under inclusion, with structural labels. Labels are
// required to be pairwise distinct; a collision would mean the signature is
// not fine enough and the run must not pretend otherwise.
inline BruteLattice ideal_poset(const FiniteRing& ring,
                                std::vector<IdealSet> ideals) {
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (const IdealSet& s : ideals) labels.push_back(ideal_label(ring, s));
  std::vector<std::size_t> order(ideals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return labels[a] < labels[b];
  });
  std::vector<IdealSet> sorted_ideals;
  std::vector<std::string> sorted_labels;
  for (std::size_t i : order) {
    sorted_ideals.push_back(std::move(ideals[i]));
    sorted_labels.push_back(std::move(labels[i]));
  }
  for (std::size_t i = 1; i < sorted_labels.size(); ++i) {
    if (sorted_labels[i] == sorted_labels[i - 1]) {
      fail(Errc::Validation,
           "two distinct ideals share the signature " + sorted_labels[i]);
    }
  }
  BruteLattice out;
  out.poset =
      make_poset(std::move(sorted_labels), [&](int i, int j) {
        const IdealSet& a = sorted_ideals[static_cast<std::size_t>(i)];
        const IdealSet& b = sorted_ideals[static_cast<std::size_t>(j)];
        for (std::size_t v = 0; v < a.size(); ++v) {
          if (a[v] && !b[v]) return false;
        }
        return true;
      });
  out.ideals = std::move(sorted_ideals);
  return out;
}

inline bool is_prime_ideal(const FiniteRing& ring, const IdealSet& s) {
  if (ideal_count(s) == ring.size) return false;
  for (std::size_t a = 0; a < ring.size; ++a) {
    if (s[a]) continue;
    for (std::size_t b = 0; b < ring.size; ++b) {
      if (!s[b] && s[ring_mul(ring, a, b)]) return false;
    }
  }
  return true;
}

// The nonunits of the truncation form its unique maximal ideal; returning
// them as a set lets tests check that claim against the enumeration.
inline IdealSet nonunit_set(const FiniteRing& ring) {
  IdealSet out(ring.size, false);
  for (std::size_t a = 0; a < ring.size; ++a) {
    if (!ring_is_unit(ring, a)) out[a] = true;
  }
  return out;
}

}  // namespace pvd
