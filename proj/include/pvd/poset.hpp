#pragma once

// Finite posets with exhaustive axiom validation, lattice operations, and a
// backtracking isomorphism test. Sizes here are desk scale (tens of nodes),
// so every check is allowed to be cubic.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pvd/errors.hpp"

namespace pvd {

struct FinitePoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(labels.size()); }
  bool le(int i, int j) const { return leq[i][j]; }
  bool lt(int i, int j) const { return i != j && leq[i][j]; }
};

inline FinitePoset make_poset(std::vector<std::string> labels,
                              const std::function<bool(int, int)>& le) {
  int n = static_cast<int>(labels.size());
  FinitePoset P;
  P.labels = std::move(labels);
  P.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) P.leq[i][j] = le(i, j);
  }
  for (int i = 0; i < n; ++i) {
    if (!P.leq[i][i]) fail(Errc::Validation, "order is not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && P.leq[i][j] && P.leq[j][i]) {
        fail(Errc::Validation, "order is not antisymmetric");
      }
      for (int k = 0; k < n; ++k) {
        if (P.leq[i][j] && P.leq[j][k] && !P.leq[i][k]) {
          fail(Errc::Validation, "order is not transitive");
        }
      }
    }
  }
  return P;
}

// Cover pairs as (lower, upper).
inline std::vector<std::pair<int, int>> cover_pairs(const FinitePoset& P) {
  std::vector<std::pair<int, int>> covers;
  int n = P.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!P.lt(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < n; ++k) {
        if (P.lt(i, k) && P.lt(k, j)) {
          direct = false;
          break;
        }
      }
      if (direct) covers.emplace_back(i, j);
    }
  }
  return covers;
}

// Longest chain length from any maximal element down to v; 0 at the top.
inline std::vector<int> depth_from_top(const FinitePoset& P) {
  int n = P.size();
  std::vector<int> depth(n, 0);
  std::vector<std::pair<int, int>> covers = cover_pairs(P);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lo, hi] : covers) {
      if (depth[lo] < depth[hi] + 1) {
        depth[lo] = depth[hi] + 1;
        changed = true;
      }
    }
  }
  return depth;
}

inline FinitePoset chain(int n, const std::function<std::string(int)>& name) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(name(i));
  return make_poset(std::move(labels), [](int i, int j) { return i <= j; });
}

inline FinitePoset antichain(int n, const std::function<std::string(int)>& name) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(name(i));
  return make_poset(std::move(labels), [](int i, int j) { return i == j; });
}

inline FinitePoset dual(const FinitePoset& P) {
  return make_poset(P.labels, [&](int i, int j) { return P.le(j, i); });
}

// Ordinal (lexicographic) product: compare by the first factor strictly,
// ties by the second.
inline FinitePoset lex_product(const FinitePoset& P, const FinitePoset& Q) {
  std::vector<std::string> labels;
  int np = P.size(), nq = Q.size();
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < nq; ++j) {
      labels.push_back("(" + P.labels[i] + "," + Q.labels[j] + ")");
    }
  }
  return make_poset(std::move(labels), [&](int x, int y) {
    int pi = x / nq, qi = x % nq;
    int pj = y / nq, qj = y % nq;
    if (pi == pj) return Q.le(qi, qj);
    return P.lt(pi, pj);
  });
}

// Ordinal sum, parts listed bottom to top: everything in an earlier part
// lies below everything in a later part.
inline FinitePoset ordinal_sum(const std::vector<FinitePoset>& parts) {
  std::vector<std::string> labels;
  std::vector<int> part_of, local;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int i = 0; i < parts[p].size(); ++i) {
      labels.push_back(parts[p].labels[i]);
      part_of.push_back(static_cast<int>(p));
      local.push_back(i);
    }
  }
  return make_poset(std::move(labels), [&](int x, int y) {
    if (part_of[x] != part_of[y]) return part_of[x] < part_of[y];
    return parts[part_of[x]].le(local[x], local[y]);
  });
}

inline std::optional<int> poset_meet(const FinitePoset& P, int i, int j) {
  std::optional<int> best;
  for (int k = 0; k < P.size(); ++k) {
    if (!P.le(k, i) || !P.le(k, j)) continue;
    if (!best || P.le(*best, k)) best = k;
  }
  if (best) {
    for (int k = 0; k < P.size(); ++k) {
      if (P.le(k, i) && P.le(k, j) && !P.le(k, *best)) return std::nullopt;
    }
  }
  return best;
}

inline std::optional<int> poset_join(const FinitePoset& P, int i, int j) {
  std::optional<int> best;
  for (int k = 0; k < P.size(); ++k) {
    if (!P.le(i, k) || !P.le(j, k)) continue;
    if (!best || P.le(k, *best)) best = k;
  }
  if (best) {
    for (int k = 0; k < P.size(); ++k) {
      if (P.le(i, k) && P.le(j, k) && !P.le(*best, k)) return std::nullopt;
    }
  }
  return best;
}

inline bool is_lattice(const FinitePoset& P) {
  for (int i = 0; i < P.size(); ++i) {
    for (int j = 0; j < P.size(); ++j) {
      if (!poset_meet(P, i, j) || !poset_join(P, i, j)) return false;
    }
  }
  return true;
}

// Distributivity of meet over join on every triple; only meaningful on a
// lattice.
inline bool is_distributive(const FinitePoset& P) {
  for (int x = 0; x < P.size(); ++x) {
    for (int y = 0; y < P.size(); ++y) {
      for (int z = 0; z < P.size(); ++z) {
        int yz = *poset_join(P, y, z);
        int xy = *poset_meet(P, x, y);
        int xz = *poset_meet(P, x, z);
        if (*poset_meet(P, x, yz) != *poset_join(P, xy, xz)) return false;
      }
    }
  }
  return true;
}

struct IsoResult {
  bool iso = false;
  std::vector<int> mapping;  // A index -> B index when iso
  std::string witness;       // invariant mismatch when not
};

namespace detail {

// Refined order invariants per node: ideal size, filter size, then two
// rounds of neighbor color multisets over the cover relation.
inline std::vector<std::string> poset_colors(const FinitePoset& P) {
  int n = P.size();
  std::vector<std::string> color(n);
  for (int v = 0; v < n; ++v) {
    int down = 0, up = 0;
    for (int k = 0; k < n; ++k) {
      if (P.le(k, v)) ++down;
      if (P.le(v, k)) ++up;
    }
    color[v] = std::to_string(down) + "/" + std::to_string(up);
  }
  std::vector<std::pair<int, int>> covers = cover_pairs(P);
  for (int round = 0; round < 2; ++round) {
    std::vector<std::string> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::string> lows, highs;
      for (const auto& [lo, hi] : covers) {
        if (hi == v) lows.push_back(color[lo]);
        if (lo == v) highs.push_back(color[hi]);
      }
      std::sort(lows.begin(), lows.end());
      std::sort(highs.begin(), highs.end());
      next[v] = color[v] + "[";
      for (const std::string& s : lows) next[v] += s + ",";
      next[v] += "|";
      for (const std::string& s : highs) next[v] += s + ",";
      next[v] += "]";
    }
    color = std::move(next);
  }
  return color;
}

inline bool extend_iso(const FinitePoset& A, const FinitePoset& B,
                       const std::vector<std::vector<int>>& candidates,
                       std::vector<int>& mapping, std::vector<bool>& used,
                       std::size_t pos) {
  if (pos == mapping.size()) return true;
  int i = static_cast<int>(pos);
  for (int j : candidates[pos]) {
    if (used[j]) continue;
    bool ok = true;
    for (int k = 0; k < i; ++k) {
      if (A.le(k, i) != B.le(mapping[k], j) || A.le(i, k) != B.le(j, mapping[k])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    mapping[pos] = j;
    used[j] = true;
    if (extend_iso(A, B, candidates, mapping, used, pos + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace detail

inline IsoResult poset_isomorphic(const FinitePoset& A, const FinitePoset& B) {
  IsoResult r;
  if (A.size() != B.size()) {
    r.witness = "sizes differ: " + std::to_string(A.size()) + " vs " +
                std::to_string(B.size());
    return r;
  }
  std::vector<std::string> ca = detail::poset_colors(A);
  std::vector<std::string> cb = detail::poset_colors(B);
  std::map<std::string, int> histo;
  for (const std::string& c : ca) ++histo[c];
  for (const std::string& c : cb) --histo[c];
  for (const auto& [c, count] : histo) {
    if (count != 0) {
      r.witness = "node invariant multisets differ at class " + c;
      return r;
    }
  }
  std::vector<std::vector<int>> candidates(A.size());
  for (int i = 0; i < A.size(); ++i) {
    for (int j = 0; j < B.size(); ++j) {
      if (ca[i] == cb[j]) candidates[i].push_back(j);
    }
  }
  std::vector<int> mapping(A.size(), -1);
  std::vector<bool> used(B.size(), false);
  if (detail::extend_iso(A, B, candidates, mapping, used, 0)) {
    r.iso = true;
    r.mapping = std::move(mapping);
    return r;
  }
  r.witness = "no order preserving bijection extends the invariant classes";
  return r;
}

}  // namespace pvd
