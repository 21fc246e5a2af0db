#pragma once

// Predicted ideal lattice of the depth-tau truncation of S, and sublattice
// closures of handpicked ideals when the full lattice is infinite. A node
// (n, W) stands for the ideal of elements with order at least n whose
// order-n coefficient lies in the K-subspace W; the full subspace at level
// n is the valuation ideal <X^n>_V, level 0 full is R itself, and the full
// node at the truncation depth is the zero ideal. The gluing rule is that a
// meet whose coefficient spaces intersect trivially falls through to the
// valuation ideal one level down: (n, W) meet (n, U) with W and U disjoint
// is (n+1, full).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pvd/poset.hpp"
#include "pvd/subspaces.hpp"

namespace pvd {

struct IdealNode {
  int level = 0;
  bool full = true;
  Subspace space;  // meaningful only when !full: nonzero proper subspace

  bool operator==(const IdealNode&) const = default;
};

inline IdealNode node_r() { return IdealNode{0, true, {}}; }
inline IdealNode node_valuation(int n) { return IdealNode{n, true, {}}; }
inline IdealNode node_proper(int n, Subspace w) {
  return IdealNode{n, false, std::move(w)};
}

inline void validate_node(const ExtensionPair& ext, const IdealNode& a) {
  if (a.level < 0) fail(Errc::Validation, "node level must be nonnegative");
  if (a.full) return;
  if (a.level == 0) fail(Errc::Validation, "level zero admits only R itself");
  if (a.space.zero() || a.space.dim() >= ext.dim) {
    fail(Errc::Validation,
         "a proper node needs a nonzero proper coefficient subspace");
  }
}

// Ideal inclusion: anything at a deeper level is contained in anything at a
// shallower one; at equal levels inclusion follows the coefficient spaces.
inline bool node_leq(const ExtensionPair& ext, const IdealNode& a,
                     const IdealNode& b) {
  if (a.level != b.level) return a.level > b.level;
  if (b.full) return true;
  if (a.full) return false;
  return sub_leq(ext, a.space, b.space);
}

inline IdealNode node_join(const ExtensionPair& ext, const IdealNode& a,
                           const IdealNode& b) {
  if (a.level != b.level) return a.level < b.level ? a : b;
  if (a.full || b.full) return node_valuation(a.level);
  Subspace sum = sub_sum(ext, a.space, b.space);
  if (sum.dim() >= ext.dim) return node_valuation(a.level);
  return node_proper(a.level, std::move(sum));
}

inline IdealNode node_meet(const ExtensionPair& ext, const IdealNode& a,
                           const IdealNode& b) {
  if (a.level != b.level) return a.level > b.level ? a : b;
  if (a.full) return b;
  if (b.full) return a;
  Subspace inner = sub_intersection(ext, a.space, b.space);
  if (inner.zero()) return node_valuation(a.level + 1);  // gluing rule
  return node_proper(a.level, std::move(inner));
}

// Label within a depth-truncated lattice; the bottom full node is the zero
// ideal there. Pass depth < 0 for fragment labels with no truncation.
inline std::string node_label(const ExtensionPair& ext, const IdealNode& a,
                              int depth) {
  if (a.level == 0 && a.full) return "R";
  if (a.full) {
    if (depth >= 0 && a.level == depth) return "<0>";
    return "<X^" + std::to_string(a.level) + ">_V";
  }
  return "(" + std::to_string(a.level) + "," + subspace_label(ext, a.space) + ")";
}

struct IdealLattice {
  ExtPtr ext;
  int depth = 0;  // < 0 for fragments with no truncation
  std::vector<IdealNode> nodes;
  FinitePoset poset;  // same index space as nodes

  int index_of(const IdealNode& n) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] == n) return static_cast<int>(i);
    }
    fail(Errc::NodeMismatch, "node does not belong to this lattice");
  }
};

namespace detail {

inline FinitePoset poset_of_nodes(const ExtensionPair& ext,
                                  std::vector<IdealNode>& nodes, int depth) {
  std::sort(nodes.begin(), nodes.end(),
            [&](const IdealNode& a, const IdealNode& b) {
              if (a.level != b.level) return a.level < b.level;
              if (a.full != b.full) return a.full;  // <X^n>_V above (n, W)
              return subspace_label(ext, a.space) < subspace_label(ext, b.space);
            });
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (const IdealNode& n : nodes) labels.push_back(node_label(ext, n, depth));
  return make_poset(std::move(labels), [&](int i, int j) {
    return node_leq(ext, nodes[i], nodes[j]);
  });
}

}  // namespace detail

// Full predicted lattice of the depth-tau truncation: R on top, one copy of
// the nonzero-subspace lattice per level 1..tau-1 with the full node acting
// as <X^n>_V, the zero ideal at the bottom. Needs K finite, otherwise each
// level is already infinite.
inline IdealLattice predicted_ideal_lattice(ExtPtr ext, int depth) {
  if (depth < 1) fail(Errc::Validation, "depth must be at least 1");
  IdealLattice L;
  L.ext = std::move(ext);
  L.depth = depth;
  L.nodes.push_back(node_r());
  if (L.ext->dim > 1) {
    std::vector<Subspace> subs = all_nonzero_subspaces(*L.ext);
    for (int n = 1; n < depth; ++n) {
      L.nodes.push_back(node_valuation(n));
      for (const Subspace& w : subs) {
        if (w.dim() < L.ext->dim) L.nodes.push_back(node_proper(n, w));
      }
    }
  } else {
    // K = F: each level carries only the valuation ideal.
    for (int n = 1; n < depth; ++n) L.nodes.push_back(node_valuation(n));
  }
  L.nodes.push_back(node_valuation(depth));
  L.poset = detail::poset_of_nodes(*L.ext, L.nodes, depth);
  return L;
}

// Meet and join of two nodes of a lattice, with the gluing rule applied.
inline std::pair<IdealNode, IdealNode> l_meet_join(const IdealLattice& L,
                                                   const IdealNode& a,
                                                   const IdealNode& b) {
  L.index_of(a);
  L.index_of(b);
  IdealNode meet = node_meet(*L.ext, a, b);
  IdealNode join = node_join(*L.ext, a, b);
  if (L.depth >= 0 && meet.level > L.depth) {
    fail(Errc::DepthExceeded, "meet fell below the truncation depth");
  }
  return {meet, join};
}

// Closure of handpicked nodes under meet and join. Works over infinite K
// because only the generated subspaces are materialized. max_depth bounds
// how far meets may fall through the gluing rule.
inline IdealLattice sublattice_generated(ExtPtr ext,
                                         std::vector<IdealNode> generators,
                                         int max_depth) {
  if (max_depth < 1) fail(Errc::Validation, "depth bound must be at least 1");
  IdealLattice L;
  L.ext = std::move(ext);
  L.depth = -1;
  for (const IdealNode& g : generators) {
    validate_node(*L.ext, g);
    if (g.level > max_depth) {
      fail(Errc::DepthExceeded, "generator sits below the depth bound");
    }
    if (std::find(L.nodes.begin(), L.nodes.end(), g) == L.nodes.end()) {
      L.nodes.push_back(g);
    }
  }
  if (L.nodes.empty()) fail(Errc::Validation, "no generators given");

  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = L.nodes.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        for (IdealNode candidate :
             {node_meet(*L.ext, L.nodes[i], L.nodes[j]),
              node_join(*L.ext, L.nodes[i], L.nodes[j])}) {
          if (candidate.level > max_depth) {
            fail(Errc::DepthExceeded,
                 "closure fell below the depth bound; raise --depth");
          }
          if (std::find(L.nodes.begin(), L.nodes.end(), candidate) ==
              L.nodes.end()) {
            if (L.nodes.size() >= kSubspaceCap) {
              fail(Errc::TooLarge, "sublattice closure exceeded the cap");
            }
            L.nodes.push_back(std::move(candidate));
            grew = true;
          }
        }
      }
    }
  }
  L.poset = detail::poset_of_nodes(*L.ext, L.nodes, -1);
  return L;
}

}  // namespace pvd
