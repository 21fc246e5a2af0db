#pragma once

// Deterministic renderings of a finite poset: Graphviz digraph text and a
// JSON adjacency form. Nodes are sorted by distance from the top and then
// by label, so repeated runs emit identical bytes.

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "pvd/poset.hpp"

namespace pvd {

namespace detail {

inline std::vector<int> render_order(const FinitePoset& p) {
  std::vector<int> depth = depth_from_top(p);
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return p.labels[a] < p.labels[b];
  });
  return order;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Covers are drawn downward, one edge per cover pair.
inline std::string poset_dot(const FinitePoset& p,
                             const std::string& name = "lattice") {
  std::vector<int> order = detail::render_order(p);
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  std::string out = "digraph " + name + " {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           detail::dot_escape(p.labels[static_cast<std::size_t>(order[i])]) +
           "\"];\n";
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [lo, hi] : cover_pairs(p)) {
    edges.push_back({rank[static_cast<std::size_t>(hi)],
                     rank[static_cast<std::size_t>(lo)]});
  }
  std::sort(edges.begin(), edges.end());
  for (auto [from, to] : edges) {
    out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
  }
  out += "}\n";
  return out;
}

inline nlohmann::json poset_json(const FinitePoset& p) {
  std::vector<int> order = detail::render_order(p);
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (int i : order) j["nodes"].push_back(p.labels[static_cast<std::size_t>(i)]);
  std::vector<std::pair<int, int>> edges;
  for (auto [lo, hi] : cover_pairs(p)) {
    edges.push_back({rank[static_cast<std::size_t>(hi)],
                     rank[static_cast<std::size_t>(lo)]});
  }
  std::sort(edges.begin(), edges.end());
  j["covers"] = nlohmann::json::array();
  for (auto [from, to] : edges) {
    j["covers"].push_back(nlohmann::json::array({from, to}));
  }
  return j;
}

}  // namespace pvd
