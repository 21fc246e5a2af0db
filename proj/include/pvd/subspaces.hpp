#pragma once

// K-subspaces of F for an extension pair, represented by reduced row
// echelon coordinate matrices over K. The echelon form is canonical, so
// structural equality decides subspace equality.

#include <algorithm>
#include <string>
#include <vector>

#include "pvd/extension.hpp"

namespace pvd {

inline constexpr std::size_t kSubspaceCap = 4096;

struct Subspace {
  // Rows are coordinate vectors over K with respect to ext.basis, in
  // reduced row echelon form.
  std::vector<std::vector<FieldElement>> rows;

  int dim() const { return static_cast<int>(rows.size()); }
  bool zero() const { return rows.empty(); }
  bool operator==(const Subspace&) const = default;
};

namespace detail {

inline void k_rref(const FieldDescriptor& K,
                   std::vector<std::vector<FieldElement>>& rows) {
  std::size_t rank = 0;
  std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && f_is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    FieldElement inv = f_inv(K, rows[rank][col]);
    for (FieldElement& v : rows[rank]) v = f_mul(K, v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || f_is_zero(rows[r][col])) continue;
      FieldElement factor = rows[r][col];
      for (std::size_t c = 0; c < width; ++c) {
        rows[r][c] = f_sub(K, rows[r][c], f_mul(K, factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  std::erase_if(rows, [](const std::vector<FieldElement>& r) {
    return std::all_of(r.begin(), r.end(),
                       [](const FieldElement& v) { return f_is_zero(v); });
  });
}

}  // namespace detail

// Span of the given F-elements as a K-subspace.
inline Subspace make_subspace(const ExtensionPair& ext,
                              const std::vector<FieldElement>& gens) {
  Subspace s;
  for (const FieldElement& g : gens) s.rows.push_back(coordinates(ext, g));
  detail::k_rref(ext.K, s.rows);
  return s;
}

inline Subspace span_coords(const ExtensionPair& ext,
                            std::vector<std::vector<FieldElement>> rows) {
  Subspace s;
  s.rows = std::move(rows);
  detail::k_rref(ext.K, s.rows);
  return s;
}

inline bool sub_contains(const ExtensionPair& ext, const Subspace& s,
                         const std::vector<FieldElement>& coords) {
  std::vector<FieldElement> v = coords;
  for (const std::vector<FieldElement>& row : s.rows) {
    std::size_t lead = 0;
    while (lead < row.size() && f_is_zero(row[lead])) ++lead;
    if (lead == row.size()) continue;
    if (!f_is_zero(v[lead])) {
      FieldElement factor = v[lead];
      for (std::size_t c = 0; c < v.size(); ++c) {
        v[c] = f_sub(ext.K, v[c], f_mul(ext.K, factor, row[c]));
      }
    }
  }
  return std::all_of(v.begin(), v.end(),
                     [](const FieldElement& x) { return f_is_zero(x); });
}

inline bool sub_contains_element(const ExtensionPair& ext, const Subspace& s,
                                 const FieldElement& x) {
  return sub_contains(ext, s, coordinates(ext, x));
}

inline bool sub_leq(const ExtensionPair& ext, const Subspace& a,
                    const Subspace& b) {
  return std::all_of(a.rows.begin(), a.rows.end(),
                     [&](const std::vector<FieldElement>& row) {
                       return sub_contains(ext, b, row);
                     });
}

inline Subspace sub_sum(const ExtensionPair& ext, const Subspace& a,
                        const Subspace& b) {
  std::vector<std::vector<FieldElement>> rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return span_coords(ext, std::move(rows));
}

// Zassenhaus: row reduce [a | a] stacked over [b | 0]; rows whose left half
// vanished have right halves spanning the intersection.
inline Subspace sub_intersection(const ExtensionPair& ext, const Subspace& a,
                                 const Subspace& b) {
  std::size_t n = static_cast<std::size_t>(ext.dim);
  std::vector<std::vector<FieldElement>> wide;
  for (const std::vector<FieldElement>& row : a.rows) {
    std::vector<FieldElement> w = row;
    w.insert(w.end(), row.begin(), row.end());
    wide.push_back(std::move(w));
  }
  for (const std::vector<FieldElement>& row : b.rows) {
    std::vector<FieldElement> w = row;
    w.insert(w.end(), n, f_zero(ext.K));
    wide.push_back(std::move(w));
  }
  detail::k_rref(ext.K, wide);
  std::vector<std::vector<FieldElement>> inner;
  for (const std::vector<FieldElement>& w : wide) {
    bool left_zero = std::all_of(w.begin(), w.begin() + static_cast<long>(n),
                                 [](const FieldElement& x) { return f_is_zero(x); });
    if (left_zero) {
      inner.emplace_back(w.begin() + static_cast<long>(n), w.end());
    }
  }
  return span_coords(ext, std::move(inner));
}

inline Subspace full_subspace(const ExtensionPair& ext) {
  std::vector<std::vector<FieldElement>> rows;
  for (int i = 0; i < ext.dim; ++i) {
    std::vector<FieldElement> row(ext.dim, f_zero(ext.K));
    row[i] = f_one(ext.K);
    rows.push_back(std::move(row));
  }
  return span_coords(ext, std::move(rows));
}

// Label from the echelon basis written back as F-elements: "a", "<1,r>",
// "F" for the whole space, "0" for the zero space.
inline std::string subspace_label(const ExtensionPair& ext, const Subspace& s) {
  if (s.zero()) return "0";
  if (s.dim() == ext.dim) return "F";
  std::vector<std::string> names;
  for (const std::vector<FieldElement>& row : s.rows) {
    names.push_back(f_str(ext.F, from_coordinates(ext, row)));
  }
  if (names.size() == 1) return names[0];
  std::string out = "<";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + ">";
}

// Every nonzero K-subspace of F; requires K finite. Grown by saturating
// one dimensional spans with one new vector at a time.
inline std::vector<Subspace> all_nonzero_subspaces(const ExtensionPair& ext) {
  if (!ext.K.finite()) {
    fail(Errc::InfiniteLattice,
         "subspace lattice of " + ext_str(ext) + " is infinite");
  }
  // All coordinate vectors of K^dim.
  Int total = 1;
  for (int i = 0; i < ext.dim; ++i) total *= ext.K.order();
  std::vector<std::vector<FieldElement>> vectors;
  for (Int idx = 1; idx < total; ++idx) {
    Int rest = idx;
    std::vector<FieldElement> v;
    for (int i = 0; i < ext.dim; ++i) {
      v.push_back(f_nth(ext.K, rest % ext.K.order()));
      rest /= ext.K.order();
    }
    vectors.push_back(std::move(v));
  }

  std::vector<Subspace> found;
  std::vector<Subspace> frontier;
  for (const std::vector<FieldElement>& v : vectors) {
    Subspace s = span_coords(ext, {v});
    if (std::find(found.begin(), found.end(), s) == found.end()) {
      found.push_back(s);
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const Subspace& s : frontier) {
      for (const std::vector<FieldElement>& v : vectors) {
        if (sub_contains(ext, s, v)) continue;
        std::vector<std::vector<FieldElement>> rows = s.rows;
        rows.push_back(v);
        Subspace grown = span_coords(ext, std::move(rows));
        if (std::find(found.begin(), found.end(), grown) == found.end()) {
          if (found.size() >= kSubspaceCap) {
            fail(Errc::TooLarge, "subspace enumeration exceeded the cap");
          }
          found.push_back(grown);
          next.push_back(grown);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [&](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return subspace_label(ext, a) < subspace_label(ext, b);
  });
  return found;
}

}  // namespace pvd
