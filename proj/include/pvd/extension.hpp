#pragma once

// A field extension pair K <= F with an explicit embedding and a K-basis of
// F. Supported shapes: equal fields, finite inside finite of the same
// characteristic, q inside q, and q inside a simple number field. The
// embedding sends K's presentation root to the root of K's presentation
// polynomial in F with the smallest element index; a basis is grown greedily
// in index order, so both are deterministic.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "pvd/fields.hpp"

namespace pvd {

struct ExtensionPair {
  FieldDescriptor K;
  FieldDescriptor F;
  FieldElement theta;               // image of K's presentation root in F
  std::vector<FieldElement> basis;  // K-basis of F, basis[0] = 1
  int dim = 1;                      // [F : K]

  bool trivial() const { return dim == 1; }
};

using ExtPtr = std::shared_ptr<const ExtensionPair>;

// Applies the embedding to a K-element: evaluates its coefficient vector at
// theta inside F.
inline FieldElement embed(const ExtensionPair& ext, const FieldElement& k) {
  return f_eval_poly(ext.F, k.c, ext.theta);
}

namespace detail {

// Reduced row echelon form over F_p on raw coefficient vectors; rows are
// mutated in place, zero rows dropped.
inline void fp_rref(const Int& p, std::vector<std::vector<Rat>>& rows) {
  std::size_t rank = 0;
  std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rat inv = c_inv(p, rows[rank][col]);
    for (Rat& v : rows[rank]) v = c_mul(p, v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat factor = rows[r][col];
      for (std::size_t c = 0; c < width; ++c) {
        rows[r][c] = c_sub(p, rows[r][c], c_mul(p, factor, rows[rank][c]));
      }
    }
    ++rank;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const std::vector<Rat>& r) {
                              for (const Rat& v : r) {
                                if (v != 0) return false;
                              }
                              return true;
                            }),
             rows.end());
}

inline bool fp_in_span(const Int& p, const std::vector<std::vector<Rat>>& rref_rows,
                       std::vector<Rat> v) {
  for (const std::vector<Rat>& row : rref_rows) {
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) continue;
    if (v[lead] != 0) {
      Rat factor = v[lead];
      for (std::size_t c = 0; c < v.size(); ++c) {
        v[c] = c_sub(p, v[c], c_mul(p, factor, row[c]));
      }
    }
  }
  for (const Rat& x : v) {
    if (x != 0) return false;
  }
  return true;
}

// Solves A * x = b over F_p for square A given as columns; returns the
// solution vector. A is invertible in every use here.
inline std::vector<Rat> fp_solve(const Int& p,
                                 const std::vector<std::vector<Rat>>& columns,
                                 const std::vector<Rat>& b) {
  std::size_t n = b.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, Rat(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) m[r][c] = columns[c][r];
    m[r][n] = b[r];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[rank], m[pivot]);
    Rat inv = c_inv(p, m[rank][col]);
    for (Rat& v : m[rank]) v = c_mul(p, v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat factor = m[r][col];
      for (std::size_t c = 0; c <= n; ++c) {
        m[r][c] = c_sub(p, m[r][c], c_mul(p, factor, m[rank][c]));
      }
    }
    ++rank;
  }
  if (rank != n) fail(Errc::Validation, "embedding system is singular");
  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n];
  return x;
}

}  // namespace detail

inline ExtensionPair make_extension(const FieldDescriptor& K,
                                    const FieldDescriptor& F) {
  ExtensionPair ext;
  ext.K = K;
  ext.F = F;

  if (K == F) {
    ext.theta = f_gen(F);
    ext.basis = {f_one(F)};
    ext.dim = 1;
    return ext;
  }

  if (K.finite() && F.finite()) {
    if (K.p != F.p) {
      fail(Errc::Validation, "characteristics differ: " + field_str(K) + " vs " +
                                 field_str(F));
    }
    int m = K.degree(), n = F.degree();
    if (n % m != 0) {
      fail(Errc::Validation,
           field_str(K) + " does not embed into " + field_str(F) +
               ": degree " + std::to_string(m) + " does not divide " +
               std::to_string(n));
    }
    ext.dim = n / m;

    if (K.kind == FieldKind::PrimeField) {
      ext.theta = f_one(F);
    } else {
      // Smallest-index root of K's presentation polynomial in F.
      bool found = false;
      for (Int idx = 0; idx < F.order(); ++idx) {
        FieldElement cand = f_nth(F, idx);
        if (f_is_zero(f_eval_poly(F, K.modulus, cand))) {
          ext.theta = cand;
          found = true;
          break;
        }
      }
      if (!found) fail(Errc::Validation, "presentation root not found in " + field_str(F));
    }

    // Greedy K-basis in index order. The K-span of chosen elements equals
    // the F_p-span of { theta^j * b : j < deg K, b chosen }.
    std::vector<std::vector<Rat>> span;
    for (Int idx = 0; idx < F.order() && static_cast<int>(ext.basis.size()) < ext.dim;
         ++idx) {
      FieldElement cand = f_nth(F, idx);
      if (detail::fp_in_span(F.p, span, cand.c)) continue;
      ext.basis.push_back(cand);
      FieldElement power = f_one(F);
      for (int j = 0; j < m; ++j) {
        span.push_back(f_mul(F, power, cand).c);
        power = f_mul(F, power, ext.theta);
      }
      detail::fp_rref(F.p, span);
    }
    if (static_cast<int>(ext.basis.size()) != ext.dim) {
      fail(Errc::Validation, "basis construction fell short");
    }
    return ext;
  }

  if (K.kind == FieldKind::Rationals && F.kind == FieldKind::NumberField) {
    ext.theta = f_one(F);
    ext.dim = F.degree();
    FieldElement power = f_one(F);
    for (int i = 0; i < ext.dim; ++i) {
      ext.basis.push_back(power);
      power = f_mul(F, power, f_gen(F));
    }
    return ext;
  }

  fail(Errc::Validation, "unsupported extension " + field_str(F) + " over " +
                             field_str(K));
}

inline ExtPtr make_ext(const FieldDescriptor& K, const FieldDescriptor& F) {
  return std::make_shared<const ExtensionPair>(make_extension(K, F));
}

// Coordinates of x with respect to ext.basis, as K-elements.
inline std::vector<FieldElement> coordinates(const ExtensionPair& ext,
                                             const FieldElement& x) {
  if (ext.dim == 1 && ext.K == ext.F) return {x};

  if (ext.K.kind == FieldKind::Rationals) {
    // Power basis: coefficients are the coordinates.
    std::vector<FieldElement> coords;
    coords.reserve(x.c.size());
    for (const Rat& v : x.c) coords.push_back(FieldElement{{v}});
    return coords;
  }

  // Finite case: solve over F_p with columns theta^j * b_i.
  int m = ext.K.degree();
  std::vector<std::vector<Rat>> columns;
  for (const FieldElement& b : ext.basis) {
    FieldElement power = f_one(ext.F);
    for (int j = 0; j < m; ++j) {
      columns.push_back(f_mul(ext.F, power, b).c);
      power = f_mul(ext.F, power, ext.theta);
    }
  }
  std::vector<Rat> d = detail::fp_solve(ext.F.p, columns, x.c);
  std::vector<FieldElement> coords;
  for (int i = 0; i < ext.dim; ++i) {
    FieldElement k = f_zero(ext.K);
    for (int j = 0; j < m; ++j) k.c[j] = d[static_cast<std::size_t>(i) * m + j];
    coords.push_back(std::move(k));
  }
  return coords;
}

inline FieldElement from_coordinates(const ExtensionPair& ext,
                                     const std::vector<FieldElement>& coords) {
  if (coords.size() != static_cast<std::size_t>(ext.dim)) {
    fail(Errc::Validation, "coordinate vector has wrong length");
  }
  FieldElement acc = f_zero(ext.F);
  for (int i = 0; i < ext.dim; ++i) {
    acc = f_add(ext.F, acc, f_mul(ext.F, embed(ext, coords[i]), ext.basis[i]));
  }
  return acc;
}

// Membership of x in the image of K.
inline bool ext_contains(const ExtensionPair& ext, const FieldElement& x) {
  std::vector<FieldElement> coords = coordinates(ext, x);
  for (std::size_t i = 1; i < coords.size(); ++i) {
    if (!f_is_zero(coords[i])) return false;
  }
  return true;
}

// Equality of K-sharp cosets in F-sharp: both nonzero and x/y in K. There is
// no canonical coset representative in general; equality always goes through
// the ratio.
inline bool same_coset(const ExtensionPair& ext, const FieldElement& x,
                       const FieldElement& y) {
  if (f_is_zero(x) || f_is_zero(y)) {
    fail(Errc::Validation, "coset of zero");
  }
  return ext_contains(ext, f_div(ext.F, x, y));
}

// Smallest-index representatives of the K-sharp cosets of F-sharp; finite F
// only. The count is (|F| - 1) / (|K| - 1).
inline std::vector<FieldElement> coset_reps(const ExtensionPair& ext) {
  if (!ext.F.finite()) fail(Errc::Validation, "coset enumeration needs a finite field");
  std::vector<FieldElement> reps;
  for (Int idx = 1; idx < ext.F.order(); ++idx) {
    FieldElement x = f_nth(ext.F, idx);
    bool fresh = true;
    for (const FieldElement& r : reps) {
      if (same_coset(ext, x, r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(std::move(x));
  }
  return reps;
}

inline std::string ext_str(const ExtensionPair& ext) {
  return field_str(ext.F) + "/" + field_str(ext.K);
}

}  // namespace pvd
