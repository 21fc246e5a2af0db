#pragma once

// Truncated generalized power series with coefficients in F and exponents in
// the positive cone of a linearly ordered group. A value represents a germ
// whose coefficients are known exactly on [0, tau); every operation
// propagates tau honestly instead of padding with zeros, and inversion
// reports PrecisionLoss when the geometric series cannot reach the requested
// precision within the term budget.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pvd/groups.hpp"
#include "pvd/rng.hpp"

namespace pvd {

inline constexpr int kDefaultTermBudget = 256;
inline constexpr std::size_t kSeriesTermCap = 100000;

struct Series {
  ExtPtr ext;
  GroupDescriptor group;
  // Ascending exponents, nonzero coefficients, all in [0, tau).
  std::vector<std::pair<GroupElement, FieldElement>> terms;
  GroupElement tau;
  int budget = kDefaultTermBudget;
};

namespace detail {

inline void check_compatible(const Series& f, const Series& g) {
  if (!(f.group == g.group) || !(f.ext->K == g.ext->K) || !(f.ext->F == g.ext->F)) {
    fail(Errc::GroupMismatch, "operands live over different rings");
  }
}

}  // namespace detail

// Normalizes a raw term list into a valid series: validates exponents,
// merges duplicates, drops zeros and terms at or beyond tau, sorts.
inline Series make_series(ExtPtr ext, GroupDescriptor group,
                          std::vector<std::pair<GroupElement, FieldElement>> terms,
                          GroupElement tau, int budget = kDefaultTermBudget) {
  if (!ext) fail(Errc::Validation, "series needs an extension pair");
  if (!linearly_ordered(group)) {
    fail(Errc::Validation, "exponent group must be linearly ordered");
  }
  validate_payload(group, tau);
  if (!is_strictly_positive(group, tau)) {
    fail(Errc::Validation, "precision must be strictly positive");
  }
  if (budget < 1) fail(Errc::Validation, "term budget must be positive");

  Series s;
  s.ext = std::move(ext);
  s.group = std::move(group);
  s.tau = std::move(tau);
  s.budget = budget;

  for (auto& [e, c] : terms) {
    validate_payload(s.group, e);
    if (!is_positive(s.group, e)) {
      fail(Errc::NegativeExponent, "exponent " + g_str(s.group, e) +
                                       " is outside the positive cone");
    }
    if (static_cast<int>(c.c.size()) != s.ext->F.degree()) {
      fail(Errc::Validation, "coefficient has wrong width");
    }
    if (f_is_zero(c)) continue;
    if (g_compare(s.group, e, s.tau) != Cmp::LT) continue;
    bool merged = false;
    for (auto& [e2, c2] : s.terms) {
      if (g_eq(s.group, e, e2)) {
        c2 = f_add(s.ext->F, c2, c);
        merged = true;
        break;
      }
    }
    if (!merged) s.terms.emplace_back(std::move(e), std::move(c));
  }
  std::erase_if(s.terms, [&](const auto& t) { return f_is_zero(t.second); });
  std::sort(s.terms.begin(), s.terms.end(), [&](const auto& a, const auto& b) {
    return g_compare(s.group, a.first, b.first) == Cmp::LT;
  });
  return s;
}

inline Series s_zero(ExtPtr ext, GroupDescriptor group, GroupElement tau,
                     int budget = kDefaultTermBudget) {
  return make_series(std::move(ext), std::move(group), {}, std::move(tau), budget);
}

inline Series s_const(ExtPtr ext, GroupDescriptor group, FieldElement c,
                      GroupElement tau, int budget = kDefaultTermBudget) {
  GroupElement zero = g_zero(group);
  return make_series(std::move(ext), std::move(group), {{zero, std::move(c)}},
                     std::move(tau), budget);
}

// Single term 1 * t^m.
inline Series s_delta(ExtPtr ext, GroupDescriptor group, GroupElement m,
                      GroupElement tau, int budget = kDefaultTermBudget) {
  FieldElement one = f_one(ext->F);
  return make_series(std::move(ext), std::move(group), {{std::move(m), one}},
                     std::move(tau), budget);
}

inline bool s_is_zero(const Series& f) { return f.terms.empty(); }

inline const GroupElement& s_min(const Series& f) {
  if (f.terms.empty()) fail(Errc::ZeroSeries, "order of the zero series");
  return f.terms.front().first;
}

inline const FieldElement& s_lead(const Series& f) {
  if (f.terms.empty()) fail(Errc::ZeroSeries, "leading coefficient of the zero series");
  return f.terms.front().second;
}

// Order if nonzero, else the precision bound; the correct lower bound for
// the order of whatever germ the value stands for.
inline const GroupElement& s_min_or_tau(const Series& f) {
  return f.terms.empty() ? f.tau : f.terms.front().first;
}

inline bool s_coeff_known(const Series& f, const GroupElement& e) {
  return g_compare(f.group, e, f.tau) == Cmp::LT;
}

inline FieldElement s_coeff_at(const Series& f, const GroupElement& e) {
  if (!s_coeff_known(f, e)) {
    fail(Errc::PrecisionLoss, "coefficient at " + g_str(f.group, e) +
                                  " is beyond the precision bound");
  }
  for (const auto& [e2, c] : f.terms) {
    if (g_eq(f.group, e, e2)) return c;
  }
  return f_zero(f.ext->F);
}

inline Series s_add(const Series& f, const Series& g) {
  detail::check_compatible(f, g);
  GroupElement tau = g_compare(f.group, f.tau, g.tau) == Cmp::LT ? f.tau : g.tau;
  std::vector<std::pair<GroupElement, FieldElement>> terms = f.terms;
  terms.insert(terms.end(), g.terms.begin(), g.terms.end());
  return make_series(f.ext, f.group, std::move(terms), std::move(tau),
                     std::min(f.budget, g.budget));
}

inline Series s_scale(const Series& f, const FieldElement& c) {
  std::vector<std::pair<GroupElement, FieldElement>> terms;
  terms.reserve(f.terms.size());
  for (const auto& [e, x] : f.terms) terms.emplace_back(e, f_mul(f.ext->F, x, c));
  return make_series(f.ext, f.group, std::move(terms), f.tau, f.budget);
}

inline Series s_neg(const Series& f) {
  return s_scale(f, f_neg(f.ext->F, f_one(f.ext->F)));
}

inline Series s_sub(const Series& f, const Series& g) {
  return s_add(f, s_neg(g));
}

// Shifts every exponent and the precision bound by m. The result must stay
// inside the positive cone.
inline Series s_shift(const Series& f, const GroupElement& m) {
  std::vector<std::pair<GroupElement, FieldElement>> terms;
  terms.reserve(f.terms.size());
  for (const auto& [e, c] : f.terms) terms.emplace_back(g_add(f.group, e, m), c);
  return make_series(f.ext, f.group, std::move(terms), g_add(f.group, f.tau, m),
                     f.budget);
}

inline Series s_mul(const Series& f, const Series& g) {
  detail::check_compatible(f, g);
  // Unknown terms of one factor meet known terms of the other at exponent
  // tau_f + min(g) at the earliest, and symmetrically.
  GroupElement a = g_add(f.group, f.tau, s_min_or_tau(g));
  GroupElement b = g_add(f.group, g.tau, s_min_or_tau(f));
  GroupElement tau = g_compare(f.group, a, b) == Cmp::LT ? a : b;
  std::vector<std::pair<GroupElement, FieldElement>> terms;
  if (f.terms.size() * g.terms.size() > kSeriesTermCap) {
    fail(Errc::TooLarge, "product term count exceeds the cap");
  }
  for (const auto& [ef, cf] : f.terms) {
    for (const auto& [eg, cg] : g.terms) {
      terms.emplace_back(g_add(f.group, ef, eg), f_mul(f.ext->F, cf, cg));
    }
  }
  return make_series(f.ext, f.group, std::move(terms), std::move(tau),
                     std::min(f.budget, g.budget));
}

// Geometric series inversion: f = c(1 - h) with min(h) > 0, and 1/f is
// c^-1 * sum h^k. The loop stops once h^k has no terms below tau; if the
// budget runs out first (for example when the exponent group is z*z and
// min(h) = (0,1) never climbs), the precision is honestly unreachable.
inline Series s_invert(const Series& f) {
  if (f.terms.empty() || !g_eq(f.group, s_min(f), g_zero(f.group))) {
    fail(Errc::NotAUnit, "series has no invertible constant term");
  }
  const FieldDescriptor& F = f.ext->F;
  FieldElement c = s_lead(f);
  FieldElement c_inv = f_inv(F, c);
  Series one = s_const(f.ext, f.group, f_one(F), f.tau, f.budget);
  Series h = s_sub(one, s_scale(f, c_inv));

  Series acc = one;
  Series pw = h;
  int steps = 0;
  while (!pw.terms.empty() && g_compare(f.group, s_min(pw), f.tau) == Cmp::LT) {
    if (++steps > f.budget || pw.terms.size() > static_cast<std::size_t>(f.budget)) {
      fail(Errc::PrecisionLoss,
           "inversion cannot reach the precision bound within the term budget");
    }
    acc = s_add(acc, pw);
    pw = s_mul(pw, h);
  }
  Series result = s_scale(acc, c_inv);
  // acc carries tau_f by construction of the additions above.
  return result;
}

// Ring membership relative to the pair K <= F. Construction already forces
// every value into R = F[[G+]]; membership in S additionally pins the
// constant coefficient into K. Units: U(S) = U(R) intersected with S.
inline bool s_in_s(const Series& f) {
  GroupElement zero = g_zero(f.group);
  for (const auto& [e, c] : f.terms) {
    if (g_eq(f.group, e, zero)) return ext_contains(*f.ext, c);
    break;  // terms are ascending; a later match is impossible
  }
  return true;
}

inline bool s_unit_r(const Series& f) {
  return !f.terms.empty() && g_eq(f.group, s_min(f), g_zero(f.group));
}

inline bool s_unit_s(const Series& f) { return s_unit_r(f) && s_in_s(f); }

struct NormalForm {
  FieldElement lead;
  GroupElement order;
  Series unit;  // constant term 1, precision tau - order
};

// f = lead * t^order * unit.
inline NormalForm s_normal_form(const Series& f) {
  if (f.terms.empty()) fail(Errc::ZeroSeries, "normal form of the zero series");
  NormalForm nf{s_lead(f), s_min(f), f};
  nf.unit = s_scale(s_shift(f, g_neg(f.group, nf.order)), f_inv(f.ext->F, nf.lead));
  return nf;
}

// Agreement of two values on every exponent below bound; both must know
// their coefficients that far.
inline bool s_agree_below(const Series& f, const Series& g,
                          const GroupElement& bound) {
  detail::check_compatible(f, g);
  if (g_compare(f.group, bound, f.tau) == Cmp::GT ||
      g_compare(f.group, bound, g.tau) == Cmp::GT) {
    fail(Errc::PrecisionLoss, "agreement bound exceeds a precision bound");
  }
  for (const auto& [e, c] : f.terms) {
    if (g_compare(f.group, e, bound) != Cmp::LT) break;
    if (!(s_coeff_at(g, e) == c)) return false;
  }
  for (const auto& [e, c] : g.terms) {
    if (g_compare(f.group, e, bound) != Cmp::LT) break;
    if (!(s_coeff_at(f, e) == c)) return false;
  }
  return true;
}

namespace detail {

// Tokens that parse back without parentheses: a nonnegative integer, a
// fraction of two of them, or a power of the generator symbol.
inline bool simple_coeff_token(const FieldDescriptor& F, const std::string& s) {
  if (s.empty()) return false;
  std::size_t slash = s.find('/');
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char ch : t) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  if (slash != std::string::npos) {
    return digits(s.substr(0, slash)) && digits(s.substr(slash + 1));
  }
  if (digits(s)) return true;
  if (!F.generator.empty() && s.rfind(F.generator, 0) == 0) {
    std::string rest = s.substr(F.generator.size());
    if (rest.empty()) return true;
    if (rest[0] == '^') return digits(rest.substr(1));
  }
  return false;
}

}  // namespace detail

// Text form that round-trips through the series parser: ascending terms
// joined by '+', composite coefficients parenthesized, the indeterminate
// spelled t.
inline std::string s_str(const Series& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  const FieldDescriptor& F = f.ext->F;
  GroupElement zero = g_zero(f.group);
  for (const auto& [e, c] : f.terms) {
    if (!out.empty()) out += "+";
    std::string coeff = f_str(F, c);
    bool simple = detail::simple_coeff_token(F, coeff);
    if (g_eq(f.group, e, zero)) {
      out += simple ? coeff : "(" + coeff + ")";
      continue;
    }
    if (coeff != "1") {
      out += simple ? coeff : "(" + coeff + ")";
      out += "*";
    }
    out += "t";
    if (f.group.kind == GroupKind::Int && e.as_int() == 1) continue;
    out += "^" + g_str(f.group, e);
  }
  return out;
}

struct RandomSeriesSpec {
  int max_terms = 4;
  bool constant_term = true;  // allow exponent 0
  bool k_constant = false;    // force the constant coefficient into K
  bool nonzero = true;
};

namespace detail {

// Random exponent in [0, tau), or in (0, tau) when zero is excluded.
inline GroupElement random_exponent(const GroupDescriptor& G,
                                    const GroupElement& tau, Rng& rng,
                                    bool allow_zero) {
  switch (G.kind) {
    case GroupKind::Int: {
      std::int64_t hi = static_cast<std::int64_t>(tau.as_int()) - 1;
      std::int64_t lo = allow_zero ? 0 : 1;
      return ge_int(rng.range(lo, hi));
    }
    case GroupKind::Rational: {
      Int den = 1 + static_cast<std::int64_t>(rng.below(4));
      Rat top = tau.as_rat() * Rat(den);
      std::int64_t hi = static_cast<std::int64_t>(numerator(top) / denominator(top));
      std::int64_t lo = allow_zero ? 0 : 1;
      if (hi - 1 < lo) return ge_rat(allow_zero ? Rat(0) : Rat(1, den));
      Rat value(rng.range(lo, hi - 1), den);
      return ge_rat(value);
    }
    case GroupKind::LexPair: {
      // Exponents (i, j) with 0 <= (i, j) < tau; the second coordinate stays
      // in a small band.
      std::int64_t a = static_cast<std::int64_t>(tau.as_pair()[0].as_int());
      std::int64_t i = rng.range(0, a);
      std::int64_t j;
      if (i == 0) {
        j = rng.range(allow_zero ? 0 : 1, 4);
      } else if (i == a) {
        std::int64_t b = static_cast<std::int64_t>(tau.as_pair()[1].as_int());
        j = rng.range(-4, b - 1);
      } else {
        j = rng.range(-4, 4);
      }
      return ge_pair(ge_int(i), ge_int(j));
    }
    default:
      fail(Errc::UnsupportedKind, "no random exponent for this kind");
  }
}

}  // namespace detail

inline Series s_random(const ExtPtr& ext, const GroupDescriptor& G,
                       const GroupElement& tau, Rng& rng,
                       const RandomSeriesSpec& spec = {},
                       int budget = kDefaultTermBudget) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::pair<GroupElement, FieldElement>> terms;
    int count = 1 + static_cast<int>(rng.below(
                        static_cast<std::uint64_t>(spec.max_terms)));
    for (int i = 0; i < count; ++i) {
      GroupElement e = detail::random_exponent(G, tau, rng, spec.constant_term);
      FieldElement c;
      if (spec.k_constant && g_eq(G, e, g_zero(G))) {
        c = embed(*ext, f_random(ext->K, rng));
      } else {
        c = f_random(ext->F, rng);
      }
      terms.emplace_back(std::move(e), std::move(c));
    }
    Series s = make_series(ext, G, std::move(terms), tau, budget);
    if (spec.k_constant && !s_in_s(s)) continue;
    if (!spec.nonzero || !s.terms.empty()) return s;
  }
  // Random draws collapsed to zero repeatedly; fall back to a deterministic
  // nonzero value.
  return s_delta(ext, G, detail::random_exponent(G, tau, rng, spec.constant_term),
                 tau, budget);
}

}  // namespace pvd
