#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pvd/errors.hpp"

namespace pvd {

// All integer and rational arithmetic in the library is exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Representative of a mod p in [0, p).
inline Int mod_norm(const Int& a, const Int& p) {
  Int r = a % p;
  if (r < 0) r += p;
  return r;
}

// Inverse of a mod p for prime p via the extended Euclid identity.
inline Int mod_inverse(const Int& a, const Int& p) {
  Int r0 = p, r1 = mod_norm(a, p);
  if (r1 == 0) fail(Errc::ZeroInversion, "inverse of 0 mod " + p.str());
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    Int s2 = s0 - q * s1;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) fail(Errc::Validation, "modulus " + p.str() + " is not prime");
  return mod_norm(s0, p);
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace pvd
