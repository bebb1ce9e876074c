#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace parind {

/// Arbitrary-precision integer used for every exact coefficient in the library.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer to_integer(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline Integer to_integer(std::uint64_t v) {
  Integer r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

inline bool fits_int64(const Integer& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

inline std::int64_t to_int64(const Integer& v) { return mpz_get_si(v.get_mpz_t()); }

inline bool is_zero(const std::vector<Integer>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Prime factors of n in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace parind
