#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parind/integer.hpp"

namespace parind {

/// Element of Z[zeta_n] in the power basis 1, z, ..., z^(phi(n)-1) modulo the n-th
/// cyclotomic polynomial. Binary operations lift both operands to the lcm of their
/// conductors, so equal values always compare equal.
class Cyclotomic {
 public:
  static constexpr std::uint64_t kMaxConductor = 1'000'000;

  Cyclotomic() : Cyclotomic(Integer(0)) {}
  Cyclotomic(const Integer& v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v) : Cyclotomic(Integer(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(int v) : Cyclotomic(Integer(v)) {}   // NOLINT(google-explicit-constructor)

  /// zeta_n^k. Throws std::overflow_error past kMaxConductor.
  static Cyclotomic zeta(std::uint64_t n, std::int64_t k = 1);
  /// Sum of c_e zeta_n^e over all exponents e in [0, n).
  static Cyclotomic from_exponents(std::uint64_t n, const std::vector<Integer>& coeffs);

  std::uint64_t conductor() const { return n_; }
  const std::vector<Integer>& coefficients() const { return c_; }

  /// Same value written over Q(zeta_m); n must divide m.
  Cyclotomic lifted(std::uint64_t m) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scaled(const Integer& k) const;
  /// Exact division by a nonzero integer; throws std::domain_error if inexact.
  Cyclotomic divided(const Integer& k) const;

  bool operator==(const Cyclotomic& o) const;
  bool is_zero() const;
  bool is_integer() const;
  /// Value when is_integer(); throws otherwise.
  Integer integer_value() const;

  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conj() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
  Cyclotomic galois(std::int64_t k) const;
  /// e with value == zeta_n^e, if the value is an n-th root of unity.
  std::optional<std::uint64_t> root_of_unity_exponent() const;

  std::complex<double> to_complex() const;
  /// Integer polynomial in `var` = zeta_n (after lifting to `conductor`, if given).
  std::string to_string(std::uint64_t conductor = 0, const std::string& var = "z") const;

  /// Lexicographic order on coefficient vectors over a common conductor.
  static bool less(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint64_t n, std::vector<Integer> c) : n_(n), c_(std::move(c)) {}

  std::uint64_t n_ = 1;
  std::vector<Integer> c_;
};

std::uint64_t euler_phi(std::uint64_t n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n);

}  // namespace parind
