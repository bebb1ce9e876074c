#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parind/character_table.hpp"
#include "parind/integer.hpp"

namespace parind {

/// Generalized character: integer coordinates over the irreducibles of one table.
class GenChar {
 public:
  GenChar() = default;
  explicit GenChar(TablePtr table);
  GenChar(TablePtr table, std::vector<Integer> coeffs);

  static GenChar irreducible(TablePtr table, std::size_t chi, const Integer& mult = 1);
  static GenChar trivial(TablePtr table) { return irreducible(std::move(table), 0); }
  static GenChar regular(TablePtr table);

  const TablePtr& table_ptr() const { return table_; }
  const CharacterTable& table() const { return *table_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(std::size_t chi) const { return coeffs_[chi]; }
  std::size_t size() const { return coeffs_.size(); }

  Integer degree() const;
  Cyclotomic value(std::size_t cls) const;
  std::vector<Cyclotomic> values() const;

  bool is_zero() const { return parind::is_zero(coeffs_); }
  /// Invariant under complex conjugation of irreducibles.
  bool is_real() const;
  /// All coefficients non-negative (an actual character).
  bool is_character() const;

  GenChar conj() const;
  GenChar operator+(const GenChar& o) const;
  GenChar operator-(const GenChar& o) const;
  GenChar operator-() const;
  GenChar operator*(const Integer& k) const;
  GenChar& operator+=(const GenChar& o);
  GenChar& operator-=(const GenChar& o);
  bool operator==(const GenChar& o) const;

  /// "X.2 - 2*X.1" style; "0" for the zero character.
  std::string to_string() const;

 private:
  void check_same_table(const GenChar& o) const;

  TablePtr table_;
  std::vector<Integer> coeffs_;
};

/// <a, b> from coordinates (the irreducibles are orthonormal).
Integer inner_product(const GenChar& a, const GenChar& b);
/// (1/|G|) sum over classes |C| f(c) conj(g(c)) for arbitrary class functions.
Rational inner_product_values(const CharacterTable& table, const std::vector<Cyclotomic>& f,
                              const std::vector<Cyclotomic>& g);
/// Coordinates of a class function, or nullopt when it is not a generalized character.
std::optional<std::vector<Integer>> decompose(const CharacterTable& table, const std::vector<Cyclotomic>& values);

GenChar tensor(const GenChar& a, const GenChar& b);

/// Exponent vector of det rho, using det(-tau) = conj(det tau).
std::vector<std::uint64_t> determinant_exponents(const GenChar& rho);
/// det rho as a linear character (a single irreducible).
GenChar determinant(const GenChar& rho);
bool has_trivial_determinant(const GenChar& rho);

/// Indices of the real nontrivial linear characters (orders exactly 2).
std::vector<std::size_t> order2_linear_chars(const CharacterTable& table);
/// Multiplicative order of a linear character.
std::uint64_t linear_order(const CharacterTable& table, std::size_t chi);

}  // namespace parind
