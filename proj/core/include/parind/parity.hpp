#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parind/membership.hpp"

namespace parind {

/// An opaque +-1 input.
///  Base:          parity over the base field K (root number of the trivial twist).
///  Quadratic:     parity over the quadratic extension cut out by an order-2 character.
///  DihedralTwist: root number of the twist by a Type2 generator tau - 1 - det tau.
struct ParitySymbol {
  enum class Kind { Base, Quadratic, DihedralTwist };
  Kind kind = Kind::Base;
  std::string id;  // character id ("X.2") or generator id; empty for Base

  std::string name() const;
  auto operator<=>(const ParitySymbol&) const = default;
};

/// Product of symbols with exponents in F_2; only the odd ones are stored.
struct ParityExpression {
  std::set<ParitySymbol> odd;

  void toggle(const ParitySymbol& s);
  /// Symbol names joined by " * ", or "1".
  std::string to_string() const;
  bool operator==(const ParityExpression&) const = default;
};

struct ParityInput {
  std::optional<int> base;
  std::map<std::string, int> quadratic;
  std::map<std::string, int> dihedral;

  std::optional<int> lookup(const ParitySymbol& s) const;
};

/// Bad parity input: unknown symbol ids, values other than +-1, or missing assignments.
class ParityInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuadraticField {
  std::size_t character;
  SubgroupRecord kernel;
};

/// One entry per order-2 linear character, paired with its index-2 kernel.
std::vector<QuadraticField> quadratic_fields(const GroupContext& ctx);

struct ParityDerivation {
  ParityExpression expression;
  MembershipCertificate certificate;
  std::string certificate_id;
};

/// Parity of F^H from Ind_H^G 1 = rho_H + det Ind_H^G 1 + ([G:H] - 1) 1, with rho_H written
/// through the family (a thm12 family) and Type1 terms contributing +1.
/// Throws std::invalid_argument for a cor29 family and std::logic_error when rho_H has
/// no certificate.
ParityDerivation parity_expression(const GeneratorFamily& family, const ElementSet& h);
/// Same, from a given certificate for rho_H (throws std::logic_error if it does not verify).
ParityDerivation parity_expression(const GeneratorFamily& family, const ElementSet& h,
                                   const MembershipCertificate& cert);

/// Symbols of `expr` without a value in `input`.
std::vector<std::string> missing_symbols(const ParityExpression& expr, const ParityInput& input);
/// Product of the assigned values; throws ParityInputError listing missing symbols.
int evaluate(const ParityExpression& expr, const ParityInput& input);

struct ParityRow {
  std::size_t class_id;
  std::string field;
  std::uint64_t index;
  ParityExpression expression;
  std::string certificate_id;
  std::optional<int> value;
};

struct ParityTable {
  std::string group;
  std::vector<ParityRow> rows;

  std::string to_string() const;
};

/// Rejects unknown symbol ids and values other than +-1.
void validate_parity_input(const GeneratorFamily& family, const ParityInput& input);

/// One row per subgroup class; rows are evaluated when the input covers their symbols.
ParityTable parity_table(const GeneratorFamily& family, const ParityInput& input);

struct ShaPrimes {
  std::set<std::uint64_t> odd_primes;
  bool needs_two = false;
};

/// Odd p with a D2p subquotient; 2 when a C2 x C2 subquotient exists.
ShaPrimes required_sha_primes(const GroupContext& ctx);

}  // namespace parind
