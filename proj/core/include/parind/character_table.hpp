#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "parind/cyclotomic.hpp"
#include "parind/perm_group.hpp"

namespace parind {

/// Irreducible complex characters of a permutation group.
///
/// Computed by Dixon-Schneider: common eigenvectors of the class matrices over a prime field
/// F_l with l = 1 mod exp(G) and l > 2 sqrt|G|, lifted to exact values in Z[zeta_exp] from
/// the eigenvalue multiplicities of each class representative. Rows are ordered trivial
/// character first, then by (degree, lexicographic value tuple).
class CharacterTable {
 public:
  /// Throws std::runtime_error if the eigenspaces fail to split (a defect, not an input error).
  explicit CharacterTable(GroupPtr group);

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t size() const { return values_.size(); }
  /// Conductor of every value: the exponent of the group.
  std::uint64_t conductor() const { return conductor_; }
  std::uint64_t prime() const { return prime_; }

  const std::vector<std::vector<Cyclotomic>>& values() const { return values_; }
  const Cyclotomic& value(std::size_t chi, std::size_t cls) const { return values_[chi][cls]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  std::uint64_t degree(std::size_t chi) const { return degrees_[chi]; }
  std::uint64_t class_size(std::size_t cls) const { return group_->classes()[cls].size; }

  /// Index of the complex-conjugate character.
  std::size_t conjugate(std::size_t chi) const { return conj_[chi]; }
  bool is_real(std::size_t chi) const { return conj_[chi] == chi; }
  bool is_linear(std::size_t chi) const { return degrees_[chi] == 1; }

  /// det chi(g_c) = zeta^e for e = determinant_exponents(chi)[c], zeta = zeta_conductor.
  const std::vector<std::uint64_t>& determinant_exponents(std::size_t chi) const { return det_exp_[chi]; }
  /// Linear character with the given exponent vector, or -1.
  std::int64_t linear_index(const std::vector<std::uint64_t>& exponents) const;
  /// Exponent vector of a linear character.
  const std::vector<std::uint64_t>& linear_exponents(std::size_t chi) const { return lin_exp_[chi]; }

  /// Class of g^k for g in class `cls`.
  std::uint32_t power_map(std::uint32_t cls, std::int64_t k) const { return group_->power_class(cls, k); }

  /// Text rendering: one column per class headed by representative and class size; values
  /// as integer polynomials in z = zeta_conductor.
  std::string to_string() const;

 private:
  GroupPtr group_;
  std::uint64_t conductor_ = 1;
  std::uint64_t prime_ = 0;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<std::uint64_t> degrees_;
  std::vector<std::size_t> conj_;
  std::vector<std::vector<std::uint64_t>> det_exp_;
  std::vector<std::vector<std::uint64_t>> lin_exp_;  // empty for non-linear rows
  std::map<std::vector<std::uint64_t>, std::size_t> linear_lookup_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// det of a genuine character given by its values on classes, by Newton's identities on the
/// power sums tau(g^k). Returns the exponent vector (values zeta^e), or throws
/// std::domain_error if some value is not a root of unity.
std::vector<std::uint64_t> newton_determinant(const CharacterTable& table, const std::vector<Cyclotomic>& values,
                                              std::uint64_t degree);

}  // namespace parind
