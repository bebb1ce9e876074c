#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "parind/element_set.hpp"
#include "parind/permutation.hpp"

namespace parind {

struct ConjugacyClass {
  std::uint32_t representative;  ///< minimal element index in the class
  std::uint64_t size;
  std::uint32_t element_order;
};

/// A finite permutation group with a stabilizer chain.
///
/// The chain is built eagerly by deterministic Schreier-Sims. Everything that
/// needs the explicit element list (multiplication by index, classes, power
/// maps) is computed on first use and cached; elements are indexed in
/// lexicographic order of their image vectors, so index 0 is the identity.
class PermGroup {
 public:
  /// Upper bound on |G| for anything that enumerates elements.
  static constexpr std::uint64_t kMaxEnumeratedOrder = 200000;

  /// Throws std::invalid_argument for degree 0 or generators of the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Point>& base() const { return base_; }
  std::vector<std::size_t> transversal_sizes() const;
  bool contains(const Permutation& p) const;

  // Element enumeration.
  std::size_t size() const { return elements().size(); }
  const std::vector<Permutation>& elements() const;
  const Permutation& element(std::uint32_t i) const { return elements()[i]; }
  std::optional<std::uint32_t> index_of(const Permutation& p) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t element_order(std::uint32_t a) const;
  std::uint32_t power(std::uint32_t a, std::int64_t k) const;
  /// Element indices of the generators (identity generators dropped).
  const std::vector<std::uint32_t>& generator_indices() const;
  /// g^-1 a g where g is generator number `gen`.
  std::uint32_t conjugate_by_generator(std::uint32_t a, std::size_t gen) const;
  /// g^-1 a g for arbitrary element indices.
  std::uint32_t conjugate(std::uint32_t a, std::uint32_t g) const;

  /// Lcm of element orders.
  std::uint64_t exponent() const;
  bool is_abelian() const;

  // Conjugacy classes, ordered by (element order, minimal representative).
  const std::vector<ConjugacyClass>& classes() const;
  std::uint32_t class_of(std::uint32_t element) const;
  std::uint32_t inverse_class(std::uint32_t cls) const;
  /// Class of g^k for g in class `cls`; k taken modulo the exponent.
  std::uint32_t power_class(std::uint32_t cls, std::int64_t k) const;

  /// Subgroup generated by the given element indices.
  ElementSet closure(std::span<const std::uint32_t> gens) const;
  ElementSet full_set() const;
  /// Conjugate subgroup S^g.
  ElementSet conjugate_set(const ElementSet& s, std::uint32_t g) const;

 private:
  struct Level {
    Point base_point;
    std::vector<Permutation> strong;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // point -> orbit slot, -1 if absent
    std::vector<Permutation> transversal;
  };
  struct Cache;

  void schreier_sims();
  void build_orbit(Level& level) const;
  /// Sifts p starting at `from`; returns the residue and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t from) const;
  const Cache& cache() const;
  const Cache& classes_cache() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
  std::shared_ptr<Cache> cache_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

}  // namespace parind
