#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parind/element_set.hpp"
#include "parind/perm_group.hpp"

namespace parind {

/// A subgroup of some parent PermGroup, identified by its element indices in the parent.
struct SubgroupRecord {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  /// Conjugacy-class id in the parent's lattice; -1 when unknown.
  std::int64_t class_id = -1;
  bool normal = false;
  ElementSet elements;

  std::uint64_t index_in(const PermGroup& parent) const { return parent.order() / order; }
};

/// Greedy generating set of `set`: walks the elements in index order and keeps those not
/// already generated.
std::vector<std::uint32_t> greedy_generators(const PermGroup& g, const ElementSet& set);

SubgroupRecord make_subgroup_record(const PermGroup& g, const ElementSet& set);

/// Subgroups up to conjugacy, with every conjugate kept for lookup.
class SubgroupLattice {
 public:
  static constexpr std::uint64_t kDefaultOrderBound = 512;

  /// Throws std::length_error when |G| exceeds `order_bound`.
  explicit SubgroupLattice(GroupPtr group, std::uint64_t order_bound = kDefaultOrderBound);

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  /// One record per class, ordered by (order, lexicographically minimal element list).
  const std::vector<SubgroupRecord>& classes() const { return classes_; }
  const SubgroupRecord& at(std::size_t id) const { return classes_[id]; }
  std::size_t size() const { return classes_.size(); }

  /// All conjugates of class `id` (the canonical representative first).
  const std::vector<ElementSet>& conjugates(std::size_t id) const { return conjugates_[id]; }
  /// Class id of an arbitrary subgroup given by its element set.
  std::size_t class_of(const ElementSet& subgroup) const;
  std::vector<SubgroupRecord> normal_subgroups() const;
  /// Every subgroup (not only class representatives) contained in `h`.
  std::vector<ElementSet> subgroups_of(const ElementSet& h) const;
  /// Id of the full group's class.
  std::size_t top() const { return classes_.size() - 1; }

 private:
  GroupPtr group_;
  std::vector<SubgroupRecord> classes_;
  std::vector<std::vector<ElementSet>> conjugates_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
};

/// Exhaustive oracle: all subgroups of a group with |G| <= 24 by scanning every subset
/// containing the identity. Returns the number of conjugacy classes.
std::size_t brute_force_subgroup_class_count(const PermGroup& g);

/// Elements normalizing `h`.
ElementSet normalizer(const PermGroup& g, const ElementSet& h);
bool is_normal(const PermGroup& g, const ElementSet& h);

/// Subgroup as a stand-alone group on the same points.
GroupPtr subgroup_group(const PermGroup& g, const ElementSet& h);

/// Translates an element set of `from` into element indices of `to`, both acting on the same
/// points. Elements missing from `to` throw.
ElementSet translate(const PermGroup& from, const ElementSet& s, const PermGroup& to);

struct QuotientMap {
  GroupPtr source;
  SubgroupRecord kernel;
  /// Regular action of G/N on the cosets of N.
  GroupPtr image;
  /// source element index -> image element index.
  std::vector<std::uint32_t> element_map;
};

/// Throws std::invalid_argument when `n` is not normal.
QuotientMap quotient(GroupPtr g, const SubgroupRecord& n);

struct SmallTypeTag {
  enum class Kind { Cyclic, KleinFour, Dihedral8, Dihedral2p, Other };
  Kind kind = Kind::Other;
  /// n for Cyclic(n); p for Dihedral2p(p).
  std::uint64_t parameter = 0;

  bool is_generator_type() const {
    return kind == Kind::KleinFour || kind == Kind::Dihedral8 || kind == Kind::Dihedral2p;
  }
  std::string name() const;
  bool operator==(const SmallTypeTag&) const = default;
};

SmallTypeTag identify_small_type(const PermGroup& g);

struct Hyperelementary {
  std::uint64_t prime;
  SubgroupRecord cyclic_normal;
};

/// Some normal cyclic N with G/N a p-group and gcd(|N|, p) = 1; smallest p, maximal N.
std::optional<Hyperelementary> is_hyperelementary(const PermGroup& g);

struct Subquotient {
  SubgroupRecord h;
  SubgroupRecord n;
  SmallTypeTag tag;
};

/// Pairs (H, N) up to G-conjugacy with H/N one of C2xC2, D8, D2p.
std::vector<Subquotient> dihedral_subquotients(const SubgroupLattice& lattice);

}  // namespace parind
