#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "parind/gen_char.hpp"
#include "parind/group_structure.hpp"

namespace parind {

class GroupContext;
using ContextPtr = std::shared_ptr<GroupContext>;

/// H <= G with its own context and the data needed to move characters between them.
struct SubgroupEmbedding {
  ElementSet elements;  // in G's indexing
  ContextPtr sub;
  /// class of H -> class of G
  std::vector<std::uint32_t> fusion;
  /// restriction[chi][psi] = <Res chi, psi>_H
  std::vector<std::vector<Integer>> restriction;
};

/// G -> G/N with the quotient's context.
struct QuotientEmbedding {
  ElementSet kernel;
  QuotientMap map;
  ContextPtr quotient;
  /// class of G -> class of G/N
  std::vector<std::uint32_t> class_map;
  /// irreducible of G/N -> irreducible of G
  std::vector<std::size_t> inflation;
};

/// A group together with its lazily computed lattice, character table, dihedral
/// subquotients, and cached embeddings of subgroups and quotients. Thread-safe.
class GroupContext {
 public:
  static ContextPtr make(GroupPtr group, std::string name = "");

  const std::string& name() const { return name_; }
  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  const SubgroupLattice& lattice() const;
  const TablePtr& table() const;
  const std::vector<Subquotient>& subquotients() const;

  const SubgroupEmbedding& embedding(const ElementSet& h) const;
  const QuotientEmbedding& quotient(const ElementSet& n) const;

  GenChar trivial() const { return GenChar::trivial(table()); }
  GenChar zero() const { return GenChar(table()); }

  /// Ind_H^G of a generalized character on H (given on embedding(h).sub's table).
  GenChar induce(const ElementSet& h, const GenChar& tau) const;
  GenChar restrict(const ElementSet& h, const GenChar& rho) const;
  GenChar inflate(const ElementSet& n, const GenChar& rho) const;

  /// Ind_H^G 1 from fixed-coset counts.
  GenChar perm_char(const ElementSet& h) const;
  /// Ind_H^G 1 - det Ind_H^G 1 - ([G:H] - 1) 1.
  GenChar rho(const ElementSet& h) const;
  /// Sign of the action of each class representative on the cosets of H, as an exponent
  /// vector over the table's conductor (0 or conductor/2).
  std::vector<std::uint64_t> coset_sign_exponents(const ElementSet& h) const;

 private:
  GroupContext(GroupPtr group, std::string name) : group_(std::move(group)), name_(std::move(name)) {}

  GroupPtr group_;
  std::string name_;

  mutable std::once_flag lattice_once_, table_once_, subquotients_once_;
  mutable std::unique_ptr<SubgroupLattice> lattice_;
  mutable TablePtr table_;
  mutable std::vector<Subquotient> subquotients_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<ElementSet, std::unique_ptr<SubgroupEmbedding>, ElementSetHash> embeddings_;
  mutable std::unordered_map<ElementSet, std::unique_ptr<QuotientEmbedding>, ElementSetHash> quotients_;
  mutable std::unordered_map<ElementSet, GenChar, ElementSetHash> perm_chars_;
};

}  // namespace parind
