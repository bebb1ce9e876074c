#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "parind/group_context.hpp"
#include "parind/int_matrix.hpp"

namespace parind {

enum class Flavor { Theorem12, Corollary29 };
std::string flavor_name(Flavor f);  // "thm12" / "cor29"
std::optional<Flavor> parse_flavor(const std::string& s);

struct GeneratorDesc {
  enum class Kind {
    /// chi + conj(chi) - 2 deg(chi) 1 for an irreducible chi.
    Type1,
    /// Ind_H^G(tau - 1 - det tau) for tau of degree 2 factoring through a dihedral H/N.
    Type2,
    /// Ind_H^G(chi + conj(chi) - 2) for a linear chi of H.
    CyclicPair,
    /// Ind_H^G(tau) for tau a lattice basis vector of the real, degree-0, det-trivial
    /// characters of a dihedral H/N.
    DihedralBasis,
  };

  Kind kind = Kind::Type1;
  std::string id;
  std::size_t irreducible = 0;  // Type1
  SubgroupRecord h;             // other kinds
  SubgroupRecord n;             // Type2 / DihedralBasis
  SmallTypeTag tag;
  /// The character on H whose induction is the generator (for Type2: inflated tau).
  GenChar on_h;
  GenChar expansion;
};

std::string kind_name(GeneratorDesc::Kind k);

/// One generator per irreducible; the trivial one (zero) is dropped.
std::vector<GeneratorDesc> enumerate_type1(const GroupContext& ctx);
/// Every degree-2 character of every dihedral subquotient, in the order
/// (|H| descending, H class, N, tau). Zero expansions are dropped, duplicates are kept.
std::vector<GeneratorDesc> enumerate_type2(const GroupContext& ctx);

/// Real, degree-0, trivial-determinant generalized characters of a group, as a lattice basis
/// (rows are coefficient vectors over the irreducibles).
std::vector<std::vector<Integer>> real_det_trivial_lattice(const CharacterTable& table);

class GeneratorFamily {
 public:
  GeneratorFamily(ContextPtr ctx, Flavor flavor, std::vector<GeneratorDesc> generators);

  const GroupContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  Flavor flavor() const { return flavor_; }
  const std::vector<GeneratorDesc>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const GeneratorDesc& at(std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> find(const std::string& id) const;
  /// Index of the generator with exactly this expansion.
  std::optional<std::size_t> find_expansion(const GenChar& g) const;
  /// Echelon basis of the lattice spanned by the expansions.
  const RowLattice& lattice() const { return lattice_; }

 private:
  ContextPtr ctx_;
  Flavor flavor_;
  std::vector<GeneratorDesc> gens_;
  std::unordered_map<std::string, std::size_t> by_id_;
  RowLattice lattice_;
};

/// Type1 then Type2, deduplicated by expansion.
GeneratorFamily theorem12_family(ContextPtr ctx);
/// Cyclic-quotient pairs then dihedral-quotient bases, deduplicated by expansion.
GeneratorFamily cor29_family(ContextPtr ctx);
GeneratorFamily make_family(ContextPtr ctx, Flavor flavor);

}  // namespace parind
