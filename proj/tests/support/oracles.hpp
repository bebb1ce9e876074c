#pragma once

// Independent reference computations used by the tests. Nothing here calls into the
// stabilizer chain, the lattice code or the character-table code it is compared against.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "parind/cyclotomic.hpp"
#include "parind/group_spec.hpp"
#include "parind/int_matrix.hpp"
#include "parind/permutation.hpp"

namespace oracle {

using parind::Permutation;

/// All elements by breadth-first closure over the generators.
std::set<Permutation> enumerate(const std::vector<Permutation>& gens, std::size_t degree);

/// Conjugacy class sizes by explicit orbits, sorted ascending.
std::vector<std::uint64_t> class_sizes(const std::set<Permutation>& elems);

/// True when the group is dihedral of order 8 by a search for r, s with r^4 = s^2 = (rs)^2 = 1
/// and s outside <r>.
bool has_d8_presentation(const std::set<Permutation>& elems);
/// Dihedral of order 2p: r of order p and an involution s with s r s = r^-1.
bool has_dihedral_presentation(const std::set<Permutation>& elems, std::uint64_t p);
bool is_cyclic(const std::set<Permutation>& elems);

/// Row echelon form by naive Euclidean row reduction; returns the nonzero rows with positive
/// pivots and entries above pivots in [0, pivot).
std::vector<std::vector<parind::Integer>> naive_hnf(std::vector<std::vector<parind::Integer>> rows);

/// Character table by numerical eigenvectors of a random combination of class matrices
/// (Burnside), with values recognised as exact cyclotomics of conductor `exponent` and
/// checked against the complex values. Rows come back as sets (order is not compared).
/// Elements are given as an explicit list; classes are in the caller's order.
std::vector<std::vector<parind::Cyclotomic>> burnside_table(const std::vector<Permutation>& elements,
                                                            const std::vector<std::vector<std::size_t>>& classes,
                                                            std::uint64_t exponent);

/// Groups of the bundled catalog (loaded once).
const std::vector<parind::CatalogEntry>& catalog();
/// Catalog group by name, falling back to the group-spec parser.
parind::GroupPtr group(const std::string& name);

}  // namespace oracle
