#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "parind/group_context.hpp"

namespace parind {

/// Coefficients n_H (one per subgroup class, in lattice order) with sum n_H Ind_H^G 1 = rho,
/// or nullopt when rho is not a virtual permutation character.
std::optional<std::vector<Integer>> permutation_coefficients(const GroupContext& ctx, const GenChar& rho);

/// Degree 0, trivial determinant, and an integer combination of permutation characters.
bool in_S(const GroupContext& ctx, const GenChar& rho);

/// Basis of {n : sum n_H [G:H] = 0, prod det(Ind_H^G 1)^{n_H} = 1}, one coordinate per
/// subgroup class.
std::vector<std::vector<Integer>> s_coefficient_lattice(const GroupContext& ctx);

/// sum n_H Ind_H^G 1 with n = sum r_i b_i over the basis above and r_i uniform in
/// [-bound, bound] from a 64-bit Mersenne twister seeded with `seed`. Redraws a few times
/// when the result is zero; returns 0 for bound 0 or a trivial lattice.
GenChar random_S_element(const GroupContext& ctx, std::uint64_t seed, std::uint64_t bound);

/// Hyperelementary subgroups H (class representatives) and n_H with
/// sum n_H Ind_H^G 1 = 1_G. A hyperelementary G gives {(G, 1)}.
/// Throws std::logic_error if no solution exists.
std::vector<std::pair<SubgroupRecord, Integer>> solomon_coefficients(const GroupContext& ctx);

}  // namespace parind
