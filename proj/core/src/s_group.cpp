#include "parind/s_group.hpp"

#include <random>
#include <stdexcept>

#include "parind/int_matrix.hpp"

namespace parind {

namespace {

RowLattice permutation_lattice(const GroupContext& ctx, const std::vector<std::size_t>& classes) {
  RowLattice lat(ctx.table()->size());
  for (std::size_t id : classes) lat.add_row(ctx.perm_char(ctx.lattice().at(id).elements).coeffs());
  return lat;
}

std::vector<std::size_t> all_classes(const GroupContext& ctx) {
  std::vector<std::size_t> ids(ctx.lattice().size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

std::optional<std::vector<Integer>> permutation_coefficients(const GroupContext& ctx, const GenChar& rho) {
  return permutation_lattice(ctx, all_classes(ctx)).solve(rho.coeffs());
}

bool in_S(const GroupContext& ctx, const GenChar& rho) {
  if (rho.table_ptr() != ctx.table()) return false;
  if (rho.degree() != 0 || !has_trivial_determinant(rho)) return false;
  return permutation_coefficients(ctx, rho).has_value();
}

std::vector<std::vector<Integer>> s_coefficient_lattice(const GroupContext& ctx) {
  const auto& lat = ctx.lattice();
  const std::size_t m = lat.size();
  const std::size_t k = ctx.table()->size();
  const std::uint64_t e = ctx.table()->conductor();
  IntMatrix a(m + k, 1 + k);
  for (std::size_t r = 0; r < m; ++r) {
    a(r, 0) = to_integer(lat.at(r).index_in(ctx.group()));
    const auto sign = ctx.coset_sign_exponents(lat.at(r).elements);
    for (std::size_t c = 0; c < k; ++c) a(r, 1 + c) = to_integer(sign[c]);
  }
  for (std::size_t c = 0; c < k; ++c) a(m + c, 1 + c) = to_integer(e);
  const HnfResult h = hnf(a);
  RowLattice basis(m);
  for (std::size_t r = h.rank; r < h.U.rows(); ++r) {
    std::vector<Integer> v(m);
    for (std::size_t j = 0; j < m; ++j) v[j] = h.U(r, j);
    if (!is_zero(v)) basis.add_row(v);
  }
  basis.reduce();
  return basis.basis();
}

GenChar random_S_element(const GroupContext& ctx, std::uint64_t seed, std::uint64_t bound) {
  GenChar zero = ctx.zero();
  if (bound == 0) return zero;
  const auto basis = s_coefficient_lattice(ctx);
  if (basis.empty()) return zero;
  const auto& lat = ctx.lattice();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-static_cast<std::int64_t>(bound), static_cast<std::int64_t>(bound));
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Integer> n(lat.size());
    for (const auto& b : basis) {
      const Integer r = to_integer(dist(rng));
      for (std::size_t j = 0; j < n.size(); ++j) n[j] += r * b[j];
    }
    GenChar rho = zero;
    for (std::size_t j = 0; j < n.size(); ++j)
      if (n[j] != 0) rho += ctx.perm_char(lat.at(j).elements) * n[j];
    if (!rho.is_zero()) return rho;
  }
  return zero;
}

std::vector<std::pair<SubgroupRecord, Integer>> solomon_coefficients(const GroupContext& ctx) {
  const auto& lat = ctx.lattice();
  if (is_hyperelementary(ctx.group())) return {{lat.at(lat.top()), Integer(1)}};
  std::vector<std::size_t> hyper;
  for (std::size_t id = 0; id < lat.size(); ++id)
    if (is_hyperelementary(*subgroup_group(ctx.group(), lat.at(id).elements))) hyper.push_back(id);
  const auto x = permutation_lattice(ctx, hyper).solve(ctx.trivial().coeffs());
  if (!x) throw std::logic_error("no integer Solomon combination for " + ctx.name());
  std::vector<std::pair<SubgroupRecord, Integer>> out;
  for (std::size_t i = 0; i < hyper.size(); ++i)
    if ((*x)[i] != 0) out.emplace_back(lat.at(hyper[i]), (*x)[i]);
  return out;
}

}  // namespace parind
