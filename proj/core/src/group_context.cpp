#include "parind/group_context.hpp"

#include <stdexcept>

namespace parind {

ContextPtr GroupContext::make(GroupPtr group, std::string name) {
  return ContextPtr(new GroupContext(std::move(group), std::move(name)));
}

const SubgroupLattice& GroupContext::lattice() const {
  std::call_once(lattice_once_, [&] { lattice_ = std::make_unique<SubgroupLattice>(group_); });
  return *lattice_;
}

const TablePtr& GroupContext::table() const {
  std::call_once(table_once_, [&] { table_ = std::make_shared<const CharacterTable>(group_); });
  return table_;
}

const std::vector<Subquotient>& GroupContext::subquotients() const {
  std::call_once(subquotients_once_, [&] { subquotients_ = dihedral_subquotients(lattice()); });
  return subquotients_;
}

const SubgroupEmbedding& GroupContext::embedding(const ElementSet& h) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = embeddings_.find(h); it != embeddings_.end()) return *it->second;
  }
  if (h.universe() != group_->size() || h.count() == 0)
    throw std::invalid_argument("element set is not a subgroup of this group");
  auto emb = std::make_unique<SubgroupEmbedding>();
  emb->elements = h;
  const PermGroup& g = *group_;
  GroupPtr sub = h.count() == g.size() ? group_ : subgroup_group(g, h);
  if (sub->order() != h.count()) throw std::invalid_argument("element set is not a subgroup of this group");
  // H = G refers back to this context without owning it (no reference cycle).
  emb->sub = sub == group_ ? ContextPtr(ContextPtr(), const_cast<GroupContext*>(this)) : make(sub);
  const PermGroup& hg = emb->sub->group();
  for (const auto& c : hg.classes()) {
    const auto idx = g.index_of(hg.element(c.representative));
    if (!idx || !h.test(*idx)) throw std::invalid_argument("element set is not a subgroup of this group");
    emb->fusion.push_back(g.class_of(*idx));
  }
  const auto& gt = *table();
  const auto& ht = *emb->sub->table();
  for (std::size_t chi = 0; chi < gt.size(); ++chi) {
    std::vector<Cyclotomic> res;
    for (auto c : emb->fusion) res.push_back(gt.value(chi, c));
    auto coeffs = decompose(ht, res);
    if (!coeffs) throw std::runtime_error("restriction is not a generalized character");
    emb->restriction.push_back(std::move(*coeffs));
  }
  std::lock_guard lock(cache_mutex_);
  auto [it, fresh] = embeddings_.emplace(h, std::move(emb));
  return *it->second;
}

const QuotientEmbedding& GroupContext::quotient(const ElementSet& n) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = quotients_.find(n); it != quotients_.end()) return *it->second;
  }
  auto emb = std::make_unique<QuotientEmbedding>();
  emb->kernel = n;
  emb->map = parind::quotient(group_, make_subgroup_record(*group_, n));
  emb->quotient = make(emb->map.image);
  const PermGroup& g = *group_;
  const PermGroup& q = emb->quotient->group();
  for (const auto& c : g.classes()) emb->class_map.push_back(q.class_of(emb->map.element_map[c.representative]));
  const auto& gt = *table();
  const auto& qt = *emb->quotient->table();
  for (std::size_t psi = 0; psi < qt.size(); ++psi) {
    std::vector<Cyclotomic> vals;
    for (auto c : emb->class_map) vals.push_back(qt.value(psi, c));
    auto coeffs = decompose(gt, vals);
    if (!coeffs) throw std::runtime_error("inflated character does not decompose");
    std::size_t hit = gt.size();
    for (std::size_t chi = 0; chi < coeffs->size(); ++chi)
      if ((*coeffs)[chi] != 0) hit = (hit == gt.size() && (*coeffs)[chi] == 1) ? chi : gt.size() + 1;
    if (hit >= gt.size()) throw std::runtime_error("inflation of an irreducible is not irreducible");
    emb->inflation.push_back(hit);
  }
  std::lock_guard lock(cache_mutex_);
  auto [it, fresh] = quotients_.emplace(n, std::move(emb));
  return *it->second;
}

GenChar GroupContext::induce(const ElementSet& h, const GenChar& tau) const {
  const auto& emb = embedding(h);
  if (tau.table_ptr() != emb.sub->table()) throw std::invalid_argument("character does not live on the subgroup");
  GenChar out(table());
  std::vector<Integer> c(out.size());
  for (std::size_t chi = 0; chi < c.size(); ++chi)
    for (std::size_t psi = 0; psi < tau.size(); ++psi)
      if (tau.coeff(psi) != 0 && emb.restriction[chi][psi] != 0) c[chi] += tau.coeff(psi) * emb.restriction[chi][psi];
  return GenChar(table(), std::move(c));
}

GenChar GroupContext::restrict(const ElementSet& h, const GenChar& rho) const {
  const auto& emb = embedding(h);
  if (rho.table_ptr() != table()) throw std::invalid_argument("character does not live on this group");
  const auto& ht = emb.sub->table();
  std::vector<Integer> c(ht->size());
  for (std::size_t chi = 0; chi < rho.size(); ++chi) {
    if (rho.coeff(chi) == 0) continue;
    for (std::size_t psi = 0; psi < c.size(); ++psi) c[psi] += rho.coeff(chi) * emb.restriction[chi][psi];
  }
  return GenChar(ht, std::move(c));
}

GenChar GroupContext::inflate(const ElementSet& n, const GenChar& rho) const {
  const auto& emb = quotient(n);
  if (rho.table_ptr() != emb.quotient->table()) throw std::invalid_argument("character does not live on the quotient");
  GenChar out(table());
  std::vector<Integer> c(out.size());
  for (std::size_t psi = 0; psi < rho.size(); ++psi) c[emb.inflation[psi]] += rho.coeff(psi);
  return GenChar(table(), std::move(c));
}

GenChar GroupContext::perm_char(const ElementSet& h) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = perm_chars_.find(h); it != perm_chars_.end()) return it->second;
  }
  const PermGroup& g = *group_;
  const auto& classes = g.classes();
  std::vector<std::uint64_t> hits(classes.size(), 0);
  h.for_each([&](std::uint32_t x) { ++hits[g.class_of(x)]; });
  // Fixed cosets of g: |C_G(g)| |C n H| / |H|.
  std::vector<Cyclotomic> vals;
  const std::uint64_t order = g.order(), hsize = h.count();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::uint64_t num = order / classes[c].size * hits[c];
    if (num % hsize) throw std::runtime_error("fixed-coset count is not an integer");
    vals.emplace_back(to_integer(num / hsize));
  }
  auto coeffs = decompose(*table(), vals);
  if (!coeffs) throw std::runtime_error("permutation character does not decompose");
  GenChar out(table(), std::move(*coeffs));
  std::lock_guard lock(cache_mutex_);
  perm_chars_.emplace(h, out);
  return out;
}

GenChar GroupContext::rho(const ElementSet& h) const {
  const GenChar ind = perm_char(h);
  const Integer index = to_integer(group_->order() / h.count());
  return ind - determinant(ind) - trivial() * (index - 1);
}

std::vector<std::uint64_t> GroupContext::coset_sign_exponents(const ElementSet& h) const {
  const PermGroup& g = *group_;
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> coset(g.size(), kUnset);
  std::vector<std::uint32_t> reps;
  const auto members = h.members();
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto y : members) coset[g.mul(y, x)] = id;  // right coset Hx
  }
  const std::uint64_t n = table()->conductor();
  std::vector<std::uint64_t> out;
  for (const auto& c : g.classes()) {
    std::vector<Point> images(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) images[i] = coset[g.mul(reps[i], c.representative)];
    out.push_back(Permutation(std::move(images)).sign() == 1 ? 0 : n / 2);
  }
  return out;
}

}  // namespace parind
