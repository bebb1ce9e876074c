#include "parind/group_structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "parind/integer.hpp"

namespace parind {

std::vector<std::uint32_t> greedy_generators(const PermGroup& g, const ElementSet& set) {
  std::vector<std::uint32_t> gens;
  ElementSet generated = g.closure(gens);
  const std::size_t target = set.count();
  set.for_each([&](std::uint32_t x) {
    if (generated.count() == target || generated.test(x)) return;
    gens.push_back(x);
    generated = g.closure(gens);
  });
  return gens;
}

SubgroupRecord make_subgroup_record(const PermGroup& g, const ElementSet& set) {
  SubgroupRecord r;
  for (auto x : greedy_generators(g, set)) r.generators.push_back(g.element(x));
  r.order = set.count();
  r.elements = set;
  r.normal = is_normal(g, set);
  return r;
}

namespace {

std::vector<ElementSet> conjugacy_orbit(const PermGroup& g, const ElementSet& s) {
  std::vector<ElementSet> orbit{s};
  std::unordered_map<ElementSet, int, ElementSetHash> seen{{s, 0}};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t gen = 0; gen < g.generator_indices().size(); ++gen) {
      ElementSet img(g.size());
      orbit[i].for_each([&](std::uint32_t a) { img.set(g.conjugate_by_generator(a, gen)); });
      if (seen.emplace(img, 0).second) orbit.push_back(std::move(img));
    }
  }
  return orbit;
}

}  // namespace

SubgroupLattice::SubgroupLattice(GroupPtr group, std::uint64_t order_bound) : group_(std::move(group)) {
  const PermGroup& g = *group_;
  if (g.order() > order_bound)
    throw std::length_error("group order " + std::to_string(g.order()) + " exceeds the subgroup-lattice bound " +
                            std::to_string(order_bound));
  const std::size_t n = g.size();

  std::vector<std::vector<ElementSet>> raw;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> raw_lookup;
  auto add_class = [&](const ElementSet& k) {
    const std::size_t id = raw.size();
    raw.push_back(conjugacy_orbit(g, k));
    for (const auto& c : raw.back()) raw_lookup.emplace(c, id);
  };
  add_class(g.closure({}));

  // Cyclic extension: every subgroup K is <M, x> for a maximal subgroup M of K, and M is
  // conjugate to a representative already found.
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    const ElementSet h = raw[idx].front();
    std::vector<std::uint32_t> gens = greedy_generators(g, h);
    ElementSet done = h;
    const auto h_members = h.members();
    for (std::uint32_t x = 0; x < n; ++x) {
      if (done.test(x)) continue;
      for (auto y : h_members) done.set(g.mul(y, x));
      gens.push_back(x);
      ElementSet k = g.closure(gens);
      gens.pop_back();
      if (!raw_lookup.count(k)) add_class(k);
    }
  }

  for (auto& orbit : raw) std::sort(orbit.begin(), orbit.end(), ElementSet::lex_less);
  std::vector<std::size_t> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = raw[a].front().count(), cb = raw[b].front().count();
    if (ca != cb) return ca < cb;
    return ElementSet::lex_less(raw[a].front(), raw[b].front());
  });
  for (std::size_t id = 0; id < order.size(); ++id) {
    auto& orbit = raw[order[id]];
    SubgroupRecord rec;
    for (auto x : greedy_generators(g, orbit.front())) rec.generators.push_back(g.element(x));
    rec.order = orbit.front().count();
    rec.class_id = static_cast<std::int64_t>(id);
    rec.normal = orbit.size() == 1;
    rec.elements = orbit.front();
    for (const auto& c : orbit) lookup_.emplace(c, id);
    classes_.push_back(std::move(rec));
    conjugates_.push_back(std::move(orbit));
  }
}

std::size_t SubgroupLattice::class_of(const ElementSet& subgroup) const {
  auto it = lookup_.find(subgroup);
  if (it == lookup_.end()) throw std::invalid_argument("element set is not a subgroup of the lattice's group");
  return it->second;
}

std::vector<SubgroupRecord> SubgroupLattice::normal_subgroups() const {
  std::vector<SubgroupRecord> out;
  for (const auto& r : classes_)
    if (r.normal) out.push_back(r);
  return out;
}

std::vector<ElementSet> SubgroupLattice::subgroups_of(const ElementSet& h) const {
  const std::size_t order = h.count();
  std::vector<ElementSet> out;
  for (std::size_t id = 0; id < classes_.size(); ++id) {
    if (order % classes_[id].order != 0) continue;
    for (const auto& c : conjugates_[id])
      if (c.subset_of(h)) out.push_back(c);
  }
  return out;
}

std::size_t brute_force_subgroup_class_count(const PermGroup& g) {
  const std::size_t n = g.size();
  if (n > 24) throw std::length_error("brute-force subgroup scan is limited to |G| <= 24");
  std::vector<std::uint32_t> subgroups;
  const std::uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1u);
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    const std::uint32_t mask = (rest << 1) | 1u;
    bool closed = true;
    for (std::uint32_t a = 1; a < n && closed; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (std::uint32_t b = 1; b < n; ++b) {
        if (((mask >> b) & 1u) && !((mask >> g.mul(a, b)) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) subgroups.push_back(mask & full);
  }
  std::set<std::uint32_t> canonical;
  for (auto mask : subgroups) {
    std::uint32_t best = UINT32_MAX;
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t img = 0;
      for (std::uint32_t a = 0; a < n; ++a)
        if ((mask >> a) & 1u) img |= 1u << g.conjugate(a, x);
      best = std::min(best, img);
    }
    canonical.insert(best);
  }
  return canonical.size();
}

ElementSet normalizer(const PermGroup& g, const ElementSet& h) {
  const auto gens = greedy_generators(g, h);
  ElementSet out(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    bool ok = true;
    for (auto y : gens) ok = ok && h.test(g.conjugate(y, x));
    if (ok) out.set(x);
  }
  return out;
}

bool is_normal(const PermGroup& g, const ElementSet& h) {
  for (std::size_t gen = 0; gen < g.generator_indices().size(); ++gen) {
    bool ok = true;
    h.for_each([&](std::uint32_t a) { ok = ok && h.test(g.conjugate_by_generator(a, gen)); });
    if (!ok) return false;
  }
  return true;
}

GroupPtr subgroup_group(const PermGroup& g, const ElementSet& h) {
  std::vector<Permutation> gens;
  for (auto x : greedy_generators(g, h)) gens.push_back(g.element(x));
  return std::make_shared<const PermGroup>(g.degree(), std::move(gens));
}

ElementSet translate(const PermGroup& from, const ElementSet& s, const PermGroup& to) {
  ElementSet out(to.size());
  s.for_each([&](std::uint32_t a) {
    auto idx = to.index_of(from.element(a));
    if (!idx) throw std::invalid_argument("element does not lie in the target group");
    out.set(*idx);
  });
  return out;
}

QuotientMap quotient(GroupPtr g, const SubgroupRecord& n) {
  const PermGroup& grp = *g;
  if (!is_normal(grp, n.elements)) throw std::invalid_argument("quotient requires a normal subgroup");
  const std::size_t size = grp.size();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> coset_of(size, kUnset);
  std::vector<std::uint32_t> reps;
  const auto kernel = n.elements.members();
  for (std::uint32_t x = 0; x < size; ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto k : kernel) coset_of[grp.mul(x, k)] = id;
  }
  const std::size_t degree = reps.size();
  auto action = [&](std::uint32_t g_idx) {
    std::vector<Point> images(degree);
    for (std::size_t c = 0; c < degree; ++c) images[c] = coset_of[grp.mul(reps[c], g_idx)];
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (auto gi : grp.generator_indices()) gens.push_back(action(gi));
  QuotientMap q;
  q.source = g;
  q.kernel = n;
  q.image = std::make_shared<const PermGroup>(degree, std::move(gens));
  q.element_map.resize(size);
  for (std::uint32_t x = 0; x < size; ++x) q.element_map[x] = *q.image->index_of(action(x));
  return q;
}

std::string SmallTypeTag::name() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + std::to_string(parameter);
    case Kind::KleinFour:
      return "C2xC2";
    case Kind::Dihedral8:
      return "D8";
    case Kind::Dihedral2p:
      return "D" + std::to_string(2 * parameter);
    case Kind::Other:
      break;
  }
  return "Other";
}

SmallTypeTag identify_small_type(const PermGroup& g) {
  const std::uint64_t n = g.order();
  const std::size_t size = g.size();
  for (std::uint32_t x = 0; x < size; ++x)
    if (g.element_order(x) == n) return {SmallTypeTag::Kind::Cyclic, n};
  if (n == 4 && g.exponent() == 2) return {SmallTypeTag::Kind::KleinFour, 0};
  if (n == 8) {
    // <r, s | r^4, s^2, (rs)^2> with s outside <r>.
    for (std::uint32_t r = 0; r < size; ++r) {
      if (g.element_order(r) != 4) continue;
      const ElementSet rot = g.closure(std::vector<std::uint32_t>{r});
      for (std::uint32_t s = 0; s < size; ++s) {
        if (g.element_order(s) != 2 || rot.test(s)) continue;
        const std::uint32_t rs = g.mul(r, s);
        if (g.mul(rs, rs) == 0) return {SmallTypeTag::Kind::Dihedral8, 0};
      }
    }
    return {};
  }
  if (n % 2 == 0 && n / 2 > 2 && is_prime(n / 2)) {
    const std::uint64_t p = n / 2;
    for (std::uint32_t r = 0; r < size; ++r) {
      if (g.element_order(r) != p) continue;
      for (std::uint32_t s = 0; s < size; ++s) {
        if (g.element_order(s) != 2) continue;
        if (g.mul(g.mul(s, r), s) == g.inverse(r)) return {SmallTypeTag::Kind::Dihedral2p, p};
      }
      break;
    }
  }
  return {};
}

std::optional<Hyperelementary> is_hyperelementary(const PermGroup& g) {
  const std::uint64_t n = g.order();
  if (n == 1) return Hyperelementary{2, make_subgroup_record(g, g.closure({}))};
  for (std::uint64_t p : prime_factors(n)) {
    std::uint64_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) return Hyperelementary{p, make_subgroup_record(g, g.closure({}))};
    std::unordered_map<ElementSet, int, ElementSetHash> tried;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (g.element_order(x) != m) continue;
      ElementSet c = g.closure(std::vector<std::uint32_t>{x});
      if (!tried.emplace(c, 0).second) continue;
      if (is_normal(g, c)) return Hyperelementary{p, make_subgroup_record(g, c)};
    }
  }
  return std::nullopt;
}

std::vector<Subquotient> dihedral_subquotients(const SubgroupLattice& lattice) {
  const PermGroup& g = lattice.group();
  std::vector<Subquotient> out;
  for (const auto& h : lattice.classes()) {
    const std::uint64_t ho = h.order;
    std::vector<ElementSet> candidates;
    for (auto& nset : lattice.subgroups_of(h.elements)) {
      const std::uint64_t idx = ho / nset.count();
      const bool shape = idx == 4 || idx == 8 || (idx % 2 == 0 && idx / 2 > 2 && is_prime(idx / 2));
      if (!shape) continue;
      bool normal_in_h = true;
      for (const auto& gen : h.generators) {
        const std::uint32_t y = *g.index_of(gen);
        nset.for_each([&](std::uint32_t a) { normal_in_h = normal_in_h && nset.test(g.conjugate(a, y)); });
      }
      if (normal_in_h) candidates.push_back(std::move(nset));
    }
    if (candidates.empty()) continue;
    // One representative per N_G(H)-orbit: the lexicographically smallest conjugate.
    const auto norm = normalizer(g, h.elements).members();
    std::vector<ElementSet> reps;
    for (const auto& nset : candidates) {
      ElementSet best = nset;
      for (auto x : norm) {
        ElementSet c = g.conjugate_set(nset, x);
        if (ElementSet::lex_less(c, best)) best = std::move(c);
      }
      if (std::find(reps.begin(), reps.end(), best) == reps.end()) reps.push_back(std::move(best));
    }
    std::sort(reps.begin(), reps.end(), [](const ElementSet& a, const ElementSet& b) {
      if (a.count() != b.count()) return a.count() > b.count();
      return ElementSet::lex_less(a, b);
    });
    const GroupPtr hgroup = subgroup_group(g, h.elements);
    for (const auto& nset : reps) {
      SubgroupRecord n_in_h = make_subgroup_record(*hgroup, translate(g, nset, *hgroup));
      const QuotientMap q = quotient(hgroup, n_in_h);
      const SmallTypeTag tag = identify_small_type(*q.image);
      if (!tag.is_generator_type()) continue;
      SubgroupRecord n_rec = make_subgroup_record(g, nset);
      n_rec.class_id = static_cast<std::int64_t>(lattice.class_of(nset));
      out.push_back({h, std::move(n_rec), tag});
    }
  }
  return out;
}

}  // namespace parind
