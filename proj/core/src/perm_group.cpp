#include "parind/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "parind/integer.hpp"

namespace parind {

namespace {
constexpr std::uint64_t kCayleyTableLimit = 2048;
}

struct PermGroup::Cache {
  std::once_flag elements_once;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  std::vector<std::uint32_t> cayley;  // row-major, only for small groups
  std::vector<std::uint32_t> inverses;
  std::vector<std::uint32_t> orders;
  std::vector<std::uint32_t> generator_indices;
  std::vector<std::vector<std::uint32_t>> generator_conjugation;
  std::uint64_t exponent = 1;

  std::once_flag classes_once;
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint32_t> power_classes;  // classes x exponent
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  if (degree == 0) throw std::invalid_argument("permutation groups need degree at least 1");
  for (auto& g : generators) {
    if (g.degree() > degree) throw std::invalid_argument("generator degree exceeds group degree");
    if (g.degree() < degree) g = g.extended(degree);
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
      generators_.push_back(std::move(g));
  }
  schreier_sims();
}

void PermGroup::build_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.position.assign(degree_, -1);
  level.transversal.assign(1, Permutation(degree_));
  level.position[level.base_point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    for (const auto& s : level.strong) {
      const Point img = s[level.orbit[i]];
      if (level.position[img] >= 0) continue;
      level.position[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      level.transversal.push_back(level.transversal[i] * s);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Point b = p[levels_[l].base_point];
    const std::int32_t pos = levels_[l].position[b];
    if (pos < 0) return {std::move(p), l};
    p = p * levels_[l].transversal[static_cast<std::size_t>(pos)].inverse();
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
  auto first_moved = [](const Permutation& p) {
    for (std::size_t i = 0; i < p.degree(); ++i)
      if (p[i] != i) return static_cast<Point>(i);
    return Point{0};
  };
  for (const auto& g : generators_) {
    bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](Point b) { return g[b] == b; });
    if (fixes_base) base_.push_back(first_moved(g));
  }
  levels_.resize(base_.size());
  for (std::size_t l = 0; l < base_.size(); ++l) {
    levels_[l].base_point = base_[l];
    for (const auto& g : generators_) {
      bool fixes = true;
      for (std::size_t j = 0; j < l; ++j) fixes = fixes && g[base_[j]] == base_[j];
      if (fixes) levels_[l].strong.push_back(g);
    }
  }
  for (auto& level : levels_) build_orbit(level);

  std::int64_t i = static_cast<std::int64_t>(levels_.size()) - 1;
  while (i >= 0) {
    auto& level = levels_[static_cast<std::size_t>(i)];
    build_orbit(level);
    bool restarted = false;
    for (std::size_t o = 0; !restarted && o < level.orbit.size(); ++o) {
      for (std::size_t s = 0; !restarted && s < level.strong.size(); ++s) {
        const Permutation& x = level.strong[s];
        const Point img = x[level.orbit[o]];
        const Permutation h = level.transversal[o] * x *
                              level.transversal[static_cast<std::size_t>(level.position[img])].inverse();
        auto [residue, j] = strip(h, static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && residue.is_identity()) continue;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base_point = first_moved(residue);
          base_.push_back(fresh.base_point);
          levels_.push_back(std::move(fresh));
          build_orbit(levels_.back());
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) levels_[l].strong.push_back(residue);
        i = static_cast<std::int64_t>(j);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& level : levels_) {
    const auto n = static_cast<std::uint64_t>(level.orbit.size());
    if (order_ > UINT64_MAX / n) throw std::overflow_error("group order exceeds 64 bits");
    order_ *= n;
  }
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) {
    if (p.degree() > degree_) {
      for (std::size_t i = degree_; i < p.degree(); ++i)
        if (p[i] != i) return false;
      std::vector<Point> imgs(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(degree_));
      return contains(Permutation(std::move(imgs)));
    }
    return contains(p.extended(degree_));
  }
  auto [residue, j] = strip(p, 0);
  return j == levels_.size() && residue.is_identity();
}

const PermGroup::Cache& PermGroup::cache() const {
  std::call_once(cache_->elements_once, [this] {
    if (order_ > kMaxEnumeratedOrder) throw std::length_error("group too large to enumerate elements");
    auto& c = *cache_;
    std::vector<Permutation> elems{Permutation(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(elems.size() * levels_[l].transversal.size());
      for (const auto& e : elems)
        for (const auto& t : levels_[l].transversal) next.push_back(e * t);
      elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    c.elements = std::move(elems);
    const auto n = c.elements.size();
    c.index.reserve(n * 2);
    for (std::uint32_t i = 0; i < n; ++i) c.index.emplace(c.elements[i], i);
    auto lookup = [&c](const Permutation& p) { return c.index.at(p); };
    if (n <= kCayleyTableLimit) {
      c.cayley.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) c.cayley[a * n + b] = lookup(c.elements[a] * c.elements[b]);
    }
    c.inverses.resize(n);
    c.orders.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      c.inverses[i] = lookup(c.elements[i].inverse());
      c.orders[i] = static_cast<std::uint32_t>(c.elements[i].order());
      c.exponent = lcm_u64(c.exponent, c.orders[i]);
    }
    for (const auto& g : generators_) c.generator_indices.push_back(lookup(g));
    for (const auto& g : generators_) {
      const Permutation gi = g.inverse();
      std::vector<std::uint32_t> conj(n);
      for (std::uint32_t a = 0; a < n; ++a) conj[a] = lookup(gi * c.elements[a] * g);
      c.generator_conjugation.push_back(std::move(conj));
    }
  });
  return *cache_;
}

const std::vector<Permutation>& PermGroup::elements() const { return cache().elements; }

std::optional<std::uint32_t> PermGroup::index_of(const Permutation& p) const {
  const auto& c = cache();
  Permutation q = p;
  if (q.degree() < degree_) q = q.extended(degree_);
  auto it = c.index.find(q);
  if (it == c.index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t PermGroup::mul(std::uint32_t a, std::uint32_t b) const {
  const auto& c = cache();
  if (!c.cayley.empty()) return c.cayley[static_cast<std::size_t>(a) * c.elements.size() + b];
  return c.index.at(c.elements[a] * c.elements[b]);
}

std::uint32_t PermGroup::inverse(std::uint32_t a) const { return cache().inverses[a]; }
std::uint32_t PermGroup::element_order(std::uint32_t a) const { return cache().orders[a]; }

std::uint32_t PermGroup::power(std::uint32_t a, std::int64_t k) const {
  const std::int64_t ord = element_order(a);
  std::int64_t e = ((k % ord) + ord) % ord;
  std::uint32_t result = 0;
  std::uint32_t base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

const std::vector<std::uint32_t>& PermGroup::generator_indices() const { return cache().generator_indices; }

std::uint32_t PermGroup::conjugate_by_generator(std::uint32_t a, std::size_t gen) const {
  return cache().generator_conjugation[gen][a];
}

std::uint32_t PermGroup::conjugate(std::uint32_t a, std::uint32_t g) const { return mul(mul(inverse(g), a), g); }

std::uint64_t PermGroup::exponent() const { return cache().exponent; }

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

const PermGroup::Cache& PermGroup::classes_cache() const {
  const auto& base = cache();
  std::call_once(cache_->classes_once, [this, &base] {
    auto& c = *cache_;
    const auto n = static_cast<std::uint32_t>(base.elements.size());
    constexpr std::uint32_t kUnset = UINT32_MAX;
    std::vector<std::uint32_t> raw_class(n, kUnset);
    std::vector<ConjugacyClass> raw;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (raw_class[a] != kUnset) continue;
      const auto id = static_cast<std::uint32_t>(raw.size());
      std::vector<std::uint32_t> orbit{a};
      raw_class[a] = id;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (std::size_t g = 0; g < base.generator_conjugation.size(); ++g) {
          const std::uint32_t b = base.generator_conjugation[g][orbit[k]];
          if (raw_class[b] == kUnset) {
            raw_class[b] = id;
            orbit.push_back(b);
          }
        }
      }
      raw.push_back({a, orbit.size(), base.orders[a]});
    }
    std::vector<std::uint32_t> perm(raw.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t x, std::uint32_t y) {
      if (raw[x].element_order != raw[y].element_order) return raw[x].element_order < raw[y].element_order;
      return raw[x].representative < raw[y].representative;
    });
    std::vector<std::uint32_t> rank(raw.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) {
      rank[perm[i]] = i;
      c.classes.push_back(raw[perm[i]]);
    }
    c.class_of.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) c.class_of[a] = rank[raw_class[a]];
    const auto r = c.classes.size();
    c.inverse_class.resize(r);
    const std::uint64_t e = base.exponent;
    c.power_classes.resize(r * e);
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint32_t rep = c.classes[k].representative;
      c.inverse_class[k] = c.class_of[base.inverses[rep]];
      std::uint32_t x = 0;
      for (std::uint64_t j = 0; j < e; ++j) {
        c.power_classes[k * e + j] = c.class_of[x];
        x = mul(x, rep);
      }
    }
  });
  return *cache_;
}

const std::vector<ConjugacyClass>& PermGroup::classes() const { return classes_cache().classes; }
std::uint32_t PermGroup::class_of(std::uint32_t element) const { return classes_cache().class_of[element]; }
std::uint32_t PermGroup::inverse_class(std::uint32_t cls) const { return classes_cache().inverse_class[cls]; }

std::uint32_t PermGroup::power_class(std::uint32_t cls, std::int64_t k) const {
  const auto& c = classes_cache();
  const auto e = static_cast<std::int64_t>(c.exponent);
  const std::int64_t j = ((k % e) + e) % e;
  return c.power_classes[static_cast<std::size_t>(cls) * static_cast<std::size_t>(e) + static_cast<std::size_t>(j)];
}

ElementSet PermGroup::closure(std::span<const std::uint32_t> gens) const {
  ElementSet set(size());
  std::vector<std::uint32_t> list{0};
  set.set(0);
  std::vector<std::uint32_t> nontrivial;
  for (auto g : gens)
    if (g != 0) nontrivial.push_back(g);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (auto g : nontrivial) {
      const std::uint32_t x = mul(list[i], g);
      if (!set.test(x)) {
        set.set(x);
        list.push_back(x);
      }
    }
  }
  return set;
}

ElementSet PermGroup::full_set() const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i) s.set(i);
  return s;
}

ElementSet PermGroup::conjugate_set(const ElementSet& s, std::uint32_t g) const {
  ElementSet out(size());
  const std::uint32_t gi = inverse(g);
  s.for_each([&](std::uint32_t a) { out.set(mul(mul(gi, a), g)); });
  return out;
}

}  // namespace parind
