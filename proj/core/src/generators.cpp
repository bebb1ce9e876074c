#include "parind/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace parind {

std::string flavor_name(Flavor f) { return f == Flavor::Theorem12 ? "thm12" : "cor29"; }

std::optional<Flavor> parse_flavor(const std::string& s) {
  if (s == "thm12") return Flavor::Theorem12;
  if (s == "cor29") return Flavor::Corollary29;
  return std::nullopt;
}

std::string kind_name(GeneratorDesc::Kind k) {
  switch (k) {
    case GeneratorDesc::Kind::Type1:
      return "Type1";
    case GeneratorDesc::Kind::Type2:
      return "Type2";
    case GeneratorDesc::Kind::CyclicPair:
      return "CyclicPair";
    case GeneratorDesc::Kind::DihedralBasis:
      return "DihedralBasis";
  }
  return "?";
}

namespace {

std::string irr_label(std::size_t i) { return "X." + std::to_string(i + 1); }

std::string subgroup_label(const char* prefix, const SubgroupRecord& r) {
  return prefix + std::to_string(r.class_id);
}

struct Subquotient2 {
  const GroupContext* hctx;
  ElementSet n_in_h;
  const QuotientEmbedding* q;
};

Subquotient2 locate(const GroupContext& ctx, const Subquotient& sq) {
  const auto& emb = ctx.embedding(sq.h.elements);
  ElementSet n_in_h = translate(ctx.group(), sq.n.elements, emb.sub->group());
  const auto& q = emb.sub->quotient(n_in_h);
  return {emb.sub.get(), std::move(n_in_h), &q};
}

void make_ids_unique(std::vector<GeneratorDesc>& gens) {
  std::unordered_map<std::string, int> seen;
  for (auto& g : gens) {
    const int n = seen[g.id]++;
    if (n > 0) g.id += "#" + std::to_string(n + 1);
  }
}

}  // namespace

std::vector<GeneratorDesc> enumerate_type1(const GroupContext& ctx) {
  const auto& t = ctx.table();
  std::vector<GeneratorDesc> out;
  for (std::size_t i = 0; i < t->size(); ++i) {
    GenChar x = GenChar::irreducible(t, i) + GenChar::irreducible(t, t->conjugate(i)) -
                ctx.trivial() * to_integer(2 * t->degree(i));
    if (x.is_zero()) continue;
    GeneratorDesc d;
    d.kind = GeneratorDesc::Kind::Type1;
    d.id = "T1:" + irr_label(i);
    d.irreducible = i;
    d.h = ctx.lattice().at(ctx.lattice().top());
    d.on_h = x;
    d.expansion = std::move(x);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<GeneratorDesc> enumerate_type2(const GroupContext& ctx) {
  std::vector<GeneratorDesc> out;
  std::vector<Subquotient> sqs = ctx.subquotients();
  std::stable_sort(sqs.begin(), sqs.end(), [](const Subquotient& a, const Subquotient& b) {
    if (a.h.order != b.h.order) return a.h.order > b.h.order;
    return a.h.class_id < b.h.class_id;
  });
  for (const auto& sq : sqs) {
    const auto loc = locate(ctx, sq);
    const auto& qt = loc.q->quotient->table();
    std::vector<std::pair<std::string, GenChar>> taus;
    std::vector<std::size_t> linear;
    for (std::size_t i = 0; i < qt->size(); ++i)
      if (qt->is_linear(i)) linear.push_back(i);
    for (std::size_t a = 0; a < linear.size(); ++a)
      for (std::size_t b = a; b < linear.size(); ++b)
        taus.emplace_back(irr_label(linear[a]) + "+" + irr_label(linear[b]),
                          GenChar::irreducible(qt, linear[a]) + GenChar::irreducible(qt, linear[b]));
    for (std::size_t i = 0; i < qt->size(); ++i)
      if (qt->degree(i) == 2) taus.emplace_back(irr_label(i), GenChar::irreducible(qt, i));
    for (auto& [label, tau] : taus) {
      const GenChar infl = loc.hctx->inflate(loc.n_in_h, tau);
      GenChar x = infl - loc.hctx->trivial() - determinant(infl);
      GenChar exp = ctx.induce(sq.h.elements, x);
      if (exp.is_zero()) continue;
      GeneratorDesc d;
      d.kind = GeneratorDesc::Kind::Type2;
      d.id = "T2:" + subgroup_label("H", sq.h) + "/" + subgroup_label("N", sq.n) + "/" + sq.tag.name() + "/" + label;
      d.h = sq.h;
      d.n = sq.n;
      d.tag = sq.tag;
      d.on_h = infl;
      d.expansion = std::move(exp);
      out.push_back(std::move(d));
    }
  }
  make_ids_unique(out);
  return out;
}

std::vector<std::vector<Integer>> real_det_trivial_lattice(const CharacterTable& t) {
  const std::size_t k = t.size();
  const std::uint64_t e = t.conductor();
  std::vector<std::vector<Integer>> orbit_vectors;
  for (std::size_t i = 0; i < k; ++i) {
    if (t.conjugate(i) < i) continue;
    std::vector<Integer> v(k);
    v[i] += 1;
    if (t.conjugate(i) != i) v[t.conjugate(i)] += 1;
    orbit_vectors.push_back(std::move(v));
  }
  // Rows: [degree, det exponents] per orbit vector, then the modulus rows e * unit.
  const std::size_t m = orbit_vectors.size();
  IntMatrix a(m + k, 1 + k);
  for (std::size_t r = 0; r < m; ++r) {
    Integer deg = 0;
    std::vector<Integer> det(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (orbit_vectors[r][i] == 0) continue;
      deg += orbit_vectors[r][i] * to_integer(t.degree(i));
      for (std::size_t c = 0; c < k; ++c) det[c] += orbit_vectors[r][i] * to_integer(t.determinant_exponents(i)[c]);
    }
    a(r, 0) = deg;
    for (std::size_t c = 0; c < k; ++c) a(r, 1 + c) = det[c];
  }
  for (std::size_t c = 0; c < k; ++c) a(m + c, 1 + c) = to_integer(e);
  const HnfResult h = hnf(a);
  RowLattice basis(k);
  for (std::size_t r = h.rank; r < h.U.rows(); ++r) {
    std::vector<Integer> v(k);
    for (std::size_t j = 0; j < m; ++j)
      if (h.U(r, j) != 0)
        for (std::size_t i = 0; i < k; ++i) v[i] += h.U(r, j) * orbit_vectors[j][i];
    if (!is_zero(v)) basis.add_row(v);
  }
  basis.reduce();
  return basis.basis();
}

GeneratorFamily::GeneratorFamily(ContextPtr ctx, Flavor flavor, std::vector<GeneratorDesc> generators)
    : ctx_(std::move(ctx)), flavor_(flavor), gens_(std::move(generators)), lattice_(ctx_->table()->size()) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!by_id_.emplace(gens_[i].id, i).second) throw std::logic_error("duplicate generator id " + gens_[i].id);
    lattice_.add_row(gens_[i].expansion.coeffs());
  }
}

std::optional<std::size_t> GeneratorFamily::find(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GeneratorFamily::find_expansion(const GenChar& g) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].expansion.coeffs() == g.coeffs()) return i;
  return std::nullopt;
}

namespace {

std::vector<GeneratorDesc> dedupe(std::vector<GeneratorDesc> gens) {
  std::set<std::vector<Integer>> seen;
  std::vector<GeneratorDesc> out;
  for (auto& g : gens) {
    if (g.expansion.is_zero()) continue;
    if (!seen.insert(g.expansion.coeffs()).second) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

GeneratorFamily theorem12_family(ContextPtr ctx) {
  auto gens = enumerate_type1(*ctx);
  auto t2 = enumerate_type2(*ctx);
  gens.insert(gens.end(), std::make_move_iterator(t2.begin()), std::make_move_iterator(t2.end()));
  return GeneratorFamily(ctx, Flavor::Theorem12, dedupe(std::move(gens)));
}

GeneratorFamily cor29_family(ContextPtr ctx) {
  std::vector<GeneratorDesc> gens;
  const auto& lat = ctx->lattice();
  for (std::size_t id = lat.size(); id-- > 0;) {
    const auto& h = lat.at(id);
    const auto& hc = *ctx->embedding(h.elements).sub;
    const auto& ht = hc.table();
    for (std::size_t i = 1; i < ht->size(); ++i) {
      if (!ht->is_linear(i) || ht->conjugate(i) < i) continue;
      GenChar x = GenChar::irreducible(ht, i) + GenChar::irreducible(ht, ht->conjugate(i)) - hc.trivial() * 2;
      GeneratorDesc d;
      d.kind = GeneratorDesc::Kind::CyclicPair;
      d.id = "C29:" + subgroup_label("H", h) + "/" + irr_label(i);
      d.h = h;
      d.expansion = ctx->induce(h.elements, x);
      d.on_h = std::move(x);
      gens.push_back(std::move(d));
    }
  }
  std::vector<Subquotient> sqs = ctx->subquotients();
  std::stable_sort(sqs.begin(), sqs.end(), [](const Subquotient& a, const Subquotient& b) {
    if (a.h.order != b.h.order) return a.h.order > b.h.order;
    return a.h.class_id < b.h.class_id;
  });
  for (const auto& sq : sqs) {
    const auto loc = locate(*ctx, sq);
    const auto& qt = loc.q->quotient->table();
    const auto basis = real_det_trivial_lattice(*qt);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      GenChar infl = loc.hctx->inflate(loc.n_in_h, GenChar(qt, basis[j]));
      GeneratorDesc d;
      d.kind = GeneratorDesc::Kind::DihedralBasis;
      d.id = "C29:" + subgroup_label("H", sq.h) + "/" + subgroup_label("N", sq.n) + "/" + sq.tag.name() + "/b" +
             std::to_string(j + 1);
      d.h = sq.h;
      d.n = sq.n;
      d.tag = sq.tag;
      d.expansion = ctx->induce(sq.h.elements, infl);
      d.on_h = std::move(infl);
      gens.push_back(std::move(d));
    }
  }
  make_ids_unique(gens);
  return GeneratorFamily(ctx, Flavor::Corollary29, dedupe(std::move(gens)));
}

GeneratorFamily make_family(ContextPtr ctx, Flavor flavor) {
  return flavor == Flavor::Theorem12 ? theorem12_family(std::move(ctx)) : cor29_family(std::move(ctx));
}

}  // namespace parind
