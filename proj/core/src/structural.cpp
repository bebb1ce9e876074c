#include "parind/structural.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "parind/s_group.hpp"

namespace parind {

namespace {

constexpr int kMaxDepth = 256;

std::string irr_label(std::size_t i) { return "X." + std::to_string(i + 1); }

std::string order_label(const GroupContext& c) { return "|G|=" + std::to_string(c.group().order()); }

ElementSet join(const PermGroup& g, const ElementSet& a, const ElementSet& b) {
  auto gens = greedy_generators(g, a);
  const auto more = greedy_generators(g, b);
  gens.insert(gens.end(), more.begin(), more.end());
  return g.closure(gens);
}

ElementSet join_element(const PermGroup& g, const ElementSet& a, std::uint32_t x) {
  auto gens = greedy_generators(g, a);
  gens.push_back(x);
  return g.closure(gens);
}

bool normalizes(const PermGroup& g, const ElementSet& v, const ElementSet& h) {
  for (auto x : greedy_generators(g, v))
    if (!(g.conjugate_set(h, x) == h)) return false;
  return true;
}

struct Candidate {
  DecompositionNode::LeafType type;
  std::size_t irreducible;
  std::string label;
  GenChar unit;
};

NodePtr make_leaf(const ContextPtr& ctx, const Candidate& c, const Integer& mult) {
  auto n = std::make_shared<DecompositionNode>();
  n->kind = "Leaf";
  n->context = ctx;
  n->leaf = c.type;
  n->generator = c.label;
  n->irreducible = c.irreducible;
  n->unit = c.unit;
  n->multiplicity = mult;
  n->value = c.unit * mult;
  return n;
}

Candidate type1_candidate(const GroupContext& ctx, std::size_t i) {
  const auto& t = ctx.table();
  GenChar unit = GenChar::irreducible(t, i) + GenChar::irreducible(t, t->conjugate(i)) -
                 ctx.trivial() * to_integer(2 * t->degree(i));
  return {DecompositionNode::LeafType::Type1, i, "T1:" + irr_label(i), std::move(unit)};
}

std::vector<Candidate> type1_candidates(const GroupContext& ctx, bool linear_only) {
  const auto& t = ctx.table();
  std::vector<Candidate> out;
  for (std::size_t i = 1; i < t->size(); ++i) {
    if (t->conjugate(i) < i || (linear_only && !t->is_linear(i))) continue;
    out.push_back(type1_candidate(ctx, i));
  }
  return out;
}

// e + e' - e*e' - 1 for distinct characters e, e' of order 2: the twist by the regular
// character of G/(ker e n ker e') = C2 x C2.
std::vector<Candidate> klein_candidates(const GroupContext& ctx) {
  const auto& t = ctx.table();
  const auto eps = order2_linear_chars(*t);
  std::vector<Candidate> out;
  for (std::size_t a = 0; a < eps.size(); ++a)
    for (std::size_t b = a + 1; b < eps.size(); ++b) {
      const GenChar ea = GenChar::irreducible(t, eps[a]), eb = GenChar::irreducible(t, eps[b]);
      out.push_back({DecompositionNode::LeafType::Type2, 0,
                     "T2:C2xC2/" + irr_label(eps[a]) + "+" + irr_label(eps[b]),
                     ea + eb - tensor(ea, eb) - ctx.trivial()});
    }
  return out;
}

GenChar children_sum(const DecompositionNode& n) {
  GenChar sum = n.context->zero();
  for (const auto& [w, c] : n.children) {
    GenChar v = c->value;
    if (n.kind == "Induced") v = n.context->induce(n.link, v);
    if (n.kind == "Inflated") v = n.context->inflate(n.link, v);
    sum += v * w;
  }
  return sum;
}

class Decomposer {
 public:
  NodePtr decompose(const ContextPtr& ctx, const GenChar& rho) {
    Guard guard(depth_);
    const PermGroup& g = ctx->group();
    const std::uint64_t order = g.order();
    if (order % 2 == 1) {
      auto n = node(ctx, "Thm2.8.case1", "odd order");
      if (!rho.is_zero()) add(n, 1, solve(ctx, "Lemma2.4", rho, type1_candidates(*ctx, false), "real part is tau + conj(tau)"));
      return finish(n, rho);
    }
    if ((order & (order - 1)) == 0) {
      auto n = node(ctx, "Thm2.8.case2", "2-group");
      if (!rho.is_zero())
        add(n, 1, lemma25(ctx, rho, [&](const ElementSet& h) { return rho_two_group(ctx, h); }));
      return finish(n, rho);
    }
    if (auto hy = is_hyperelementary(g)) {
      auto n = node(ctx, "Thm2.8.case3", "hyperelementary, p=" + std::to_string(hy->prime));
      if (!rho.is_zero()) add(n, 1, prop26(ctx, rho, *hy));
      return finish(n, rho);
    }
    auto n = node(ctx, "Thm2.8.case4", "general");
    if (!rho.is_zero()) {
      auto s = node(ctx, "Lemma2.7", "Solomon induction over hyperelementary subgroups");
      for (const auto& [h, k] : solomon_coefficients(*ctx)) {
        const GenChar r = ctx->restrict(h.elements, rho);
        if (r.is_zero()) continue;
        add(s, k, induced(ctx, h.elements, decompose(ctx->embedding(h.elements).sub, r)));
      }
      add(n, 1, finish(s, rho));
    }
    return finish(n, rho);
  }

 private:
  struct Guard {
    explicit Guard(int& d) : d_(d) {
      if (++d_ > kMaxDepth) throw StructuralError("recursion depth exceeded");
    }
    ~Guard() { --d_; }
    int& d_;
  };

  static NodePtr node(const ContextPtr& ctx, std::string kind, std::string detail) {
    auto n = std::make_shared<DecompositionNode>();
    n->kind = std::move(kind);
    n->detail = order_label(*ctx) + (detail.empty() ? "" : ", " + detail);
    n->context = ctx;
    return n;
  }

  static void add(const NodePtr& n, const Integer& w, NodePtr child) {
    if (child && w != 0) n->children.emplace_back(w, std::move(child));
  }

  static NodePtr finish(const NodePtr& n, const GenChar& expected) {
    n->value = children_sum(*n);
    if (!(n->value == expected))
      throw StructuralError(n->kind + " (" + n->detail + "): children sum to " + n->value.to_string() +
                            ", expected " + expected.to_string());
    return n;
  }

  static NodePtr induced(const ContextPtr& ctx, const ElementSet& h, NodePtr child) {
    auto n = node(ctx, "Induced", "from a subgroup of order " + std::to_string(h.count()));
    n->link = h;
    n->children.emplace_back(1, child);
    n->value = children_sum(*n);
    return n;
  }

  static NodePtr inflated(const ContextPtr& ctx, const ElementSet& k, NodePtr child) {
    auto n = node(ctx, "Inflated", "from the quotient by a normal subgroup of order " + std::to_string(k.count()));
    n->link = k;
    n->children.emplace_back(1, child);
    n->value = children_sum(*n);
    return n;
  }

  static NodePtr solve(const ContextPtr& ctx, const char* kind, const GenChar& target,
                       const std::vector<Candidate>& cands, const std::string& detail) {
    auto n = node(ctx, kind, detail);
    n->lemma_scoped = true;
    RowLattice lat(ctx->table()->size());
    for (const auto& c : cands) lat.add_row(c.unit.coeffs());
    const auto x = lat.solve(target.coeffs());
    if (!x) throw StructuralError(std::string(kind) + ": " + target.to_string() + " is not in the span of its generators");
    for (std::size_t i = 0; i < cands.size(); ++i)
      if ((*x)[i] != 0) add(n, 1, make_leaf(ctx, cands[i], (*x)[i]));
    return finish(n, target);
  }

  // A combination of linear characters lying in S_G.
  static NodePtr lemma23(const ContextPtr& ctx, const GenChar& lambda) {
    const auto& t = ctx->table();
    for (std::size_t i = 0; i < t->size(); ++i)
      if (lambda.coeff(i) != 0 && !t->is_linear(i))
        throw StructuralError("remainder " + lambda.to_string() + " is not a sum of linear characters");
    auto cands = type1_candidates(*ctx, true);
    auto klein = klein_candidates(*ctx);
    cands.insert(cands.end(), klein.begin(), klein.end());
    return solve(ctx, "Lemma2.3", lambda, cands, "sum of linear characters");
  }

  // Writes rho = sum n_H rho_H + (linear part) and decomposes each rho_H with `rho_of`.
  NodePtr lemma25(const ContextPtr& ctx, const GenChar& rho, const std::function<NodePtr(const ElementSet&)>& rho_of) {
    auto n = node(ctx, "Lemma2.5", "rho = sum n_H rho_H + linear");
    const auto& lat = ctx->lattice();
    for (std::size_t id = 0; id < lat.size(); ++id)
      if (ctx->rho(lat.at(id).elements) == rho) {
        add(n, 1, rho_of(lat.at(id).elements));
        return finish(n, rho);
      }
    const auto coeffs = permutation_coefficients(*ctx, rho);
    if (!coeffs) throw StructuralError("not a virtual permutation character: " + rho.to_string());
    GenChar rest = rho;
    for (std::size_t id = 0; id < lat.size(); ++id) {
      const Integer& k = (*coeffs)[id];
      if (k == 0) continue;
      const GenChar r = ctx->rho(lat.at(id).elements);
      if (r.is_zero()) continue;
      add(n, k, rho_of(lat.at(id).elements));
      rest -= r * k;
    }
    if (!rest.is_zero()) add(n, 1, lemma23(ctx, rest));
    return finish(n, rho);
  }

  // Adds the linear remainder target - (children so far) and closes the node.
  static NodePtr close_with_linear(const NodePtr& n, const GenChar& target) {
    const GenChar rest = target - children_sum(*n);
    if (!rest.is_zero()) add(n, 1, lemma23(n->context, rest));
    return finish(n, target);
  }

  std::optional<ElementSet> overgroup(const GroupContext& ctx, const ElementSet& h, std::uint64_t order) {
    const auto& lat = ctx.lattice();
    for (std::size_t id = 0; id < lat.size(); ++id) {
      if (lat.at(id).order != order) continue;
      for (const auto& c : lat.conjugates(id))
        if (h.subset_of(c)) return c;
    }
    return std::nullopt;
  }

  // rho_H in a 2-group, by induction on [G:H].
  NodePtr rho_two_group(const ContextPtr& ctx, const ElementSet& h) {
    Guard guard(depth_);
    const GenChar target = ctx->rho(h);
    if (target.is_zero()) return nullptr;
    const PermGroup& g = ctx->group();
    const std::uint64_t hs = h.count();
    const auto u = overgroup(*ctx, h, 2 * hs);
    const auto v = u ? overgroup(*ctx, *u, 4 * hs) : std::nullopt;
    if (!u || !v) throw StructuralError("no chain H < U < V in a 2-group");
    if (normalizes(g, *v, h)) {
      bool cyclic = false;
      v->for_each([&](std::uint32_t x) { cyclic = cyclic || !h.test(g.mul(x, x)); });
      if (cyclic) {
        auto n = node(ctx, "Thm2.8.case2", "C4 chain: Ind_H 1 = Ind_U 1 + tau + conj(tau)");
        const auto& ev = ctx->embedding(*v);
        const ElementSet hv = translate(g, h, ev.sub->group());
        const auto& q = ev.sub->quotient(hv);
        const auto& qt = q.quotient->table();
        std::size_t faithful = qt->size();
        for (std::size_t i = 0; i < qt->size(); ++i)
          if (qt->is_linear(i) && linear_order(*qt, i) == 4) faithful = i;
        if (faithful == qt->size()) throw StructuralError("V/H has no character of order 4");
        const GenChar tau = ctx->induce(*v, ev.sub->inflate(hv, GenChar::irreducible(qt, faithful)));
        if (!(ctx->perm_char(h) == ctx->perm_char(*u) + tau + tau.conj()))
          throw StructuralError("C4 chain identity failed");
        add(n, 1, rho_two_group(ctx, *u));
        for (std::size_t i = 1; i < tau.size(); ++i)
          if (tau.coeff(i) != 0) add(n, 1, make_leaf(ctx, type1_candidate(*ctx, i), tau.coeff(i)));
        return close_with_linear(n, target);
      }
      auto n = node(ctx, "Thm2.8.case2", "Klein chain: Ind_H 1 = Ind_U 1 + Ind_U' 1 + Ind_U'' 1 - 2 Ind_V 1");
      std::vector<ElementSet> mids;
      v->for_each([&](std::uint32_t x) {
        if (h.test(x)) return;
        ElementSet m = join_element(g, h, x);
        for (const auto& e : mids)
          if (e == m) return;
        mids.push_back(std::move(m));
      });
      if (mids.size() != 3) throw StructuralError("V/H is not a Klein four-group");
      for (const auto& m : mids) add(n, 1, rho_two_group(ctx, m));
      add(n, -2, rho_two_group(ctx, *v));
      return close_with_linear(n, target);
    }
    auto n = node(ctx, "Thm2.8.case2",
                  "D8 chain: Ind_H 1 = Ind_V (sigma - 1 - det sigma) + Ind_U 1 + Ind_U' 1, V/H0 = D8");
    ElementSet h0 = h;
    v->for_each([&](std::uint32_t x) { h0 = h0 & g.conjugate_set(h, x); });
    if (h0.count() * 2 != hs) throw StructuralError("core of H in V has index other than 2");
    const auto& ev = ctx->embedding(*v);
    const ElementSet h0v = translate(g, h0, ev.sub->group());
    const auto& q = ev.sub->quotient(h0v);
    if (identify_small_type(q.quotient->group()).kind != SmallTypeTag::Kind::Dihedral8)
      throw StructuralError("V/H0 is not dihedral of order 8");
    const auto& qt = q.quotient->table();
    std::size_t sigma = qt->size();
    for (std::size_t i = 0; i < qt->size(); ++i)
      if (qt->degree(i) == 2) sigma = i;
    const GenChar infl = ev.sub->inflate(h0v, GenChar::irreducible(qt, sigma));
    const GenChar twist = ctx->induce(*v, infl - ev.sub->trivial() - determinant(infl));
    std::optional<ElementSet> u2;
    v->for_each([&](std::uint32_t x) {
      if (!u2 && !h0.test(g.mul(x, x))) u2 = join_element(g, h0, x);
    });
    if (!u2 || !(ctx->perm_char(h) == twist + ctx->perm_char(*u) + ctx->perm_char(*u2)))
      throw StructuralError("D8 chain identity failed");
    add(n, 1, make_leaf(ctx, {DecompositionNode::LeafType::Type2, 0, "T2:D8/" + irr_label(sigma), twist}, 1));
    add(n, 1, rho_two_group(ctx, *u));
    add(n, 1, rho_two_group(ctx, *u2));
    return close_with_linear(n, target);
  }

  NodePtr prop26(const ContextPtr& ctx, const GenChar& rho, const Hyperelementary& hy) {
    const PermGroup& g = ctx->group();
    const std::uint64_t n_order = hy.cyclic_normal.order;
    std::uint64_t q = 0;
    for (auto p : prime_factors(n_order))
      if (p != 2) q = p;
    if (q == 0) {
      // The 2-Sylow subgroup is normal and cyclic with an odd complement, so G = N x G0.
      return solve(ctx, "Prop2.6.p2", rho, type1_candidates(*ctx, false), "normal cyclic 2-Sylow");
    }
    ElementSet v(g.size());
    hy.cyclic_normal.elements.for_each([&](std::uint32_t x) {
      if (q % g.element_order(x) == 0) v.set(x);
    });
    return lemma25(ctx, rho, [&, v, q](const ElementSet& h) { return prop26_rho(ctx, h, v, q); });
  }

  NodePtr prop26_rho(const ContextPtr& ctx, const ElementSet& h, const ElementSet& v, std::uint64_t q) {
    Guard guard(depth_);
    const GenChar target = ctx->rho(h);
    if (target.is_zero()) return nullptr;
    const PermGroup& g = ctx->group();
    const std::string vq = "V=C" + std::to_string(q);
    if (v.subset_of(h)) {
      auto n = node(ctx, "Prop2.6.case1", vq + " inside H: inflate from G/V");
      const auto& qe = ctx->quotient(v);
      ElementSet hbar(qe.quotient->group().size());
      h.for_each([&](std::uint32_t x) { hbar.set(qe.map.element_map[x]); });
      add(n, 1, inflated(ctx, v, decompose(qe.quotient, qe.quotient->rho(hbar))));
      return finish(n, target);
    }
    const ElementSet vh = join(g, h, v);
    if (vh.count() != g.size()) {
      auto n = node(ctx, "Prop2.6.case2", vq + ", VH proper: induce rho_0 from VH");
      const auto& ek = ctx->embedding(vh);
      const ElementSet hk = translate(g, h, ek.sub->group());
      const GenChar rho0 = ek.sub->rho(hk);
      const GenChar delta = determinant(ek.sub->perm_char(hk));
      const Integer idx = to_integer(vh.count() / h.count());
      // det Ind_H^{VH} 1 is trivial, or equals Ind_{M}^{VH} 1 - 1 with M = ker det = VH'.
      std::optional<ElementSet> m;
      if (!(delta == ek.sub->trivial())) {
        const auto& kt = ek.sub->table();
        const std::size_t d = static_cast<std::size_t>(std::find_if(delta.coeffs().begin(), delta.coeffs().end(),
                                                                    [](const Integer& c) { return c != 0; }) -
                                                       delta.coeffs().begin());
        const auto& kg = ek.sub->group();
        ElementSet ker(kg.size());
        for (std::uint32_t x = 0; x < kg.size(); ++x)
          if (kt->linear_exponents(d)[kg.class_of(x)] == 0) ker.set(x);
        m = translate(kg, ker, g);
      }
      const Integer a = m ? 1 : 0;
      const Integer b = m ? idx - 2 : idx;
      GenChar rhs = ctx->induce(vh, rho0) + ctx->perm_char(vh) * b;
      if (m) rhs += ctx->perm_char(*m) * a;
      if (!(ctx->perm_char(h) == rhs)) throw StructuralError("Ind_{VH} rho_0 identity failed");
      if (!rho0.is_zero()) add(n, 1, induced(ctx, vh, decompose(ek.sub, rho0)));
      if (m) add(n, a, prop26_rho(ctx, *m, v, q));
      add(n, b, prop26_rho(ctx, vh, v, q));
      return close_with_linear(n, target);
    }
    const std::uint32_t gen_v = greedy_generators(g, v).front();
    ElementSet w(g.size());
    h.for_each([&](std::uint32_t x) {
      if (g.mul(x, gen_v) == g.mul(gen_v, x)) w.set(x);
    });
    if (w.count() > 1) {
      if (!is_normal(g, w)) throw StructuralError("kernel of H -> Aut V is not normal");
      auto n = node(ctx, "Prop2.6.case3", vq + ", VH = G, W = ker(H -> Aut V) nontrivial: inflate from G/W");
      const auto& qe = ctx->quotient(w);
      ElementSet hbar(qe.quotient->group().size());
      h.for_each([&](std::uint32_t x) { hbar.set(qe.map.element_map[x]); });
      add(n, 1, inflated(ctx, w, decompose(qe.quotient, qe.quotient->rho(hbar))));
      return finish(n, target);
    }
    if (h.count() % 2 == 1) return solve(ctx, "Lemma2.4", target, type1_candidates(*ctx, false), "odd order");
    std::optional<std::uint32_t> t;
    h.for_each([&](std::uint32_t x) {
      if (!t && g.element_order(x) == 2) t = x;
    });
    const ElementSet d = join_element(g, v, *t);
    const auto& ed = ctx->embedding(d);
    const auto& dt = ed.sub->table();
    auto cands = type1_candidates(*ctx, true);
    for (std::size_t i = 0; i < dt->size(); ++i) {
      if (dt->degree(i) != 2) continue;
      const GenChar tau = GenChar::irreducible(dt, i);
      cands.push_back({DecompositionNode::LeafType::Type2, 0, "T2:D" + std::to_string(2 * q) + "/" + irr_label(i),
                       ctx->induce(d, tau - ed.sub->trivial() - determinant(tau))});
    }
    return solve(ctx, "Prop2.6.case4", target, cands, vq + ", G = F_p x| H faithful: twists from D" + std::to_string(2 * q));
  }

  int depth_ = 0;
};

}  // namespace

NodePtr decompose_structural(const ContextPtr& ctx, const GenChar& rho) {
  if (!in_S(*ctx, rho)) throw std::invalid_argument("target is not in S_G (degree 0, trivial determinant, permutation)");
  return Decomposer().decompose(ctx, rho);
}

bool check_tree(const DecompositionNode& n) {
  if (n.kind == "Leaf") return n.value == n.unit * n.multiplicity;
  for (const auto& [w, c] : n.children)
    if (!check_tree(*c)) return false;
  return children_sum(n) == n.value;
}

namespace {

using Lift = std::function<GenChar(const GenChar&)>;

bool flatten_into(const DecompositionNode& n, const Lift& lift, const Integer& weight, const GroupContext& root,
                  const std::map<std::vector<Integer>, std::size_t>& index, std::map<std::size_t, Integer>& terms) {
  if (n.kind == "Leaf") {
    const Integer w = weight * n.multiplicity;
    if (n.leaf == DecompositionNode::LeafType::Type2) {
      const GenChar up = lift(n.unit);
      if (up.is_zero()) return true;
      auto it = index.find(up.coeffs());
      if (it == index.end()) return false;
      terms[it->second] += w;
      return true;
    }
    // chi + conj(chi) - 2d 1 lifts to Y + conj(Y) with Y = lift(chi) - d lift(1) of degree 0,
    // which is sum_j Y_j (chi_j + conj(chi_j) - 2 d_j 1).
    const auto& t = n.context->table();
    const GenChar y = lift(GenChar::irreducible(t, n.irreducible)) -
                      lift(n.context->trivial()) * to_integer(t->degree(n.irreducible));
    const auto& rt = root.table();
    for (std::size_t j = 1; j < y.size(); ++j) {
      if (y.coeff(j) == 0) continue;
      const GenChar e = GenChar::irreducible(rt, j) + GenChar::irreducible(rt, rt->conjugate(j)) -
                        root.trivial() * to_integer(2 * rt->degree(j));
      auto it = index.find(e.coeffs());
      if (it == index.end()) return false;
      terms[it->second] += w * y.coeff(j);
    }
    return true;
  }
  for (const auto& [cw, c] : n.children) {
    Lift next = lift;
    if (n.kind == "Induced") {
      const GroupContext* ctx = n.context.get();
      const ElementSet* link = &n.link;
      next = [lift, ctx, link](const GenChar& x) { return lift(ctx->induce(*link, x)); };
    } else if (n.kind == "Inflated") {
      const GroupContext* ctx = n.context.get();
      const ElementSet* link = &n.link;
      next = [lift, ctx, link](const GenChar& x) { return lift(ctx->inflate(*link, x)); };
    }
    if (!flatten_into(*c, next, weight * cw, root, index, terms)) return false;
  }
  return true;
}

}  // namespace

std::optional<MembershipCertificate> flatten(const DecompositionNode& root, const GeneratorFamily& family) {
  if (root.context->table() != family.context().table())
    throw std::invalid_argument("tree and family live on different groups");
  std::map<std::vector<Integer>, std::size_t> index;
  for (std::size_t i = 0; i < family.size(); ++i) index.emplace(family.at(i).expansion.coeffs(), i);
  std::map<std::size_t, Integer> terms;
  if (!flatten_into(root, [](const GenChar& x) { return x; }, Integer(1), family.context(), index, terms))
    return std::nullopt;
  MembershipCertificate cert{root.value, {}};
  for (const auto& [i, c] : terms)
    if (c != 0) cert.terms.emplace_back(i, c);
  return cert;
}

std::set<std::string> node_kinds(const DecompositionNode& n) {
  std::set<std::string> out{n.kind};
  for (const auto& [w, c] : n.children) {
    auto sub = node_kinds(*c);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::size_t node_count(const DecompositionNode& n) {
  std::size_t k = 1;
  for (const auto& [w, c] : n.children) k += node_count(*c);
  return k;
}

}  // namespace parind

namespace parind {

namespace {

void render_into(const DecompositionNode& n, const Integer& weight, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  if (weight != 1) out += weight.get_str() + " * ";
  out += n.kind;
  if (n.kind == "Leaf") {
    out += " " + n.generator;
    if (n.multiplicity != 1) out += " x" + n.multiplicity.get_str();
  } else if (!n.detail.empty()) {
    out += " [" + n.detail + "]";
  }
  if (n.lemma_scoped) out += " (lemma-scoped solve)";
  out += " = " + n.value.to_string() + "\n";
  for (const auto& [w, c] : n.children) render_into(*c, w, indent + 1, out);
}

}  // namespace

std::string render_tree(const DecompositionNode& root) {
  std::string out;
  render_into(root, 1, 0, out);
  return out;
}

}  // namespace parind
