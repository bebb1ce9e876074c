#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "oracles.hpp"
#include "parind/s_group.hpp"
#include "parind/structural.hpp"

using namespace parind;

namespace {

ContextPtr ctx(const std::string& spec) { return GroupContext::make(oracle::group(spec), spec); }

const std::set<std::string> kAllowed = {"Leaf",          "Lemma2.3",      "Lemma2.4",      "Lemma2.5",
                                        "Lemma2.7",      "Prop2.6.case1", "Prop2.6.case2", "Prop2.6.case3",
                                        "Prop2.6.case4", "Prop2.6.p2",    "Thm2.8.case1",  "Thm2.8.case2",
                                        "Thm2.8.case3",  "Thm2.8.case4",  "Induced",       "Inflated"};

std::string expected_root(const PermGroup& g) {
  const auto n = g.order();
  if (n % 2 == 1) return "Thm2.8.case1";
  if ((n & (n - 1)) == 0) return "Thm2.8.case2";
  // Independent hyperelementary test: some normal cyclic N with G/N of prime-power order
  // coprime to |N|, checked over all cyclic subgroups generated by single elements.
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    const ElementSet c = g.closure(std::vector<std::uint32_t>{x});
    if (!is_normal(g, c)) continue;
    std::uint64_t m = n / c.count();
    if (std::gcd(m, c.count()) != 1) continue;
    const auto ps = prime_factors(m);
    if (ps.size() <= 1) return "Thm2.8.case3";
  }
  return "Thm2.8.case4";
}

void check_group(const ContextPtr& c) {
  const auto fam = theorem12_family(c);
  for (std::size_t id = 0; id < c->lattice().size(); ++id) {
    const GenChar rho = c->rho(c->lattice().at(id).elements);
    NodePtr tree;
    ASSERT_NO_THROW(tree = decompose_structural(c, rho)) << c->name() << " H" << id;
    EXPECT_EQ(tree->value, rho);
    EXPECT_EQ(tree->kind, expected_root(c->group())) << c->name();
    EXPECT_TRUE(check_tree(*tree)) << c->name() << " H" << id;
    for (const auto& k : node_kinds(*tree)) EXPECT_TRUE(kAllowed.count(k)) << k;
    auto cert = flatten(*tree, fam);
    ASSERT_TRUE(cert) << c->name() << " H" << id;
    EXPECT_TRUE(verify_certificate(fam, *cert)) << c->name() << " H" << id;
  }
}

}  // namespace

TEST(Structural, S3CubicSubgroupIsOneTwist) {
  auto c = ctx("S3");
  const GenChar rho = c->rho(c->lattice().at(1).elements);
  auto tree = decompose_structural(c, rho);
  const auto fam = theorem12_family(c);
  auto cert = flatten(*tree, fam);
  ASSERT_TRUE(cert);
  ASSERT_EQ(cert->terms.size(), 1u) << render_tree(*tree);
  EXPECT_EQ(cert->terms[0].second, 1);
  EXPECT_EQ(fam.at(cert->terms[0].first).tag.kind, SmallTypeTag::Kind::Dihedral2p);
  EXPECT_EQ(tree->kind, "Thm2.8.case3") << render_tree(*tree);
  EXPECT_TRUE(node_kinds(*tree).count("Prop2.6.case4"));
}

TEST(Structural, OddOrderUsesLemma24) {
  auto c = ctx("C15");
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const GenChar rho = random_S_element(*c, seed, 2);
    auto tree = decompose_structural(c, rho);
    EXPECT_EQ(tree->kind, "Thm2.8.case1");
    const auto kinds = node_kinds(*tree);
    EXPECT_TRUE(rho.is_zero() || kinds.count("Lemma2.4"));
    for (const auto& [w, child] : tree->children)
      for (const auto& [w2, leaf] : child->children) EXPECT_EQ(leaf->leaf, DecompositionNode::LeafType::Type1);
  }
}

TEST(Structural, D8NonNormalSubgroupUsesTheTwistIdentity) {
  auto c = ctx("D8");
  const auto& lat = c->lattice();
  bool seen = false;
  for (std::size_t id = 0; id < lat.size(); ++id) {
    if (lat.at(id).order != 2 || lat.at(id).normal) continue;
    auto tree = decompose_structural(c, c->rho(lat.at(id).elements));
    std::function<void(const DecompositionNode&)> walk = [&](const DecompositionNode& n) {
      if (n.kind == "Thm2.8.case2" && n.detail.find("D8 chain") != std::string::npos) seen = true;
      for (const auto& [w, ch] : n.children) walk(*ch);
    };
    walk(*tree);
  }
  EXPECT_TRUE(seen);
}

TEST(Structural, RejectsTargetsOutsideS) {
  auto c = ctx("S3");
  EXPECT_THROW(decompose_structural(c, c->trivial()), std::invalid_argument);
  EXPECT_THROW(decompose_structural(c, GenChar(c->table(), {-1, 1, 0})), std::invalid_argument);
}

TEST(Structural, RandomTargets) {
  for (const char* name : {"S4", "D12", "C3xS3", "Q8", "A4"}) {
    auto c = ctx(name);
    const auto fam = theorem12_family(c);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const GenChar rho = random_S_element(*c, seed, 2);
      auto tree = decompose_structural(c, rho);
      EXPECT_TRUE(check_tree(*tree));
      auto cert = flatten(*tree, fam);
      ASSERT_TRUE(cert) << name;
      EXPECT_TRUE(verify_certificate(fam, *cert)) << name;
    }
  }
}

TEST(Structural, EveryRhoOnCatalogGroupsUpTo24) {
  for (const auto& e : oracle::catalog()) {
    if (e.group->order() > 24) continue;
    check_group(GroupContext::make(e.group, e.name));
  }
}
