#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "parind/json_io.hpp"
#include "parind/parity.hpp"

using namespace parind;

namespace {

ContextPtr ctx(const std::string& spec) { return GroupContext::make(oracle::group(spec), spec); }

ParitySymbol base() { return {ParitySymbol::Kind::Base, ""}; }

std::vector<std::string> twist_ids(const GeneratorFamily& f) {
  std::vector<std::string> out;
  for (const auto& g : f.generators())
    if (g.kind == GeneratorDesc::Kind::Type2) out.push_back(g.id);
  return out;
}

ParityInput all_plus(const GeneratorFamily& f) {
  ParityInput in;
  in.base = 1;
  for (const auto& q : quadratic_fields(f.context())) in.quadratic["X." + std::to_string(q.character + 1)] = 1;
  for (const auto& id : twist_ids(f)) in.dihedral[id] = 1;
  return in;
}

}  // namespace

TEST(Parity, QuadraticFields) {
  auto s3 = ctx("S3");
  auto q = quadratic_fields(*s3);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].kernel.order, 3u);
  EXPECT_EQ(quadratic_fields(*ctx("C2xC2")).size(), 3u);
  auto d42 = quadratic_fields(*ctx("D42"));
  ASSERT_EQ(d42.size(), 1u);
  EXPECT_EQ(d42[0].kernel.order, 21u);
  EXPECT_TRUE(quadratic_fields(*ctx("A5")).empty());
}

TEST(Parity, S3Expressions) {
  auto c = ctx("S3");
  const auto fam = theorem12_family(c);
  const auto& lat = c->lattice();
  // Classes by order: 1, C2, C3, S3.
  EXPECT_EQ(parity_expression(fam, lat.at(3).elements).expression.to_string(), "base");
  const auto cubic = parity_expression(fam, lat.at(1).elements).expression;
  ASSERT_EQ(cubic.odd.size(), 3u);
  EXPECT_TRUE(cubic.odd.count(base()));
  EXPECT_TRUE(cubic.odd.count({ParitySymbol::Kind::Quadratic, "X.2"}));
  const auto quad = parity_expression(fam, lat.at(2).elements).expression;
  EXPECT_EQ(quad.to_string(), "quad[X.2]");
  EXPECT_THROW(parity_expression(cor29_family(c), lat.at(1).elements), std::invalid_argument);
}

TEST(Parity, Evaluation) {
  auto c = ctx("S3");
  const auto fam = theorem12_family(c);
  const auto& lat = c->lattice();
  ParityInput in = all_plus(fam);
  const auto table = parity_table(fam, in);
  ASSERT_EQ(table.rows.size(), 4u);
  for (const auto& r : table.rows) EXPECT_EQ(r.value, 1);

  const auto twist = twist_ids(fam);
  ASSERT_EQ(twist.size(), 1u);
  in.dihedral[twist[0]] = -1;
  const auto flipped = parity_table(fam, in);
  for (const auto& r : flipped.rows) EXPECT_EQ(*r.value, r.index == 3 ? -1 : 1) << r.field;

  ParityInput top;
  top.base = -1;
  EXPECT_EQ(evaluate(parity_expression(fam, lat.at(3).elements).expression, top), -1);

  ParityInput partial;
  partial.base = 1;
  const auto ptab = parity_table(fam, partial);
  EXPECT_EQ(ptab.rows[3].value, 1);
  EXPECT_FALSE(ptab.rows[1].value.has_value());
  EXPECT_THROW(evaluate(ptab.rows[1].expression, partial), ParityInputError);
  EXPECT_EQ(missing_symbols(ptab.rows[1].expression, partial).size(), 2u);

  ParityInput bad;
  bad.quadratic["X.3"] = 1;
  EXPECT_THROW(parity_table(fam, bad), ParityInputError);
  ParityInput bad2;
  bad2.base = 3;
  EXPECT_THROW(parity_table(fam, bad2), ParityInputError);
}

// Two certificates for one target differ by a relation among the generators. Their
// expressions differ exactly by the twists with odd coefficient in that relation, so they
// agree on every input that gives the relation's twists product +1.
TEST(Parity, CertificatesDifferByRelations) {
  std::mt19937_64 rng(17);
  std::size_t nontrivial = 0;
  for (const char* name : {"S4", "D12", "D8", "A4", "D8xC2", "S3xC4"}) {
    auto c = ctx(name);
    const auto fam = theorem12_family(c);
    std::vector<std::vector<Integer>> rows;
    for (const auto& g : fam.generators()) rows.push_back(g.expansion.coeffs());
    const auto h = hnf(IntMatrix::from_rows(rows, c->table()->size()));
    std::vector<std::vector<Integer>> relations;
    for (std::size_t r = h.rank; r < h.U.rows(); ++r) relations.push_back(h.U.row(r));
    if (relations.empty()) continue;
    for (const auto& sub : c->lattice().classes()) {
      const auto d1 = parity_expression(fam, sub.elements);
      std::vector<Integer> x(fam.size(), 0), rel(fam.size(), 0);
      for (const auto& [i, k] : d1.certificate.terms) x[i] = k;
      for (const auto& r : relations) {
        const long k = static_cast<long>(rng() % 3);
        for (std::size_t i = 0; i < rel.size(); ++i) rel[i] += r[i] * k;
      }
      MembershipCertificate other{d1.certificate.target, {}};
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] + rel[i] != 0) other.terms.emplace_back(i, x[i] + rel[i]);
      const auto d2 = parity_expression(fam, sub.elements, other);

      ParityExpression support;
      for (std::size_t i = 0; i < rel.size(); ++i)
        if (mpz_odd_p(rel[i].get_mpz_t()) && fam.at(i).kind == GeneratorDesc::Kind::Type2)
          support.toggle({ParitySymbol::Kind::DihedralTwist, fam.at(i).id});
      ParityExpression diff = d1.expression;
      for (const auto& s : d2.expression.odd) diff.toggle(s);
      EXPECT_EQ(diff, support) << name;
      if (support.odd.empty()) continue;
      ++nontrivial;
      EXPECT_NE(d1.certificate_id, d2.certificate_id);

      ParityInput in = all_plus(fam);
      for (auto& [id, v] : in.dihedral) v = rng() % 2 ? 1 : -1;
      if (evaluate(support, in) == -1) in.dihedral[support.odd.begin()->id] *= -1;
      EXPECT_EQ(evaluate(d1.expression, in), evaluate(d2.expression, in)) << name;
      in.dihedral[support.odd.begin()->id] *= -1;
      EXPECT_NE(evaluate(d1.expression, in), evaluate(d2.expression, in)) << name;
    }
  }
  EXPECT_GT(nontrivial, 0u);
}

// All +1 gives +1 everywhere; each flip changes exactly the rows with that symbol; index-2
// rows equal their quadratic input.
TEST(Parity, Battery) {
  for (const char* name : {"S3", "D10", "D14", "C2xC2", "S4", "D8", "A4"}) {
    auto c = ctx(name);
    const auto fam = theorem12_family(c);
    const ParityInput plus = all_plus(fam);
    const auto base_table = parity_table(fam, plus);
    for (const auto& r : base_table.rows) EXPECT_EQ(r.value, 1) << name;
    std::vector<ParitySymbol> symbols{base()};
    for (const auto& [id, v] : plus.quadratic) symbols.push_back({ParitySymbol::Kind::Quadratic, id});
    for (const auto& [id, v] : plus.dihedral) symbols.push_back({ParitySymbol::Kind::DihedralTwist, id});
    for (const auto& s : symbols) {
      ParityInput in = plus;
      if (s.kind == ParitySymbol::Kind::Base) in.base = -1;
      if (s.kind == ParitySymbol::Kind::Quadratic) in.quadratic[s.id] = -1;
      if (s.kind == ParitySymbol::Kind::DihedralTwist) in.dihedral[s.id] = -1;
      const auto t = parity_table(fam, in);
      for (const auto& r : t.rows) {
        EXPECT_EQ(*r.value == -1, r.expression.odd.count(s) == 1) << name << " " << s.name() << " " << r.field;
        if (r.index == 2) {
          ASSERT_EQ(r.expression.odd.size(), 1u);
          const auto& q = *r.expression.odd.begin();
          ASSERT_EQ(q.kind, ParitySymbol::Kind::Quadratic);
          EXPECT_EQ(*r.value, in.quadratic.at(q.id));
        }
      }
    }
  }
}

TEST(Parity, TopRowIsBase) {
  for (const auto& e : oracle::catalog()) {
    if (e.group->order() > 24) continue;
    auto c = GroupContext::make(e.group, e.name);
    const auto fam = theorem12_family(c);
    EXPECT_EQ(parity_expression(fam, c->group().full_set()).expression.to_string(), "base") << e.name;
  }
}

TEST(Parity, RequiredShaPrimes) {
  auto check = [](const char* name, std::set<std::uint64_t> odd, bool two) {
    const auto r = required_sha_primes(*ctx(name));
    EXPECT_EQ(r.odd_primes, odd) << name;
    EXPECT_EQ(r.needs_two, two) << name;
  };
  check("S3", {3}, false);
  check("C2xC2", {}, true);
  check("D42", {3, 7}, false);
  check("S4", {3}, true);
  check("C7", {}, false);
}

TEST(JsonIo, CertificateRoundTrip) {
  auto c = ctx("S4");
  const auto fam = theorem12_family(c);
  for (std::size_t id = 0; id < c->lattice().size(); ++id) {
    auto cert = membership_solve(fam, c->rho(c->lattice().at(id).elements));
    ASSERT_TRUE(cert);
    const std::string text = certificate_to_json(fam, *cert, true);
    const auto back = certificate_from_json(fam, text);
    EXPECT_EQ(back.target, cert->target);
    EXPECT_EQ(back.terms, cert->terms);
    EXPECT_TRUE(verify_certificate(fam, back));
  }
  EXPECT_THROW(certificate_from_json(fam, "{"), std::invalid_argument);
  EXPECT_THROW(certificate_from_json(cor29_family(c), certificate_to_json(fam, MembershipCertificate{c->zero(), {}}, true)),
               std::invalid_argument);
}

TEST(JsonIo, ParityInput) {
  const auto in = parse_parity_input(R"({"base": -1, "quadratic": {"X.2": 1}, "dihedral": {"T2:x": -1}})");
  EXPECT_EQ(in.base, -1);
  EXPECT_EQ(in.quadratic.at("X.2"), 1);
  EXPECT_EQ(in.dihedral.at("T2:x"), -1);
  EXPECT_THROW(parse_parity_input(R"({"base": 0})"), ParityInputError);
  EXPECT_THROW(parse_parity_input(R"({"other": 1})"), ParityInputError);
  EXPECT_THROW(parse_parity_input("[1]"), ParityInputError);
}
