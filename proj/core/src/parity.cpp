#include "parind/parity.hpp"

#include <cstdio>
#include <sstream>

namespace parind {

std::string ParitySymbol::name() const {
  switch (kind) {
    case Kind::Base:
      return "base";
    case Kind::Quadratic:
      return "quad[" + id + "]";
    case Kind::DihedralTwist:
      return "twist[" + id + "]";
  }
  return "?";
}

void ParityExpression::toggle(const ParitySymbol& s) {
  if (!odd.erase(s)) odd.insert(s);
}

std::string ParityExpression::to_string() const {
  if (odd.empty()) return "1";
  std::string out;
  for (const auto& s : odd) {
    if (!out.empty()) out += " * ";
    out += s.name();
  }
  return out;
}

std::optional<int> ParityInput::lookup(const ParitySymbol& s) const {
  switch (s.kind) {
    case ParitySymbol::Kind::Base:
      return base;
    case ParitySymbol::Kind::Quadratic:
      if (auto it = quadratic.find(s.id); it != quadratic.end()) return it->second;
      return std::nullopt;
    case ParitySymbol::Kind::DihedralTwist:
      if (auto it = dihedral.find(s.id); it != dihedral.end()) return it->second;
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

std::string irr_label(std::size_t i) { return "X." + std::to_string(i + 1); }

std::string fingerprint(const MembershipCertificate& cert, const GeneratorFamily& family) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [i, c] : cert.terms) mix(family.at(i).id + "=" + c.get_str() + ";");
  char buf[32];
  std::snprintf(buf, sizeof buf, "cert-%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::vector<QuadraticField> quadratic_fields(const GroupContext& ctx) {
  const auto& t = ctx.table();
  const PermGroup& g = ctx.group();
  std::vector<QuadraticField> out;
  for (std::size_t chi : order2_linear_chars(*t)) {
    ElementSet ker(g.size());
    for (std::uint32_t x = 0; x < g.size(); ++x)
      if (t->linear_exponents(chi)[g.class_of(x)] == 0) ker.set(x);
    out.push_back({chi, ctx.lattice().at(ctx.lattice().class_of(ker))});
  }
  return out;
}

ParityDerivation parity_expression(const GeneratorFamily& family, const ElementSet& h) {
  auto cert = membership_solve(family, family.context().rho(h));
  if (!cert) throw std::logic_error("rho_H has no certificate");
  return parity_expression(family, h, *cert);
}

ParityDerivation parity_expression(const GeneratorFamily& family, const ElementSet& h,
                                   const MembershipCertificate& cert) {
  if (family.flavor() != Flavor::Theorem12)
    throw std::invalid_argument("parity propagation needs the thm12 generator family");
  const GroupContext& ctx = family.context();
  if (!verify_certificate(family, cert) || !(cert.target == ctx.rho(h)))
    throw std::logic_error("certificate does not verify for rho_H");
  ParityDerivation d{{}, cert, fingerprint(cert, family)};
  for (const auto& [i, c] : cert.terms) {
    const auto& gen = family.at(i);
    if (gen.kind == GeneratorDesc::Kind::Type2 && mpz_odd_p(c.get_mpz_t()))
      d.expression.toggle({ParitySymbol::Kind::DihedralTwist, gen.id});
  }
  const GenChar det = determinant(ctx.perm_char(h));
  if (!(det == ctx.trivial())) {
    for (std::size_t i = 0; i < det.size(); ++i)
      if (det.coeff(i) != 0) d.expression.toggle({ParitySymbol::Kind::Quadratic, irr_label(i)});
  }
  if ((ctx.group().order() / h.count()) % 2 == 1) d.expression.toggle({ParitySymbol::Kind::Base, ""});
  return d;
}

std::vector<std::string> missing_symbols(const ParityExpression& expr, const ParityInput& input) {
  std::vector<std::string> out;
  for (const auto& s : expr.odd)
    if (!input.lookup(s)) out.push_back(s.name());
  return out;
}

int evaluate(const ParityExpression& expr, const ParityInput& input) {
  const auto missing = missing_symbols(expr, input);
  if (!missing.empty()) {
    std::string msg = "missing parity inputs:";
    for (const auto& m : missing) msg += " " + m;
    throw ParityInputError(msg);
  }
  int v = 1;
  for (const auto& s : expr.odd) v *= *input.lookup(s);
  return v;
}

void validate_parity_input(const GeneratorFamily& family, const ParityInput& input) {
  auto check_value = [](const std::string& what, int v) {
    if (v != 1 && v != -1) throw ParityInputError(what + " must be +1 or -1");
  };
  if (input.base) check_value("base", *input.base);
  std::set<std::string> quad_ids;
  for (const auto& q : quadratic_fields(family.context())) quad_ids.insert(irr_label(q.character));
  for (const auto& [id, v] : input.quadratic) {
    if (!quad_ids.count(id)) throw ParityInputError("unknown quadratic character " + id);
    check_value("quadratic " + id, v);
  }
  for (const auto& [id, v] : input.dihedral) {
    auto i = family.find(id);
    if (!i || family.at(*i).kind != GeneratorDesc::Kind::Type2) throw ParityInputError("unknown dihedral twist " + id);
    check_value("dihedral " + id, v);
  }
}

ParityTable parity_table(const GeneratorFamily& family, const ParityInput& input) {
  validate_parity_input(family, input);
  const GroupContext& ctx = family.context();
  const auto& lat = ctx.lattice();
  ParityTable table{ctx.name(), {}};
  for (std::size_t id = 0; id < lat.size(); ++id) {
    const auto& h = lat.at(id);
    auto d = parity_expression(family, h.elements);
    ParityRow row{id, "F^H" + std::to_string(id), h.index_in(ctx.group()), d.expression, d.certificate_id, std::nullopt};
    if (missing_symbols(row.expression, input).empty()) row.value = evaluate(row.expression, input);
    if (row.index == 2 && row.value) {
      // The quadratic field's own input must come back unchanged.
      const GenChar det = determinant(ctx.perm_char(h.elements));
      for (std::size_t i = 0; i < det.size(); ++i)
        if (det.coeff(i) != 0)
          if (auto it = input.quadratic.find(irr_label(i)); it != input.quadratic.end() && it->second != *row.value)
            throw std::logic_error("row " + row.field + " contradicts the supplied quadratic parity");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string ParityTable::to_string() const {
  std::ostringstream os;
  std::size_t w = 10;
  for (const auto& r : rows) w = std::max(w, r.expression.to_string().size());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-8s %6s  ", "field", "index");
  os << buf << "expression" << std::string(w - 10, ' ') << "  value  certificate\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-8s %6llu  ", r.field.c_str(), static_cast<unsigned long long>(r.index));
    const std::string e = r.expression.to_string();
    os << buf << e << std::string(w - e.size(), ' ') << "  ";
    os << (r.value ? (*r.value > 0 ? "   +1" : "   -1") : "    ?") << "  " << r.certificate_id << "\n";
  }
  return os.str();
}

ShaPrimes required_sha_primes(const GroupContext& ctx) {
  ShaPrimes out;
  for (const auto& sq : ctx.subquotients()) {
    if (sq.tag.kind == SmallTypeTag::Kind::Dihedral2p) out.odd_primes.insert(sq.tag.parameter);
    if (sq.tag.kind == SmallTypeTag::Kind::KleinFour) out.needs_two = true;
  }
  return out;
}

}  // namespace parind
