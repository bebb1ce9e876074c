#include "parind/json_io.hpp"

#include <json.hpp>

namespace parind {

using nlohmann::json;

namespace {

json integer_json(const Integer& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return to_integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer " + j.get<std::string>());
    return v;
  }
  throw std::invalid_argument("expected an integer");
}

json node_json(const DecompositionNode& n) {
  json j;
  j["kind"] = n.kind;
  j["detail"] = n.detail;
  j["group_order"] = n.context->group().order();
  j["value"] = n.value.to_string();
  if (n.kind == "Leaf") {
    j["generator"] = n.generator;
    j["multiplicity"] = integer_json(n.multiplicity);
  }
  if (n.lemma_scoped) j["lemma_scoped"] = true;
  if (!n.children.empty()) {
    json ch = json::array();
    for (const auto& [w, c] : n.children) ch.push_back({{"weight", integer_json(w)}, {"node", node_json(*c)}});
    j["children"] = std::move(ch);
  }
  return j;
}

}  // namespace

std::string certificate_to_json(const GeneratorFamily& family, const MembershipCertificate& cert, bool verified,
                                int indent) {
  json j;
  j["group"] = family.context().name();
  j["flavor"] = flavor_name(family.flavor());
  json coeffs = json::array();
  for (const auto& c : cert.target.coeffs()) coeffs.push_back(integer_json(c));
  j["target"] = {{"text", cert.target.to_string()}, {"coefficients", coeffs}};
  json terms = json::array();
  for (const auto& [i, c] : cert.terms) terms.push_back({{"generator", family.at(i).id}, {"coefficient", integer_json(c)}});
  j["terms"] = std::move(terms);
  j["verified"] = verified;
  return j.dump(indent);
}

MembershipCertificate certificate_from_json(const GeneratorFamily& family, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("flavor").get<std::string>() != flavor_name(family.flavor()))
      throw std::invalid_argument("certificate flavor does not match the family");
    if (j.at("group").get<std::string>() != family.context().name())
      throw std::invalid_argument("certificate group does not match");
    const auto& coeffs = j.at("target").at("coefficients");
    if (!coeffs.is_array() || coeffs.size() != family.context().table()->size())
      throw std::invalid_argument("target has the wrong number of coefficients");
    std::vector<Integer> t;
    for (const auto& c : coeffs) t.push_back(integer_from(c));
    MembershipCertificate cert{GenChar(family.context().table(), std::move(t)), {}};
    for (const auto& term : j.at("terms")) {
      const auto id = term.at("generator").get<std::string>();
      auto i = family.find(id);
      if (!i) throw std::invalid_argument("unknown generator " + id);
      cert.terms.emplace_back(*i, integer_from(term.at("coefficient")));
    }
    return cert;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

std::string tree_to_json(const DecompositionNode& root, int indent) { return node_json(root).dump(indent); }

ParityInput parse_parity_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParityInputError(std::string("parity input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParityInputError("parity input must be a JSON object");
  auto sign = [](const json& v, const std::string& what) {
    if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1))
      throw ParityInputError(what + " must be +1 or -1");
    return v.get<int>();
  };
  ParityInput in;
  for (const auto& [key, v] : j.items()) {
    if (key == "base") {
      in.base = sign(v, "base");
    } else if (key == "quadratic" || key == "dihedral") {
      if (!v.is_object()) throw ParityInputError(key + " must be an object");
      auto& dst = key == "quadratic" ? in.quadratic : in.dihedral;
      for (const auto& [id, s] : v.items()) dst[id] = sign(s, key + " " + id);
    } else {
      throw ParityInputError("unknown key " + key);
    }
  }
  return in;
}

std::string parity_table_to_json(const ParityTable& table, int indent) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    json syms = json::array();
    for (const auto& s : r.expression.odd) syms.push_back(s.name());
    rows.push_back({{"field", r.field},
                    {"subgroup_class", r.class_id},
                    {"index", r.index},
                    {"expression", r.expression.to_string()},
                    {"symbols", syms},
                    {"certificate", r.certificate_id},
                    {"value", r.value ? json(*r.value) : json(nullptr)}});
  }
  return json{{"group", table.group}, {"rows", rows}}.dump(indent);
}

std::string span_report_to_json(const SpanReport& report, int indent) {
  auto targets = [](const std::vector<TargetStatus>& ts) {
    json a = json::array();
    for (const auto& t : ts) a.push_back({{"label", t.label}, {"certified", t.certified}, {"terms", t.terms}});
    return a;
  };
  json usage = json::object();
  for (const auto& [k, v] : report.usage) usage[k] = v;
  return json{{"group", report.group},
              {"flavor", flavor_name(report.flavor)},
              {"generators", report.generators},
              {"subgroup_targets", targets(report.subgroup_targets)},
              {"samples", targets(report.samples)},
              {"usage", usage},
              {"failed", report.failed()},
              {"certified", report.ok()}}
      .dump(indent);
}

}  // namespace parind
