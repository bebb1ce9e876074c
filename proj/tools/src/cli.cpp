#include "parind_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "parind/group_spec.hpp"
#include "parind/json_io.hpp"
#include "parind/s_group.hpp"

namespace parind::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string group;
  std::string subgroup;
  std::string flavor = "thm12";
  bool structural = false;
  std::string catalog;
  std::uint64_t max_order = 0;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  std::string parities;
  std::string format = "text";
  std::string out;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CatalogEntry> catalog_for(const Options& o) {
  if (!o.catalog.empty()) {
    if (!std::filesystem::exists(o.catalog)) throw InputError("catalog not found: " + o.catalog);
    return load_catalog(o.catalog);
  }
  if (std::filesystem::exists(PARIND_DEFAULT_CATALOG)) return load_catalog(PARIND_DEFAULT_CATALOG);
  return {};
}

// A group spec, or a name from the catalog.
ContextPtr resolve_group(const Options& o) {
  if (o.group.empty()) throw InputError(o.command + " needs a group spec");
  try {
    return GroupContext::make(parse_group_spec(o.group), o.group);
  } catch (const GroupSpecError&) {
    for (const auto& e : catalog_for(o))
      if (e.name == o.group) return GroupContext::make(e.group, e.name);
    throw;
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string cycles_list(const std::vector<Permutation>& gens) {
  std::string s;
  for (const auto& p : gens) s += (s.empty() ? "" : ", ") + p.to_cycles();
  return s.empty() ? "()" : s;
}

// Element-order statistics, used to match a named subgroup type.
std::vector<std::uint64_t> order_profile(const PermGroup& g, const ElementSet& s) {
  std::vector<std::uint64_t> v;
  s.for_each([&](std::uint32_t x) { v.push_back(g.element_order(x)); });
  std::sort(v.begin(), v.end());
  return v;
}

// "H3" / "3" (class id), cycle generators, or a group spec matched against the classes.
std::size_t resolve_subgroup(const GroupContext& ctx, const std::string& spec) {
  const auto& lat = ctx.lattice();
  std::string digits = spec;
  if (!digits.empty() && (digits[0] == 'H' || digits[0] == 'h')) digits.erase(0, 1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    const std::size_t id = std::stoul(digits);
    if (id >= lat.size()) throw InputError("no subgroup class " + spec);
    return id;
  }
  const PermGroup& g = ctx.group();
  if (spec.find('(') != std::string::npos) {
    const GroupPtr sub = parse_group_spec(spec);
    std::vector<std::uint32_t> gens;
    for (const auto& p : sub->generators()) {
      auto i = g.index_of(p.extended(std::max(p.degree(), g.degree())));
      if (!i || p.degree() > g.degree()) throw InputError("subgroup generator " + p.to_cycles() + " is not in the group");
      gens.push_back(*i);
    }
    return lat.class_of(g.closure(gens));
  }
  const GroupPtr model = parse_group_spec(spec);
  const auto want = order_profile(*model, model->full_set());
  for (std::size_t id = 0; id < lat.size(); ++id)
    if (lat.at(id).order == model->order() && order_profile(g, lat.at(id).elements) == want) return id;
  throw InputError("no subgroup of type " + spec);
}

Flavor flavor_of(const Options& o) {
  auto f = parse_flavor(o.flavor);
  if (!f) throw InputError("unknown flavor " + o.flavor);
  return *f;
}

std::string irr_label(std::size_t i) { return "X." + std::to_string(i + 1); }

int group_info(const Options& o, std::ostream& out) {
  auto ctx = resolve_group(o);
  const PermGroup& g = ctx->group();
  const auto& lat = ctx->lattice();
  const auto hy = is_hyperelementary(g);
  std::map<std::string, std::size_t> tags;
  for (const auto& sq : ctx->subquotients()) ++tags[sq.tag.name()];
  const auto order2 = order2_linear_chars(*ctx->table());
  if (o.format == "json") {
    json j{{"group", ctx->name()},
           {"order", g.order()},
           {"degree", g.degree()},
           {"generators", json::array()},
           {"exponent", g.exponent()},
           {"abelian", g.is_abelian()},
           {"conjugacy_classes", g.classes().size()},
           {"subgroup_classes", lat.size()},
           {"normal_subgroups", lat.normal_subgroups().size()},
           {"hyperelementary", hy.has_value()},
           {"order2_linear_characters", order2.size()},
           {"small_type", identify_small_type(g).name()},
           {"dihedral_subquotients", tags}};
    for (const auto& p : g.generators()) j["generators"].push_back(p.to_cycles());
    if (hy) j["hyperelementary_prime"] = hy->prime;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "group: " << ctx->name() << "\n"
      << "order: " << g.order() << "\n"
      << "degree: " << g.degree() << "\n"
      << "generators: " << cycles_list(g.generators()) << "\n"
      << "exponent: " << g.exponent() << "\n"
      << "abelian: " << yes_no(g.is_abelian()) << "\n"
      << "type: " << identify_small_type(g).name() << "\n"
      << "conjugacy classes: " << g.classes().size() << "\n"
      << "subgroup classes: " << lat.size() << " (" << lat.normal_subgroups().size() << " normal)\n"
      << "hyperelementary: "
      << (hy ? "yes (p = " + std::to_string(hy->prime) + ", normal cyclic of order " +
                   std::to_string(hy->cyclic_normal.order) + ")"
             : "no")
      << "\n"
      << "order-2 linear characters: " << order2.size() << "\n"
      << "dihedral subquotients:";
  if (tags.empty()) out << " none";
  for (const auto& [t, n] : tags) out << " " << t << " x" << n;
  out << "\n";
  return kOk;
}

bool table_invariants_hold(const GroupContext& ctx) {
  const auto& t = ctx.table();
  Integer sum = 0;
  for (std::size_t i = 0; i < t->size(); ++i) sum += to_integer(t->degree(i) * t->degree(i));
  if (sum != to_integer(ctx.group().order())) return false;
  for (std::size_t i = 0; i < t->size(); ++i)
    for (std::size_t j = 0; j < t->size(); ++j)
      if (inner_product_values(*t, t->values()[i], t->values()[j]) != (i == j ? 1 : 0)) return false;
  return true;
}

int chartab(const Options& o, std::ostream& out, std::ostream& err) {
  auto ctx = resolve_group(o);
  const auto& t = ctx->table();
  const PermGroup& g = ctx->group();
  if (o.format == "json") {
    json classes = json::array();
    for (const auto& c : g.classes())
      classes.push_back({{"representative", g.element(c.representative).to_cycles()},
                         {"size", c.size},
                         {"element_order", c.element_order}});
    json chars = json::array();
    for (std::size_t i = 0; i < t->size(); ++i) {
      json vals = json::array();
      for (const auto& v : t->values()[i]) vals.push_back(v.to_string(t->conductor(), "z"));
      chars.push_back({{"id", irr_label(i)}, {"degree", t->degree(i)}, {"values", vals}});
    }
    out << json{{"group", ctx->name()}, {"conductor", t->conductor()}, {"classes", classes}, {"characters", chars}}.dump(2)
        << "\n";
  } else {
    out << t->to_string();
  }
  if (!table_invariants_hold(*ctx)) {
    err << "character table invariants failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

int subgroups(const Options& o, std::ostream& out) {
  auto ctx = resolve_group(o);
  const auto& lat = ctx->lattice();
  const PermGroup& g = ctx->group();
  if (o.format == "json") {
    json a = json::array();
    for (std::size_t id = 0; id < lat.size(); ++id) {
      const auto& r = lat.at(id);
      json gens = json::array();
      for (const auto& p : r.generators) gens.push_back(p.to_cycles());
      a.push_back({{"id", "H" + std::to_string(id)},
                   {"order", r.order},
                   {"index", r.index_in(g)},
                   {"normal", r.normal},
                   {"conjugates", lat.conjugates(id).size()},
                   {"generators", gens}});
    }
    out << json{{"group", ctx->name()}, {"subgroups", a}}.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t id = 0; id < lat.size(); ++id) {
    const auto& r = lat.at(id);
    out << "H" << id << "  order " << r.order << "  index " << r.index_in(g) << "  " << (r.normal ? "normal" : "conjugates " + std::to_string(lat.conjugates(id).size()))
        << "  <" << cycles_list(r.generators) << ">\n";
  }
  return kOk;
}

void print_terms(const GeneratorFamily& fam, const MembershipCertificate& cert, std::ostream& out) {
  if (cert.terms.empty()) out << "  (empty)\n";
  for (const auto& [i, c] : cert.terms) out << "  " << c.get_str() << " * " << fam.at(i).id << "\n";
}

int decompose(const Options& o, std::ostream& out, std::ostream& err) {
  auto ctx = resolve_group(o);
  if (o.subgroup.empty()) throw InputError("decompose needs --subgroup");
  const std::size_t id = resolve_subgroup(*ctx, o.subgroup);
  const auto& h = ctx->lattice().at(id);
  const GenChar target = ctx->rho(h.elements);
  const auto fam = make_family(ctx, flavor_of(o));
  std::optional<MembershipCertificate> cert;
  NodePtr tree;
  if (o.structural) {
    tree = decompose_structural(ctx, target);
    const auto& thm = fam.flavor() == Flavor::Theorem12 ? fam : theorem12_family(ctx);
    cert = flatten(*tree, thm);
    if (cert && fam.flavor() != Flavor::Theorem12) cert = membership_solve(fam, target);
  } else {
    cert = membership_solve(fam, target);
  }
  const bool verified = cert && verify_certificate(fam, *cert) && (!tree || check_tree(*tree));
  if (o.format == "json") {
    json j{{"group", ctx->name()},
           {"subgroup", {{"id", "H" + std::to_string(id)}, {"order", h.order}, {"index", h.index_in(ctx->group())}}},
           {"target", target.to_string()},
           {"verified", verified}};
    if (cert) j["certificate"] = json::parse(certificate_to_json(fam, *cert, verified));
    if (tree) j["tree"] = json::parse(tree_to_json(*tree));
    out << j.dump(2) << "\n";
  } else {
    out << "group: " << ctx->name() << "\n"
        << "subgroup: H" << id << " (order " << h.order << ", index " << h.index_in(ctx->group()) << ")\n"
        << "target: rho_H = " << target.to_string() << "\n"
        << "flavor: " << flavor_name(fam.flavor()) << "\n";
    if (tree) out << "tree:\n" << render_tree(*tree);
    if (cert) {
      out << "certificate (" << (verified ? "verified" : "FAILED") << "):\n";
      print_terms(fam, *cert, out);
    } else {
      out << "no certificate\n";
    }
  }
  if (!verified) {
    err << "certificate for rho_H" << id << " failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

std::string report_text(const SpanReport& r, std::uint64_t order) {
  std::size_t rho_ok = 0, sample_ok = 0;
  for (const auto& t : r.subgroup_targets) rho_ok += t.certified;
  for (const auto& t : r.samples) sample_ok += t.certified;
  std::ostringstream os;
  os << r.group << ": order " << order << ", " << flavor_name(r.flavor) << " generators " << r.generators << ", rho_H "
     << rho_ok << "/" << r.subgroup_targets.size() << ", samples " << sample_ok << "/" << r.samples.size() << ", usage";
  if (r.usage.empty()) os << " none";
  for (const auto& [k, v] : r.usage) os << " " << k << "=" << v;
  os << " -> " << (r.ok() ? "certified" : "FAILED") << "\n";
  for (const auto& t : r.subgroup_targets)
    if (!t.certified) os << "  failed: " << t.label << "\n";
  for (const auto& t : r.samples)
    if (!t.certified) os << "  failed: " << t.label << "\n";
  return os.str();
}

std::size_t thread_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PARITY_INDUCTOR_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InputError("PARITY_INDUCTOR_THREADS must be a positive integer");
    }
  }
  return n;
}

int verify(const Options& o, std::ostream& out) {
  const Flavor flavor = flavor_of(o);
  std::vector<CatalogEntry> groups;
  if (!o.group.empty() && o.catalog.empty()) {
    auto ctx = resolve_group(o);
    groups.push_back({ctx->name(), ctx->group_ptr()});
  } else {
    if (o.catalog.empty()) throw InputError("verify needs --catalog or a group spec");
    for (auto& e : catalog_for(o))
      if ((o.max_order == 0 || e.group->order() <= o.max_order) && (o.group.empty() || e.name == o.group))
        groups.push_back(std::move(e));
  }
  struct Result {
    SpanReport report;
    std::string error;
  };
  std::vector<Result> results(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < groups.size();) {
      try {
        auto ctx = GroupContext::make(groups[i].group, groups[i].name);
        results[i].report = span_report(make_family(ctx, flavor), o.samples, o.seed);
      } catch (const std::exception& e) {
        results[i].report.group = groups[i].name;
        results[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t threads = std::min(thread_count(), std::max<std::size_t>(groups.size(), 1));
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t certified = 0;
  json reports = json::array();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const bool ok = results[i].error.empty() && results[i].report.ok();
    certified += ok;
    if (o.format == "json") {
      json j = results[i].error.empty() ? json::parse(span_report_to_json(results[i].report)) : json{{"group", groups[i].name}};
      j["order"] = groups[i].group->order();
      if (!results[i].error.empty()) j["error"] = results[i].error;
      reports.push_back(j);
    } else if (!results[i].error.empty()) {
      out << groups[i].name << ": error: " << results[i].error << "\n";
    } else {
      out << report_text(results[i].report, groups[i].group->order());
    }
  }
  if (o.format == "json")
    out << json{{"flavor", flavor_name(flavor)}, {"reports", reports}, {"certified", certified}, {"groups", groups.size()}}.dump(2)
        << "\n";
  else
    out << "certified " << certified << "/" << groups.size() << " groups\n";
  return certified == groups.size() ? kOk : kVerificationFailed;
}

int parity(const Options& o, std::ostream& out) {
  auto ctx = resolve_group(o);
  ParityInput input;
  if (!o.parities.empty()) input = parse_parity_input(read_file(o.parities));
  const auto fam = theorem12_family(ctx);
  const auto table = parity_table(fam, input);
  if (o.format == "json") {
    out << parity_table_to_json(table) << "\n";
    return kOk;
  }
  out << "group: " << ctx->name() << "\n";
  for (const auto& q : quadratic_fields(*ctx))
    out << "quadratic field: kernel H" << q.kernel.class_id << " <-> " << irr_label(q.character) << "\n";
  for (const auto& g : fam.generators())
    if (g.kind == GeneratorDesc::Kind::Type2) out << "dihedral twist: " << g.id << "\n";
  out << table.to_string();
  return kOk;
}

int required_primes(const Options& o, std::ostream& out) {
  auto ctx = resolve_group(o);
  const auto r = required_sha_primes(*ctx);
  if (o.format == "json") {
    out << json{{"group", ctx->name()}, {"odd_primes", r.odd_primes}, {"needs_two", r.needs_two}}.dump(2) << "\n";
    return kOk;
  }
  out << "odd primes: {";
  bool first = true;
  for (auto p : r.odd_primes) {
    out << (first ? "" : ", ") << p;
    first = false;
  }
  out << "}\nneeds 2: " << yes_no(r.needs_two) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Induction certificates and rank-parity propagation for finite permutation groups",
               "parity-inductor"};
  const std::vector<std::string> commands{"group-info", "chartab",  "subgroups",      "decompose",
                                          "verify",     "parity",   "required-primes"};
  app.add_option("command", o.command, "Subcommand")->required()->check(CLI::IsMember(commands));
  app.add_option("group", o.group, "Group spec or catalog name");
  app.add_option("--subgroup", o.subgroup, "Subgroup: class id (H3), generators, or a type such as C2");
  app.add_option("--flavor", o.flavor, "Generator family")->check(CLI::IsMember({"thm12", "cor29"}));
  app.add_flag("--structural", o.structural, "Decompose by the recursive case split and print the tree");
  app.add_option("--catalog", o.catalog, "JSON-lines group catalog");
  app.add_option("--max-order", o.max_order, "Skip catalog groups above this order");
  app.add_option("--samples", o.samples, "Random S_G elements per group");
  app.add_option("--seed", o.seed, "Seed for the random samples");
  app.add_option("--parities", o.parities, "Parity input JSON");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "Write output to this file");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (o.command == "group-info") code = group_info(o, buffer);
    else if (o.command == "chartab") code = chartab(o, buffer, err);
    else if (o.command == "subgroups") code = subgroups(o, buffer);
    else if (o.command == "decompose") code = decompose(o, buffer, err);
    else if (o.command == "verify") code = verify(o, buffer);
    else if (o.command == "parity") code = parity(o, buffer);
    else code = required_primes(o, buffer);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {  // group specs, catalogs, parity inputs
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::overflow_error& e) {  // group order past 64 bits
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "verification error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kInputError;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace parind::cli
