#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "parind/json_io.hpp"
#include "parind_cli/cli.hpp"

using namespace parind;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("parind_cli_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(Cli, ChartabS3) {
  const auto r = run({"chartab", "S3"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line))
    if (line.rfind("X.", 0) == 0) rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u);
  // First column is the identity: the degrees.
  std::vector<int> degrees;
  for (const auto& row : rows) {
    std::istringstream rs(row);
    std::string id;
    int d;
    rs >> id >> d;
    degrees.push_back(d);
  }
  EXPECT_EQ(degrees, (std::vector<int>{1, 1, 2}));
  const auto j = json::parse(run({"chartab", "S3", "--format", "json"}).out);
  EXPECT_EQ(j["characters"].size(), 3u);
}

TEST(Cli, VerifySmallCatalog) {
  std::ostringstream cat;
  for (const auto& e : oracle::catalog()) {
    if (e.group->order() > 12) continue;
    json j{{"name", e.name}, {"degree", e.group->degree()}, {"generators", json::array()}, {"order", e.group->order()}};
    for (const auto& g : e.group->generators()) j["generators"].push_back(g.to_cycles());
    cat << j.dump() << "\n";
  }
  const auto path = temp_file("small.jsonl", cat.str());
  const auto r = run({"verify", "--catalog", path.string(), "--max-order", "64", "--samples", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::size_t n = 0;
  for (const auto& e : oracle::catalog()) n += e.group->order() <= 12;
  EXPECT_NE(r.out.find("certified " + std::to_string(n) + "/" + std::to_string(n) + " groups"), std::string::npos);

  const auto empty = temp_file("empty.jsonl", "");
  const auto re = run({"verify", "--catalog", empty.string()});
  EXPECT_EQ(re.code, 0);
  EXPECT_NE(re.out.find("certified 0/0 groups"), std::string::npos);
}

TEST(Cli, DecomposeStructuralJson) {
  const auto r = run({"decompose", "S3", "--subgroup", "C2", "--structural", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  bool leaf = false;
  std::function<void(const json&)> walk = [&](const json& n) {
    if (n["kind"] == "Leaf" && n["generator"].get<std::string>().find("D6") != std::string::npos) leaf = true;
    if (n.contains("children"))
      for (const auto& c : n["children"]) walk(c["node"]);
  };
  walk(j["tree"]);
  EXPECT_TRUE(leaf);
}

TEST(Cli, CertificateFileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "parind_cli_cert.json";
  const auto r = run({"decompose", "S4", "--subgroup", "H1", "--format", "json", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = json::parse(in);
  auto c = GroupContext::make(parse_group_spec("S4"), "S4");
  const auto fam = theorem12_family(c);
  const auto cert = certificate_from_json(fam, j["certificate"].dump());
  EXPECT_TRUE(verify_certificate(fam, cert));
  EXPECT_EQ(cert.target, c->rho(c->lattice().at(1).elements));
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"chartab", "Z9"}).code, 2);
  EXPECT_EQ(run({"frobnicate", "S3"}).code, 2);
  EXPECT_EQ(run({"chartab"}).code, 2);
  EXPECT_EQ(run({"decompose", "S3"}).code, 2);
  EXPECT_EQ(run({"decompose", "S3", "--subgroup", "C5"}).code, 2);
  EXPECT_EQ(run({"chartab", "S3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"group-info", "S30"}).code, 2);
  EXPECT_EQ(run({"group-info", "S12"}).code, 2);
  EXPECT_EQ(run({"group-info", "C2xS20"}).code, 2);
  const auto bad = temp_file("bad.jsonl", "{\"name\": \"C2\", \"degree\": 2, \"generators\": [\"(1 2)\"]}\nnot json\n");
  const auto r = run({"verify", "--catalog", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  const auto mismatch = temp_file("mismatch.jsonl", "{\"name\": \"C2\", \"degree\": 2, \"generators\": [\"(1 2)\"], \"order\": 3}\n");
  EXPECT_EQ(run({"verify", "--catalog", mismatch.string()}).code, 2);
  EXPECT_EQ(run({"verify", "--catalog", "/nonexistent/catalog.jsonl"}).code, 2);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"verify", "D12", "--samples", "4", "--seed", "7", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> tree{"decompose", "A4", "--subgroup", "H0", "--structural"};
  EXPECT_EQ(run(tree).out, run(tree).out);
}

TEST(Cli, ParityAndPrimes) {
  const auto sym = run({"parity", "S3"});
  EXPECT_EQ(sym.code, 0);
  EXPECT_NE(sym.out.find("F^H3"), std::string::npos);
  const auto twist = run({"parity", "S3", "--format", "json"});
  const auto tj = json::parse(twist.out);
  ASSERT_EQ(tj["rows"].size(), 4u);
  std::string twist_id;
  for (const auto& s : tj["rows"][1]["symbols"])
    if (s.get<std::string>().rfind("twist[", 0) == 0) twist_id = s.get<std::string>().substr(6, s.get<std::string>().size() - 7);
  ASSERT_FALSE(twist_id.empty());
  const auto input = temp_file("parities.json", json{{"base", 1}, {"quadratic", {{"X.2", 1}}}, {"dihedral", {{twist_id, -1}}}}.dump());
  const auto r = run({"parity", "S3", "--parities", input.string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["value"].get<int>(), row["index"].get<int>() == 3 ? -1 : 1);
  const auto bad = temp_file("bad_parities.json", "{\"base\": 2}");
  EXPECT_EQ(run({"parity", "S3", "--parities", bad.string()}).code, 2);

  const auto p = json::parse(run({"required-primes", "D42", "--format", "json"}).out);
  EXPECT_EQ(p["odd_primes"], json::array({3, 7}));
  EXPECT_FALSE(p["needs_two"].get<bool>());
}

TEST(Cli, GroupInfoAndSubgroups) {
  const auto r = run({"group-info", "Q8", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["subgroup_classes"], 6);
  const auto s = run({"subgroups", "S4"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 11);
  // Catalog names resolve too.
  EXPECT_EQ(run({"group-info", "SL(2,3)"}).code, 0);
}

TEST(Cli, ThreadCap) {
  setenv("PARITY_INDUCTOR_THREADS", "2", 1);
  const auto a = run({"verify", "--catalog", PARIND_CATALOG_PATH, "--max-order", "10", "--samples", "2"});
  unsetenv("PARITY_INDUCTOR_THREADS");
  const auto b = run({"verify", "--catalog", PARIND_CATALOG_PATH, "--max-order", "10", "--samples", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  setenv("PARITY_INDUCTOR_THREADS", "zero", 1);
  EXPECT_EQ(run({"verify", "C2"}).code, 2);
  unsetenv("PARITY_INDUCTOR_THREADS");
}
