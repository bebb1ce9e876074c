#include "parind/group_spec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "parind/integer.hpp"

namespace parind {

namespace {

using Gens = std::vector<std::vector<Point>>;  // generators as image vectors

struct Factor {
  std::size_t degree;
  Gens gens;
};

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw GroupSpecError("bad number in group spec '" + std::string(whole) + "'");
  return v;
}

std::vector<Point> identity_images(std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
  return v;
}

std::vector<Point> cycle_images(std::size_t n, std::size_t len) {
  auto v = identity_images(n);
  for (std::size_t i = 0; i < len; ++i) v[i] = static_cast<Point>((i + 1) % len);
  return v;
}

constexpr std::uint64_t kMaxNamedDegree = 4096;

Factor cyclic(std::uint64_t n) {
  if (n == 1) return {1, {}};
  return {n, {cycle_images(n, n)}};
}

Factor dihedral(std::uint64_t order, std::string_view whole) {
  if (order == 0 || order % 2) throw GroupSpecError("dihedral order must be even: '" + std::string(whole) + "'");
  const std::uint64_t n = order / 2;
  if (n == 1) return cyclic(2);
  if (n == 2) {
    // Klein four-group acting regularly.
    return {4, {{1, 0, 3, 2}, {2, 3, 0, 1}}};
  }
  auto reflection = identity_images(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return {n, {cycle_images(n, n), reflection}};
}

Factor symmetric(std::uint64_t n) {
  if (n <= 1) return {1, {}};
  auto t = identity_images(n);
  std::swap(t[0], t[1]);
  if (n == 2) return {2, {t}};
  return {n, {t, cycle_images(n, n)}};
}

Factor alternating(std::uint64_t n) {
  if (n <= 2) return {std::max<std::uint64_t>(n, 1), {}};
  Gens gens;
  for (std::size_t k = 2; k < n; ++k) {
    auto c = identity_images(n);
    c[0] = 1;
    c[1] = static_cast<Point>(k);
    c[k] = 0;
    gens.push_back(std::move(c));
  }
  return {n, gens};
}

Factor quaternion() {
  // Left-regular action on {1, i, -1, -i, j, -k, -j, k}.
  return {8, {{1, 2, 3, 0, 7, 4, 5, 6}, {4, 5, 6, 7, 2, 3, 0, 1}}};
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

Factor frobenius(std::uint64_t p, std::uint64_t k, std::string_view whole) {
  if (!is_prime(p) || k == 0 || (p - 1) % k)
    throw GroupSpecError("F<p>:<k> needs a prime p and k dividing p-1: '" + std::string(whole) + "'");
  std::uint64_t root = 0;
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 1; g < p && !root; ++g) {
    bool primitive = true;
    for (auto q : factors) primitive = primitive && powmod(g, (p - 1) / q, p) != 1;
    if (primitive) root = g;
  }
  const std::uint64_t a = powmod(root, (p - 1) / k, p);
  Gens gens{cycle_images(p, p)};
  if (k > 1) {
    std::vector<Point> mul(p);
    for (std::uint64_t x = 0; x < p; ++x) mul[x] = static_cast<Point>(x * a % p);
    gens.push_back(std::move(mul));
  }
  return {p, gens};
}

Factor named_factor(std::string_view tok, std::string_view whole) {
  if (tok.empty()) throw GroupSpecError("empty factor in group spec '" + std::string(whole) + "'");
  if (tok == "Q8") return quaternion();
  const char head = tok[0];
  const std::string_view rest = tok.substr(1);
  if (head == 'F') {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw GroupSpecError("F<p>:<k> needs a ':' in '" + std::string(whole) + "'");
    const auto p = parse_number(rest.substr(0, colon), whole);
    const auto k = parse_number(rest.substr(colon + 1), whole);
    if (p > kMaxNamedDegree) throw GroupSpecError("named group too large: '" + std::string(whole) + "'");
    return frobenius(p, k, whole);
  }
  if (head != 'C' && head != 'D' && head != 'S' && head != 'A')
    throw GroupSpecError("unknown group family '" + std::string(tok) + "'");
  const auto n = parse_number(rest, whole);
  if (n == 0 || n > kMaxNamedDegree) throw GroupSpecError("bad size in group token '" + std::string(tok) + "'");
  // 21! no longer fits the 64-bit order.
  if ((head == 'S' || head == 'A') && n > 20)
    throw GroupSpecError("named group too large: '" + std::string(tok) + "'");
  switch (head) {
    case 'C':
      return cyclic(n);
    case 'D':
      return dihedral(n, whole);
    case 'S':
      return symmetric(n);
    default:
      return alternating(n);
  }
}

GroupPtr direct_product(const std::vector<Factor>& factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree;
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.gens) {
      auto img = identity_images(degree);
      for (std::size_t i = 0; i < g.size(); ++i) img[offset + i] = static_cast<Point>(offset + g[i]);
      gens.emplace_back(std::move(img));
    }
    offset += f.degree;
  }
  return std::make_shared<const PermGroup>(degree, std::move(gens));
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

GroupPtr parse_cycles(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw GroupSpecError("unbalanced parentheses in '" + std::string(text) + "'");
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw GroupSpecError("unbalanced parentheses in '" + std::string(text) + "'");
  parts.push_back(trim(cur));
  std::vector<Permutation> perms;
  std::size_t degree = 1;
  try {
    for (const auto& p : parts) {
      if (p.empty()) throw GroupSpecError("empty generator in '" + std::string(text) + "'");
      perms.push_back(Permutation::from_cycles(p));
      degree = std::max(degree, perms.back().degree());
    }
  } catch (const GroupSpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw GroupSpecError(e.what());
  }
  for (auto& p : perms) p = p.degree() == 0 ? Permutation(degree) : p.extended(degree);
  return std::make_shared<const PermGroup>(degree, std::move(perms));
}

}  // namespace

GroupPtr parse_group_spec(std::string_view text) {
  const std::string spec = trim(text);
  if (spec.empty()) throw GroupSpecError("empty group spec");
  if (spec.find('(') != std::string::npos) return parse_cycles(spec);
  std::vector<Factor> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('x', start);
    if (end == std::string::npos) end = spec.size();
    std::string tok = trim(std::string_view(spec).substr(start, end - start));
    std::uint64_t power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      power = parse_number(std::string_view(tok).substr(caret + 1), spec);
      if (power == 0 || power > 16) throw GroupSpecError("bad power in '" + spec + "'");
      tok = tok.substr(0, caret);
    }
    const Factor f = named_factor(tok, spec);
    for (std::uint64_t i = 0; i < power; ++i) factors.push_back(f);
    start = end + 1;
  }
  return direct_product(factors);
}

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const std::string where = "catalog line " + std::to_string(lineno) + ": ";
    try {
      const auto rec = nlohmann::json::parse(line);
      const auto name = rec.at("name").get<std::string>();
      const auto degree = rec.at("degree").get<std::size_t>();
      if (degree == 0) throw GroupSpecError("degree must be positive");
      std::vector<Permutation> gens;
      for (const auto& g : rec.at("generators")) gens.push_back(Permutation::from_cycles(g.get<std::string>(), degree));
      auto group = std::make_shared<const PermGroup>(degree, std::move(gens));
      if (rec.contains("order") && rec["order"].get<std::uint64_t>() != group->order())
        throw GroupSpecError("declared order " + std::to_string(rec["order"].get<std::uint64_t>()) +
                             " but generators give " + std::to_string(group->order()));
      out.push_back({name, std::move(group)});
    } catch (const std::exception& e) {
      throw GroupSpecError(where + e.what());
    }
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GroupSpecError("cannot open catalog " + path.string());
  return parse_catalog(in);
}

}  // namespace parind
