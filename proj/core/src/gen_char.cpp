#include "parind/gen_char.hpp"

#include <numeric>
#include <stdexcept>

namespace parind {

GenChar::GenChar(TablePtr table) : table_(std::move(table)), coeffs_(table_->size()) {}

GenChar::GenChar(TablePtr table, std::vector<Integer> coeffs) : table_(std::move(table)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != table_->size()) throw std::invalid_argument("coefficient vector does not match the table");
}

GenChar GenChar::irreducible(TablePtr table, std::size_t chi, const Integer& mult) {
  GenChar r(std::move(table));
  r.coeffs_.at(chi) = mult;
  return r;
}

GenChar GenChar::regular(TablePtr table) {
  GenChar r(std::move(table));
  for (std::size_t i = 0; i < r.size(); ++i) r.coeffs_[i] = to_integer(r.table().degree(i));
  return r;
}

Integer GenChar::degree() const {
  Integer d = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) d += coeffs_[i] * to_integer(table_->degree(i));
  return d;
}

Cyclotomic GenChar::value(std::size_t cls) const {
  Cyclotomic v(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) v += table_->value(i, cls).scaled(coeffs_[i]);
  return v;
}

std::vector<Cyclotomic> GenChar::values() const {
  std::vector<Cyclotomic> out;
  for (std::size_t c = 0; c < table_->size(); ++c) out.push_back(value(c));
  return out;
}

bool GenChar::is_real() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != coeffs_[table_->conjugate(i)]) return false;
  return true;
}

bool GenChar::is_character() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

GenChar GenChar::conj() const {
  GenChar r(table_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[table_->conjugate(i)] = coeffs_[i];
  return r;
}

void GenChar::check_same_table(const GenChar& o) const {
  if (table_ != o.table_) throw std::invalid_argument("generalized characters live on different tables");
}

GenChar GenChar::operator+(const GenChar& o) const {
  GenChar r = *this;
  return r += o;
}

GenChar GenChar::operator-(const GenChar& o) const {
  GenChar r = *this;
  return r -= o;
}

GenChar GenChar::operator-() const {
  GenChar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

GenChar GenChar::operator*(const Integer& k) const {
  GenChar r = *this;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

GenChar& GenChar::operator+=(const GenChar& o) {
  check_same_table(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GenChar& GenChar::operator-=(const GenChar& o) {
  check_same_table(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

bool GenChar::operator==(const GenChar& o) const { return table_ == o.table_ && coeffs_ == o.coeffs_; }

std::string GenChar::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const Integer a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1) out += a.get_str() + "*";
    out += "X." + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Integer inner_product(const GenChar& a, const GenChar& b) {
  if (a.table_ptr() != b.table_ptr()) throw std::invalid_argument("inner product across different tables");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.coeff(i) * b.coeff(i);
  return s;
}

namespace {

Cyclotomic weighted_sum(const CharacterTable& table, const std::vector<Cyclotomic>& f,
                        const std::vector<Cyclotomic>& g) {
  Cyclotomic s(0);
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (f[c].is_zero() || g[c].is_zero()) continue;
    s += (f[c] * g[c].conj()).scaled(to_integer(table.class_size(c)));
  }
  return s;
}

}  // namespace

Rational inner_product_values(const CharacterTable& table, const std::vector<Cyclotomic>& f,
                              const std::vector<Cyclotomic>& g) {
  const Cyclotomic s = weighted_sum(table, f, g);
  if (!s.is_integer()) throw std::domain_error("inner product of class functions is not rational");
  Rational r(s.integer_value(), to_integer(table.group().order()));
  r.canonicalize();
  return r;
}

std::optional<std::vector<Integer>> decompose(const CharacterTable& table, const std::vector<Cyclotomic>& values) {
  const Integer order = to_integer(table.group().order());
  std::vector<Integer> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Cyclotomic s = weighted_sum(table, values, table.values()[i]);
    if (!s.is_integer()) return std::nullopt;
    const Integer v = s.integer_value();
    if (!mpz_divisible_p(v.get_mpz_t(), order.get_mpz_t())) return std::nullopt;
    mpz_divexact(out[i].get_mpz_t(), v.get_mpz_t(), order.get_mpz_t());
  }
  return out;
}

GenChar tensor(const GenChar& a, const GenChar& b) {
  if (a.table_ptr() != b.table_ptr()) throw std::invalid_argument("tensor product across different tables");
  const auto va = a.values(), vb = b.values();
  std::vector<Cyclotomic> prod;
  for (std::size_t c = 0; c < va.size(); ++c) prod.push_back(va[c] * vb[c]);
  auto coeffs = decompose(a.table(), prod);
  if (!coeffs) throw std::runtime_error("tensor product is not a generalized character");
  return GenChar(a.table_ptr(), std::move(*coeffs));
}

std::vector<std::uint64_t> determinant_exponents(const GenChar& rho) {
  const auto& t = rho.table();
  const std::uint64_t n = t.conductor();
  std::vector<Integer> acc(t.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho.coeff(i) == 0) continue;
    const auto& e = t.determinant_exponents(i);
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += rho.coeff(i) * to_integer(e[c]);
  }
  std::vector<std::uint64_t> out(acc.size());
  const Integer nn = to_integer(n);
  for (std::size_t c = 0; c < acc.size(); ++c) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), acc[c].get_mpz_t(), nn.get_mpz_t());
    out[c] = r.get_ui();
  }
  return out;
}

GenChar determinant(const GenChar& rho) {
  const auto idx = rho.table().linear_index(determinant_exponents(rho));
  if (idx < 0) throw std::runtime_error("determinant is not a linear character of the table");
  return GenChar::irreducible(rho.table_ptr(), static_cast<std::size_t>(idx));
}

bool has_trivial_determinant(const GenChar& rho) {
  const auto e = determinant_exponents(rho);
  return std::all_of(e.begin(), e.end(), [](std::uint64_t x) { return x == 0; });
}

std::uint64_t linear_order(const CharacterTable& table, std::size_t chi) {
  if (!table.is_linear(chi)) throw std::invalid_argument("not a linear character");
  std::uint64_t order = 1;
  const std::uint64_t n = table.conductor();
  for (auto e : table.linear_exponents(chi)) order = lcm_u64(order, n / gcd_u64(e, n));
  return order;
}

std::vector<std::size_t> order2_linear_chars(const CharacterTable& table) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < table.size(); ++i)
    if (table.is_linear(i) && linear_order(table, i) == 2) out.push_back(i);
  return out;
}

}  // namespace parind
