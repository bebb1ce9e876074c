#include "parind/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace parind {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

namespace {

std::recursive_mutex poly_mutex;
std::map<std::uint64_t, std::vector<Integer>> poly_cache;

// Monic exact division of polynomials (constant term first).
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer c = num[k];
    q[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return q;
}

void check_conductor(std::uint64_t n) {
  if (n == 0 || n > Cyclotomic::kMaxConductor)
    throw std::overflow_error("cyclotomic conductor " + std::to_string(n) + " exceeds the bound " +
                              std::to_string(Cyclotomic::kMaxConductor));
}

struct Field {
  std::uint64_t n;
  std::size_t phi;
  const std::vector<Integer>* poly;
  /// x^e reduced, for every e in [0, n); empty when too large to tabulate.
  std::vector<std::vector<Integer>> powers;

  explicit Field(std::uint64_t m) : n(m), phi(euler_phi(m)), poly(&cyclotomic_polynomial(m)) {
    if (static_cast<double>(n) * static_cast<double>(phi) <= 4e6) {
      powers.reserve(n);
      std::vector<Integer> cur(phi);
      cur[0] = 1;
      for (std::uint64_t e = 0; e < n; ++e) {
        powers.push_back(cur);
        cur = times_x(cur);
      }
    }
  }

  std::vector<Integer> times_x(const std::vector<Integer>& v) const {
    std::vector<Integer> out(phi);
    const Integer top = v[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) out[i] = v[i - 1];
    out[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) out[i] -= top * (*poly)[i];
    return out;
  }

  std::vector<Integer> monomial(std::uint64_t e) const {
    e %= n;
    if (!powers.empty()) return powers[e];
    std::vector<Integer> cur(phi);
    cur[0] = 1;
    for (std::uint64_t i = 0; i < e; ++i) cur = times_x(cur);
    return cur;
  }

  /// Reduces a vector indexed by exponents mod n.
  std::vector<Integer> reduce(const std::vector<Integer>& acc) const {
    std::vector<Integer> out(phi);
    for (std::size_t e = 0; e < acc.size(); ++e) {
      if (acc[e] == 0) continue;
      if (e < phi) {
        out[e] += acc[e];
        continue;
      }
      const auto m = powers.empty() ? monomial(e) : std::vector<Integer>();
      const auto& row = powers.empty() ? m : powers[e];
      for (std::size_t i = 0; i < phi; ++i)
        if (row[i] != 0) out[i] += acc[e] * row[i];
    }
    return out;
  }
};

std::mutex field_mutex;
std::map<std::uint64_t, std::unique_ptr<Field>> field_cache;

const Field& field(std::uint64_t n) {
  check_conductor(n);
  std::lock_guard lock(field_mutex);
  auto& slot = field_cache[n];
  if (!slot) slot = std::make_unique<Field>(n);
  return *slot;
}

std::uint64_t common_conductor(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t m = lcm_u64(a, b);
  check_conductor(m);
  return m;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t n) {
  check_conductor(n);
  std::lock_guard lock(poly_mutex);
  if (auto it = poly_cache.find(n); it != poly_cache.end()) return it->second;
  std::vector<Integer> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  return poly_cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(const Integer& v) : n_(1), c_{v} {}

Cyclotomic Cyclotomic::zeta(std::uint64_t n, std::int64_t k) {
  const Field& f = field(n);
  const auto m = static_cast<std::int64_t>(n);
  return Cyclotomic(n, f.monomial(static_cast<std::uint64_t>(((k % m) + m) % m)));
}

Cyclotomic Cyclotomic::from_exponents(std::uint64_t n, const std::vector<Integer>& coeffs) {
  const Field& f = field(n);
  std::vector<Integer> acc(n);
  for (std::size_t e = 0; e < coeffs.size(); ++e) acc[e % n] += coeffs[e];
  return Cyclotomic(n, f.reduce(acc));
}

Cyclotomic Cyclotomic::lifted(std::uint64_t m) const {
  if (m == n_) return *this;
  if (m % n_) throw std::invalid_argument("cannot lift a cyclotomic to a non-multiple conductor");
  const Field& f = field(m);
  std::vector<Integer> acc(m);
  const std::uint64_t step = m / n_;
  for (std::size_t i = 0; i < c_.size(); ++i) acc[i * step] = c_[i];
  return Cyclotomic(m, f.reduce(acc));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    const auto m = common_conductor(n_, o.n_);
    return lifted(m) + o.lifted(m);
  }
  auto c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    const auto m = common_conductor(n_, o.n_);
    return lifted(m) - o.lifted(m);
  }
  auto c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  auto c = c_;
  for (auto& x : c) x = -x;
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (n_ == 1) return o.scaled(c_[0]);
  if (o.n_ == 1) return scaled(o.c_[0]);
  if (n_ != o.n_) {
    const auto m = common_conductor(n_, o.n_);
    return lifted(m) * o.lifted(m);
  }
  const Field& f = field(n_);
  std::vector<Integer> acc(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) acc[(i + j) % n_] += c_[i] * o.c_[j];
  }
  return Cyclotomic(n_, f.reduce(acc));
}

Cyclotomic Cyclotomic::scaled(const Integer& k) const {
  auto c = c_;
  for (auto& x : c) x *= k;
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::divided(const Integer& k) const {
  if (k == 0) throw std::domain_error("division of a cyclotomic by zero");
  auto c = c_;
  for (auto& x : c) {
    if (!mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t())) throw std::domain_error("inexact cyclotomic division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  }
  return Cyclotomic(n_, std::move(c));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  const auto m = common_conductor(n_, o.n_);
  return lifted(m).c_ == o.lifted(m).c_;
}

bool Cyclotomic::is_zero() const { return parind::is_zero(c_); }

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Integer Cyclotomic::integer_value() const {
  if (!is_integer()) throw std::domain_error("cyclotomic value is not an integer");
  return c_[0];
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (n_ <= 2) return *this;
  const auto m = static_cast<std::int64_t>(n_);
  const auto kk = static_cast<std::uint64_t>(((k % m) + m) % m);
  if (gcd_u64(kk, n_) != 1) throw std::invalid_argument("galois exponent must be coprime to the conductor");
  const Field& f = field(n_);
  std::vector<Integer> acc(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) acc[(i * kk) % n_] = c_[i];
  return Cyclotomic(n_, f.reduce(acc));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::optional<std::uint64_t> Cyclotomic::root_of_unity_exponent() const {
  const Field& f = field(n_);
  for (std::uint64_t e = 0; e < n_; ++e)
    if (f.monomial(e) == c_) return e;
  return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_);
    z += c_[i].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::string Cyclotomic::to_string(std::uint64_t conductor, const std::string& var) const {
  const Cyclotomic v = conductor ? lifted(conductor) : *this;
  std::string out;
  for (std::size_t i = 0; i < v.c_.size(); ++i) {
    const Integer& c = v.c_[i];
    if (c == 0) continue;
    const Integer a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool Cyclotomic::less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    const auto m = common_conductor(a.n_, b.n_);
    return less(a.lifted(m), b.lifted(m));
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

}  // namespace parind
