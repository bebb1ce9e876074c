#include "parind/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "parind/integer.hpp"

namespace parind {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

struct ModField {
  u64 p;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

u64 choose_prime(u64 exponent, u64 order) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  for (u64 p = exponent + 1;; p += exponent)
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
}

u64 primitive_root(u64 p) {
  const auto factors = prime_factors(p - 1);
  const ModField f{p};
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && f.pow(g, (p - 1) / q) != 1;
    if (ok) return g;
  }
  return 1;  // p == 2
}

// Basis of {c : A c = 0} for a rows x cols matrix. Each basis vector is 1 at its own free
// column and 0 at the other free columns.
std::vector<std::pair<std::size_t, Vec>> nullspace(std::vector<Vec> a, std::size_t cols, const ModField& f) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t r = row;
    while (r < a.size() && a[r][c] == 0) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[row]);
    const u64 inv = f.inv(a[row][c]);
    for (auto& x : a[row]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      const u64 m = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[row][j]));
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::pair<std::size_t, Vec>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.sub(0, a[i][free]);
    out.emplace_back(free, std::move(v));
  }
  return out;
}

// A common eigenspace: columns of B with B[rows[t]][s] = delta_ts.
struct Space {
  std::vector<Vec> cols;
  std::vector<std::size_t> rows;
};

}  // namespace

CharacterTable::CharacterTable(GroupPtr group) : group_(std::move(group)) {
  const PermGroup& g = *group_;
  const auto& classes = g.classes();
  const std::size_t k = classes.size();
  const u64 order = g.order();
  conductor_ = g.exponent();
  prime_ = choose_prime(conductor_, order);
  const ModField f{prime_};

  std::vector<std::vector<std::uint32_t>> members(k);
  for (std::uint32_t x = 0; x < g.size(); ++x) members[g.class_of(x)].push_back(x);

  // a[i][j][l] = #{x in C_i : x^-1 z_l in C_j}
  std::vector<std::vector<Vec>> a(k, std::vector<Vec>(k, Vec(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    const std::uint32_t z = classes[l].representative;
    for (std::size_t i = 0; i < k; ++i)
      for (auto x : members[i]) ++a[i][g.class_of(g.mul(g.inverse(x), z))][l];
  }

  std::vector<Space> spaces(1);
  for (std::size_t s = 0; s < k; ++s) {
    Vec e(k, 0);
    e[s] = 1;
    spaces[0].cols.push_back(std::move(e));
    spaces[0].rows.push_back(s);
  }
  for (std::size_t i = 1; i < k; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.cols.size() == 1; })) break;
    std::vector<Space> next;
    for (auto& sp : spaces) {
      const std::size_t d = sp.cols.size();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // Restriction R of M_i to the space, read off at the identity rows.
      std::vector<Vec> r(d, Vec(d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = 0; t < d; ++t) {
          const std::size_t j = sp.rows[t];
          u64 acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            if (a[i][j][l] && sp.cols[s][l]) acc = f.add(acc, f.mul(a[i][j][l] % prime_, sp.cols[s][l]));
          r[t][s] = acc;
        }
      }
      std::size_t found = 0;
      for (u64 lambda = 0; lambda < prime_ && found < d; ++lambda) {
        auto shifted = r;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
        auto null = nullspace(std::move(shifted), d, f);
        if (null.empty()) continue;
        Space piece;
        for (const auto& [free, c] : null) {
          Vec v(k, 0);
          for (std::size_t s = 0; s < d; ++s)
            if (c[s])
              for (std::size_t l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(c[s], sp.cols[s][l]));
          piece.cols.push_back(std::move(v));
          piece.rows.push_back(sp.rows[free]);
        }
        found += piece.cols.size();
        next.push_back(std::move(piece));
      }
      if (found != d) throw std::runtime_error("class matrix is not diagonalisable over the chosen prime field");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw std::runtime_error("class matrices failed to separate the irreducible characters");

  const u64 zeta = f.pow(primitive_root(prime_), (prime_ - 1) / conductor_);
  struct Row {
    u64 degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (const auto& sp : spaces) {
    Vec w = sp.cols[0];
    if (w[0] == 0) throw std::runtime_error("central character vanishes at the identity");
    const u64 inv0 = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, inv0);
    // chi(1)^2 = |G| / sum_j w_j w_j* / |C_j|
    u64 s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = f.add(s, f.mul(f.mul(w[j], w[g.inverse_class(static_cast<std::uint32_t>(j))]),
                         f.inv(classes[j].size % prime_)));
    const u64 d2 = f.mul(order % prime_, f.inv(s));
    u64 degree = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (f.mul(d, d) == d2) degree = d;
    if (degree == 0) throw std::runtime_error("no admissible character degree");
    Vec chi(k);
    for (std::size_t j = 0; j < k; ++j) chi[j] = f.mul(f.mul(degree, w[j]), f.inv(classes[j].size % prime_));

    Row row{degree, {}};
    for (std::size_t j = 0; j < k; ++j) {
      const u64 o = classes[j].element_order;
      const u64 step = conductor_ / o;
      const u64 zo = f.pow(zeta, step);
      const u64 inv_o = f.inv(o % prime_);
      std::vector<Integer> coeffs(conductor_);
      for (u64 e = 0; e < o; ++e) {
        u64 m = 0;
        for (u64 t = 0; t < o; ++t) {
          const u64 val = chi[g.power_class(static_cast<std::uint32_t>(j), static_cast<std::int64_t>(t))];
          m = f.add(m, f.mul(val, f.pow(zo, (o - (e * t) % o) % o)));
        }
        m = f.mul(m, inv_o);
        if (m > degree) throw std::runtime_error("eigenvalue multiplicity exceeds the degree");
        coeffs[e * step] = static_cast<long>(m);
      }
      row.values.push_back(Cyclotomic::from_exponents(conductor_, coeffs));
    }
    rows.push_back(std::move(row));
  }

  auto is_trivial = [&](const Row& r) {
    return r.degree == 1 && std::all_of(r.values.begin(), r.values.end(), [](const Cyclotomic& v) { return v == 1; });
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
    const bool tx = is_trivial(x), ty = is_trivial(y);
    if (tx != ty) return tx;
    if (x.degree != y.degree) return x.degree < y.degree;
    return std::lexicographical_compare(x.values.begin(), x.values.end(), y.values.begin(), y.values.end(),
                                        Cyclotomic::less);
  });
  u64 sum_sq = 0;
  for (auto& r : rows) {
    sum_sq += r.degree * r.degree;
    degrees_.push_back(r.degree);
    values_.push_back(std::move(r.values));
  }
  if (sum_sq != order) throw std::runtime_error("character degrees do not satisfy sum of squares = |G|");

  conj_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Cyclotomic> c;
    for (const auto& v : values_[i]) c.push_back(v.conj());
    auto it = std::find(values_.begin(), values_.end(), c);
    if (it == values_.end()) throw std::runtime_error("character table is not closed under conjugation");
    conj_[i] = static_cast<std::size_t>(it - values_.begin());
  }

  lin_exp_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    det_exp_.push_back(newton_determinant(*this, values_[i], degrees_[i]));
    if (degrees_[i] == 1) {
      lin_exp_[i] = det_exp_[i];
      linear_lookup_.emplace(lin_exp_[i], i);
    }
  }
}

std::int64_t CharacterTable::linear_index(const std::vector<std::uint64_t>& exponents) const {
  auto it = linear_lookup_.find(exponents);
  return it == linear_lookup_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::vector<std::uint64_t> newton_determinant(const CharacterTable& table, const std::vector<Cyclotomic>& values,
                                              std::uint64_t degree) {
  const std::size_t k = values.size();
  const std::uint64_t n = table.conductor();
  std::vector<std::uint64_t> out(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Cyclotomic> p(degree + 1);
    for (std::uint64_t i = 1; i <= degree; ++i)
      p[i] = values[table.power_map(static_cast<std::uint32_t>(c), static_cast<std::int64_t>(i))];
    // k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i
    std::vector<Cyclotomic> e(degree + 1);
    e[0] = Cyclotomic(1);
    for (std::uint64_t m = 1; m <= degree; ++m) {
      Cyclotomic acc(0);
      for (std::uint64_t i = 1; i <= m; ++i) {
        const Cyclotomic term = e[m - i] * p[i];
        acc = (i % 2) ? acc + term : acc - term;
      }
      e[m] = acc.divided(Integer(static_cast<unsigned long>(m)));
    }
    const auto exp = e[degree].lifted(n).root_of_unity_exponent();
    if (!exp) throw std::domain_error("determinant value is not a root of unity");
    out[c] = *exp;
  }
  return out;
}

std::string CharacterTable::to_string() const {
  const PermGroup& g = *group_;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""}, sizes{"size"};
  for (const auto& c : g.classes()) {
    head.push_back(g.element(c.representative).to_cycles());
    sizes.push_back(std::to_string(c.size));
  }
  cells.push_back(head);
  cells.push_back(sizes);
  for (std::size_t i = 0; i < size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1)};
    for (const auto& v : values_[i]) row.push_back(v.to_string(conductor_));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << "z = exp(2 pi i / " << conductor_ << ")\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "  " : "") << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace parind
