#include "parind/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace parind {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not conform");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const { return parind::is_zero(data_); }

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Integer> row_times(const std::vector<Integer>& x, const IntMatrix& a) {
  if (x.size() != a.rows()) throw std::invalid_argument("vector length does not match matrix rows");
  std::vector<Integer> out(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] += x[r] * a(r, c);
  }
  return out;
}

namespace {

void add_scaled(RowLattice::Sparse& dst, const RowLattice::Sparse& src, const Integer& q) {
  for (const auto& [idx, val] : src) {
    auto [it, fresh] = dst.try_emplace(idx, 0);
    it->second += q * val;
    if (it->second == 0) dst.erase(it);
  }
}

RowLattice::Sparse scaled(const RowLattice::Sparse& src, const Integer& q) {
  RowLattice::Sparse out;
  if (q == 0) return out;
  for (const auto& [idx, val] : src) out.emplace(idx, q * val);
  return out;
}

}  // namespace

void RowLattice::add_row(const std::vector<Integer>& row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match lattice dimension");
  Row r{0, row, {{inserted_, Integer(1)}}};
  ++inserted_;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (r.v[c] == 0) continue;
    while (k < basis_.size() && basis_[k].pivot < c) ++k;
    if (k == basis_.size() || basis_[k].pivot != c) {
      r.pivot = c;
      if (r.v[c] < 0) {
        for (auto& x : r.v) x = -x;
        for (auto& [idx, val] : r.t) val = -val;
      }
      basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(k), std::move(r));
      return;
    }
    Row& e = basis_[k];
    if (mpz_divisible_p(r.v[c].get_mpz_t(), e.v[c].get_mpz_t())) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), r.v[c].get_mpz_t(), e.v[c].get_mpz_t());
      for (std::size_t j = c; j < cols_; ++j)
        if (e.v[j] != 0) r.v[j] -= q * e.v[j];
      add_scaled(r.t, e.t, -q);
      continue;
    }
    // Unimodular 2x2 step [[s, t], [-b, a]] replacing the pivot by gcd(e_c, r_c).
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), e.v[c].get_mpz_t(), r.v[c].get_mpz_t());
    Integer a, b;
    mpz_divexact(a.get_mpz_t(), e.v[c].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), r.v[c].get_mpz_t(), g.get_mpz_t());
    std::vector<Integer> ev(cols_), rv(cols_);
    for (std::size_t j = c; j < cols_; ++j) {
      ev[j] = s * e.v[j] + t * r.v[j];
      rv[j] = a * r.v[j] - b * e.v[j];
    }
    Sparse et = scaled(e.t, s);
    add_scaled(et, r.t, t);
    Sparse rt = scaled(r.t, a);
    add_scaled(rt, e.t, -b);
    e.v = std::move(ev);
    e.t = std::move(et);
    r.v = std::move(rv);
    r.t = std::move(rt);
  }
  if (track_kernel_) kernel_.push_back(std::move(r.t));
}

std::optional<std::vector<Integer>> RowLattice::solve(const std::vector<Integer>& b) const {
  if (b.size() != cols_) throw std::invalid_argument("target length does not match lattice dimension");
  std::vector<Integer> residual = b;
  std::vector<Integer> x(inserted_);
  for (const auto& row : basis_) {
    const Integer& v = residual[row.pivot];
    if (v == 0) continue;
    if (!mpz_divisible_p(v.get_mpz_t(), row.v[row.pivot].get_mpz_t())) return std::nullopt;
    Integer y;
    mpz_divexact(y.get_mpz_t(), v.get_mpz_t(), row.v[row.pivot].get_mpz_t());
    for (std::size_t j = row.pivot; j < cols_; ++j)
      if (row.v[j] != 0) residual[j] -= y * row.v[j];
    for (const auto& [idx, val] : row.t) x[idx] += y * val;
  }
  if (!parind::is_zero(residual)) return std::nullopt;
  return x;
}

bool RowLattice::contains(const std::vector<Integer>& b) const { return solve(b).has_value(); }

void RowLattice::reduce() {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = basis_[i].pivot;
    const Integer& piv = basis_[i].v[p];
    for (std::size_t j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis_[j].v[p].get_mpz_t(), piv.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = p; c < cols_; ++c)
        if (basis_[i].v[c] != 0) basis_[j].v[c] -= q * basis_[i].v[c];
      add_scaled(basis_[j].t, basis_[i].t, -q);
    }
  }
}

std::vector<std::vector<Integer>> RowLattice::basis() const {
  std::vector<std::vector<Integer>> out;
  for (const auto& r : basis_) out.push_back(r.v);
  return out;
}

std::vector<RowLattice::Sparse> RowLattice::basis_transforms() const {
  std::vector<Sparse> out;
  for (const auto& r : basis_) out.push_back(r.t);
  return out;
}

HnfResult hnf(const IntMatrix& a) {
  RowLattice lat(a.cols(), true);
  for (std::size_t r = 0; r < a.rows(); ++r) lat.add_row(a.row(r));
  lat.reduce();
  HnfResult res{IntMatrix(a.rows(), a.cols()), IntMatrix(a.rows(), a.rows()), lat.rank()};
  const auto basis = lat.basis();
  const auto transforms = lat.basis_transforms();
  std::size_t out = 0;
  for (std::size_t i = 0; i < basis.size(); ++i, ++out) {
    for (std::size_t c = 0; c < a.cols(); ++c) res.H(out, c) = basis[i][c];
    for (const auto& [idx, val] : transforms[i]) res.U(out, idx) = val;
  }
  for (const auto& k : lat.kernel()) {
    for (const auto& [idx, val] : k) res.U(out, idx) = val;
    ++out;
  }
  return res;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b) {
  RowLattice lat(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) lat.add_row(a.row(r));
  return lat.solve(b);
}

}  // namespace parind
