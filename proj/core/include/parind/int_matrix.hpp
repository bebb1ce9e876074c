#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parind/integer.hpp"

namespace parind {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Integer> row(std::size_t r) const;

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  bool is_zero() const;
  /// Exact determinant (fraction-free elimination); square matrices only.
  Integer determinant() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// x * A for a row vector x.
std::vector<Integer> row_times(const std::vector<Integer>& x, const IntMatrix& a);

struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

/// Row Hermite normal form with U * A == H: nonzero rows first, pivots positive and strictly
/// increasing in column, entries above each pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& a);

/// Some x with x * A == b, or nullopt when b is outside the row lattice of A.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);

/// Incremental row-echelon basis of the lattice spanned by a growing list of integer rows.
/// Each basis row remembers how it is written in terms of the inserted rows, so membership
/// queries come back with explicit coefficients.
class RowLattice {
 public:
  using Sparse = std::map<std::size_t, Integer>;

  /// With `track_kernel`, rows that reduce to zero keep their transforms (kernel vectors).
  explicit RowLattice(std::size_t cols, bool track_kernel = false) : cols_(cols), track_kernel_(track_kernel) {}

  /// Inserts the next input row (its index is the number of rows inserted so far).
  void add_row(const std::vector<Integer>& row);
  std::size_t inserted() const { return inserted_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }

  std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const;
  bool contains(const std::vector<Integer>& b) const;

  /// Brings the basis to Hermite normal form (idempotent).
  void reduce();
  /// Basis rows in pivot order (Hermite normal form after reduce()).
  std::vector<std::vector<Integer>> basis() const;
  std::vector<Sparse> basis_transforms() const;
  const std::vector<Sparse>& kernel() const { return kernel_; }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Integer> v;
    Sparse t;
  };

  std::size_t cols_;
  bool track_kernel_;
  std::size_t inserted_ = 0;
  std::vector<Row> basis_;  // sorted by pivot
  std::vector<Sparse> kernel_;
};

}  // namespace parind
