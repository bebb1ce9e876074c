#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace parind {

using Point = std::uint32_t;

/// A bijection of {0..n-1}. Printed and parsed 1-based in cycle notation.
///
/// Products act on the right: x^(g*h) == (x^g)^h, so `g * h` applies g first.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Parses a product of cycles such as "(1 2 3)(4 5)" on `degree` points.
  /// A degree of 0 means "the largest point mentioned".
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;

  bool is_identity() const;
  std::uint64_t order() const;
  int sign() const;
  /// Same permutation on a larger point set (new points fixed).
  Permutation extended(std::size_t degree) const;
  /// 1-based cycle notation; the identity prints as "()".
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace parind
