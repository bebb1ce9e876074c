#include "parind/element_set.hpp"

namespace parind {

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
  return r;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::uint32_t i) { out.push_back(i); });
  return out;
}

bool ElementSet::lex_less(const ElementSet& a, const ElementSet& b) {
  // At the first differing bit x the owner's list continues with x. The other list is
  // smaller only if it stops there (it is then a proper prefix).
  auto has_above = [](const ElementSet& s, std::size_t w, int bit) {
    const std::uint64_t mask = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    if (s.words_[w] & mask) return true;
    for (std::size_t k = w + 1; k < s.words_.size(); ++k)
      if (s.words_[k]) return true;
    return false;
  };
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (!diff) continue;
    const int bit = __builtin_ctzll(diff);
    const bool a_has = (a.words_[w] >> bit) & 1u;
    return a_has ? has_above(b, w, bit) : !has_above(a, w, bit);
  }
  return false;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
  return h;
}

}  // namespace parind
