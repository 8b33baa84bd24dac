#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zpsum/group.hpp"
#include "zpsum/multiset.hpp"

namespace zpsum {

// Characteristic bit vector over all p^m element indices.
class DenseSet {
 public:
  explicit DenseSet(GroupParams g)
      : group_(std::move(g)), words_((group_.order() + 63) / 64, 0) {}

  const GroupParams& group() const noexcept { return group_; }
  std::uint32_t size() const noexcept { return group_.order(); }

  bool test(Element x) const { return (words_[x.index >> 6] >> (x.index & 63)) & 1U; }
  void set(Element x) { words_[x.index >> 6] |= std::uint64_t{1} << (x.index & 63); }
  void reset(Element x) { words_[x.index >> 6] &= ~(std::uint64_t{1} << (x.index & 63)); }

  std::uint64_t card() const;
  std::vector<Element> elements() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  // Bytes in index order, bit i of the vector is bit (i % 8) of byte i / 8,
  // each byte written as two lowercase hex digits.
  std::string to_hex() const;
  static DenseSet from_hex(const GroupParams& g, const std::string& hex);

  bool is_subset_of(const DenseSet& other) const;

  friend bool operator==(const DenseSet& a, const DenseSet& b) {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }

 private:
  GroupParams group_;
  std::vector<std::uint64_t> words_;
};

// Sigma A: every sum of a submultiset, the empty sum included. Multiplicities
// are clamped to p-1 and elements processed in ascending index order; each
// element x extends the set along the p-cycles of translation by x.
DenseSet sumset(const Multiset& a);
std::uint64_t sumset_card(const Multiset& a);

// S + {0, x, 2x, ..., c x}.
void extend_by_progression(DenseSet& s, Element x, std::uint32_t c);

// Enumerates all prod(m_x + 1) choice vectors. Throws TooManySubmultisets
// beyond 2^24.
inline constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 24;
std::uint64_t submultiset_count(const Multiset& a);
DenseSet brute_force_sumset(const Multiset& a);

DenseSet project_set(const DenseSet& s, const Decomposition& d, Side side);
Multiset project_multiset(const Multiset& a, const Decomposition& d, Side side);

}  // namespace zpsum
