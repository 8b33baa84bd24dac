#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zpsum/group.hpp"

namespace zpsum {

// Sparse multiset over Z_p^m: element index -> multiplicity (always >= 1).
class Multiset {
 public:
  explicit Multiset(GroupParams g) : group_(std::move(g)) {}

  const GroupParams& group() const noexcept { return group_; }

  void insert(Element x, std::uint32_t count = 1);
  // Removes up to `count` copies; returns how many were removed.
  std::uint32_t remove(Element x, std::uint32_t count = 1);

  std::uint32_t multiplicity(Element x) const;
  // |A|, counted with multiplicity.
  std::uint64_t total() const noexcept { return total_; }
  // #A, the number of distinct elements.
  std::size_t support() const noexcept { return mult_.size(); }
  bool empty() const noexcept { return mult_.empty(); }
  bool contains_zero() const { return multiplicity(Element{0}) > 0; }

  // (index, multiplicity) in ascending index order.
  const std::map<std::uint32_t, std::uint32_t>& items() const noexcept { return mult_; }
  // Elements repeated by multiplicity, ascending.
  std::vector<Element> sorted_elements() const;

  // "p=<p> m=<m> : (c0,..)*k ..." with *1 omitted, ascending index order.
  std::string to_literal() const;

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.group_ == b.group_ && a.mult_ == b.mult_;
  }

 private:
  GroupParams group_;
  std::map<std::uint32_t, std::uint32_t> mult_;
  std::uint64_t total_ = 0;
};

// Sum of multiplicities over the members of h.
std::uint64_t subgroup_count(const Multiset& a, const Subgroup& h);

struct Violation {
  std::uint32_t rank = 0;
  std::uint64_t count = 0;
  std::uint64_t limit = 0;
  std::string subgroup;
};

struct ValidityReport {
  bool valid = false;
  bool zero_present = false;
  std::vector<Violation> violations;
  // Rank-2 groups only: the full-group clause (|A| < 2p) fired while every
  // line is within its limit. The line-only notion of validity would accept
  // such a multiset; the rank-graded one does not.
  bool full_rank_clause_only = false;
};

// Checks 0 not in A and, for every rank-d subgroup, count < d*p. Only the
// subgroups spanned by support elements can be the smallest witness of a
// violation, so those are the ones examined and reported.
// Throws EvenPrimeUnsupported for p = 2.
ValidityReport is_valid(const Multiset& a);

// {(1,0) x (p-1), (0,1) x (k+1)} in Z_p^2; 0 <= k <= p-3.
Multiset construct_extremal_2d(std::uint32_t p, std::uint32_t k);
// p-1 copies of x_1 plus {x_j + a x_1 : 0 <= a < p} for 2 <= j <= m; size mp-1.
Multiset construct_B(std::uint32_t p, std::uint32_t m);
// construct_B with one copy of x_1 removed; size mp-2.
Multiset construct_B_prime(std::uint32_t p, std::uint32_t m);

// Image of a multiset under an arbitrary map of element indices.
template <class Map>
Multiset map_multiset(const Multiset& a, Map&& f) {
  Multiset out(a.group());
  for (const auto& [x, c] : a.items()) out.insert(f(Element{x}), c);
  return out;
}

}  // namespace zpsum
