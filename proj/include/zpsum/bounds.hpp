#pragma once

// Lower-bound certificates for #Sigma A. Every rule except ConjectureFloor
// is sound: whenever its preconditions hold, value <= #Sigma A.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zpsum/group.hpp"
#include "zpsum/multiset.hpp"

namespace zpsum {

enum class Rule { CD, KneserUnion, Sweep, LineBound, PairReplacement, ConjectureFloor };

std::string_view to_string(Rule r);

struct BoundCertificate {
  Rule rule = Rule::CD;
  std::int64_t value = 0;

  // Rule-specific parameters; unset fields do not apply to the rule.
  std::optional<std::string> subgroup;    // Sweep / LineBound / PairReplacement: the line H or <z>
  std::optional<std::string> complement;  // Sweep: K
  std::optional<Element> target;          // LineBound: x, PairReplacement: z
  std::optional<std::uint64_t> pairs;     // PairReplacement: j
  std::optional<std::uint64_t> max_pairs; // PairReplacement: largest admissible j
  std::optional<std::uint64_t> line_count;
  std::optional<std::uint64_t> d_size;    // Sweep: |D| (or #Sigma D when exact)
  std::optional<std::uint64_t> e_size;    // Sweep: |E| (or #Sigma E when exact)
  std::optional<bool> exact_factors;
  std::vector<std::uint64_t> part_cards;  // KneserUnion
};

// min(p, |A| + 1) for a zero-free multiset on one line.
// Throws ZeroInMultiset, NotOnOneLine.
BoundCertificate cd_bound(const Multiset& a);

// min(|G|, sum(cards) - (j-1) p^(m-1)). Throws EmptyPartition.
BoundCertificate kneser_union_bound(std::span<const std::uint64_t> cards, const GroupParams& g);

// Splits A into D = A on H and F = the rest, projects F onto the axis
// complement K and multiplies the Cauchy-Davenport bounds of the two parts.
// With exact_factors the factors are #Sigma D and #Sigma E themselves.
// Rank 2 only; throws ZeroInMultiset, RankOutOfRange.
BoundCertificate sweep_bound(const Multiset& a, const Subgroup& h, bool exact_factors = false);

// (|A| + 2 - p) p when <x> carries at least |A| - (p-1) points of a valid A
// with p-1 <= |A| <= 2p-2; nullopt when the line condition fails.
// Throws InvalidMultiset, SizeOutOfRange, ZeroTarget.
std::optional<BoundCertificate> line_bound(const Multiset& a, Element x);

// floor(1/2 sum_{t not on <z>} min(m_t, m_{z-t})).
std::uint64_t max_replaceable_pairs(const Multiset& a, Element z);

// min(p, 1 + j + L) * min(p, 1 + |A| - 2j - L), L the count on <z>.
// Throws InvalidMultiset, ZeroTarget, JOutOfRange.
BoundCertificate pair_replacement_bound(const Multiset& a, Element z, std::uint64_t j);

// Best certificate over all lines, all pair targets z in the admissible
// domain and all feasible j. Ties go to the earlier rule, then the smaller
// line/target index, then the smaller j.
BoundCertificate best_bound(const Multiset& a);

// Conjectured minimum of #Sigma A over valid A with |A| = n.
// Throws EvenPrimeUnsupported, SizeOutOfRange (n > mp - 1).
std::uint64_t conjecture_floor(std::uint32_t p, std::uint32_t m, std::uint64_t n);
BoundCertificate conjecture_floor_certificate(const Multiset& a);

using Rational = boost::multiprecision::cpp_rational;

Rational harmonic(std::uint32_t k);

struct ThresholdReport {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  Rational harmonic;
  // ceil(4 (k+1)^2 H_k - 2k)
  std::uint64_t p_min_large_p = 0;
  // Largest k with k <= sqrt(p / (2 ln p + 1)) - 1, or -1 if none.
  std::int64_t k_max_small_k = -1;
  bool large_p_hypothesis = false;  // k >= 2 and p >= p_min_large_p
  bool small_k_hypothesis = false;  // 2 <= k <= k_max_small_k
  static constexpr std::string_view kLogBase = "natural";
};

ThresholdReport thresholds(std::uint64_t p, std::uint32_t k);

}  // namespace zpsum
