#pragma once

// Arithmetic in the elementary abelian group Z_p^m.
//
// Elements are encoded as integers index = sum_i coords[i] * p^i, so every
// set-valued object in the library is a bit vector over [0, p^m).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zpsum {

// Largest group order accepted anywhere in the library.
inline constexpr std::uint64_t kDenseSetCap = std::uint64_t{1} << 22;

bool is_prime(std::uint64_t n);

// Index of a group element under the base-p encoding.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

using Coords = std::vector<std::uint32_t>;

class GroupParams {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return order_; }
  // p^i for i in [0, m].
  std::uint32_t power(std::uint32_t i) const { return powers_[i]; }

  Coords coords(Element x) const;
  Element element(std::span<const std::uint32_t> coords) const;
  // Reduces each coordinate mod p first; accepts negative input.
  Element element_reduced(std::span<const std::int64_t> coords) const;
  std::uint32_t coord(Element x, std::uint32_t i) const {
    return (x.index / powers_[i]) % p_;
  }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element scalar_mul(std::uint32_t c, Element a) const;

  // "(c0,c1,...)"
  std::string format(Element x) const;

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.p_ == b.p_ && a.m_ == b.m_;
  }

 private:
  friend GroupParams make_group(std::uint64_t p, std::uint64_t m);
  GroupParams() = default;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> powers_;
};

// Throws NonPrime, RankZero or OrderTooLarge.
GroupParams make_group(std::uint64_t p, std::uint64_t m);

// A subgroup isomorphic to Z_p^d, stored by its reduced row echelon basis.
// The basis rows have a leading 1 in their pivot column and zeros in the
// other rows' pivot columns, which makes both membership and projection
// cheap.
class Subgroup {
 public:
  Subgroup(const GroupParams& g, std::vector<Coords> generators);

  std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(basis_.size()); }
  const std::vector<Coords>& basis() const noexcept { return basis_; }
  const std::vector<std::uint32_t>& pivots() const noexcept { return pivots_; }
  std::vector<Element> basis_elements() const;
  // All p^d members in ascending index order.
  const std::vector<Element>& elements() const noexcept { return elements_; }
  bool contains(Element x) const;

  // "span{(..),(..)}"
  std::string format() const;

  const GroupParams& group() const noexcept { return group_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.basis_ == b.basis_;
  }

 private:
  GroupParams group_;
  std::vector<Coords> basis_;
  std::vector<std::uint32_t> pivots_;
  std::vector<Element> elements_;
};

// Throws RankOutOfRange unless 1 <= d <= m.
std::vector<Subgroup> enumerate_subgroups(const GroupParams& g, std::uint32_t d);
std::vector<Subgroup> enumerate_lines(const GroupParams& g);

// The line <x>; x must be nonzero.
Subgroup line_through(const GroupParams& g, Element x);

// Smallest nonzero multiple of x whose first nonzero coordinate is 1.
Element line_direction(const GroupParams& g, Element x);

// Gaussian binomial [m choose d]_p, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t p, std::uint32_t m, std::uint32_t d);

enum class Side { H, K };

// G = H (+) K with projection tables indexed by element.
class Decomposition {
 public:
  const Subgroup& h() const noexcept { return h_; }
  const Subgroup& k() const noexcept { return k_; }
  Element project(Element z, Side side) const {
    return Element{side == Side::H ? proj_h_[z.index] : proj_k_[z.index]};
  }
  const std::vector<std::uint32_t>& table(Side side) const {
    return side == Side::H ? proj_h_ : proj_k_;
  }

 private:
  friend Decomposition complement(const GroupParams& g, const Subgroup& h);
  Decomposition(Subgroup h, Subgroup k) : h_(std::move(h)), k_(std::move(k)) {}

  Subgroup h_;
  Subgroup k_;
  std::vector<std::uint32_t> proj_h_;
  std::vector<std::uint32_t> proj_k_;
};

// K is spanned by the coordinate axes outside H's pivot columns.
// Throws NoComplementNeeded when rank(H) = m.
Decomposition complement(const GroupParams& g, const Subgroup& h);

// Reduced row echelon form over F_p; returns the nonzero rows.
std::vector<Coords> row_reduce(std::vector<Coords> rows, std::uint32_t p);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace zpsum
