#include "zpsum/group.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "zpsum/error.hpp"

namespace zpsum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid; a is assumed nonzero mod p.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

GroupParams make_group(std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::RankZero, "rank must be at least 1");
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    order *= p;
    if (order > kDenseSetCap) {
      throw Error(ErrorCode::OrderTooLarge, std::to_string(p) + "^" + std::to_string(m) +
                                                " exceeds the dense-set cap of 2^22");
    }
  }
  GroupParams g;
  g.p_ = static_cast<std::uint32_t>(p);
  g.m_ = static_cast<std::uint32_t>(m);
  g.order_ = static_cast<std::uint32_t>(order);
  g.powers_.resize(m + 1);
  g.powers_[0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i) g.powers_[i] = g.powers_[i - 1] * g.p_;
  return g;
}

Coords GroupParams::coords(Element x) const {
  Coords c(m_);
  std::uint32_t v = x.index;
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Element GroupParams::element(std::span<const std::uint32_t> coords) const {
  std::uint32_t index = 0;
  for (std::uint32_t i = 0; i < m_; ++i) index += (coords[i] % p_) * powers_[i];
  return Element{index};
}

Element GroupParams::element_reduced(std::span<const std::int64_t> coords) const {
  std::uint32_t index = 0;
  const auto pp = static_cast<std::int64_t>(p_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    auto r = coords[i] % pp;
    if (r < 0) r += pp;
    index += static_cast<std::uint32_t>(r) * powers_[i];
  }
  return Element{index};
}

Element GroupParams::add(Element a, Element b) const {
  std::uint32_t out = 0;
  std::uint32_t x = a.index, y = b.index;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * powers_[i];
    x /= p_;
    y /= p_;
  }
  return Element{out};
}

Element GroupParams::neg(Element a) const {
  std::uint32_t out = 0;
  std::uint32_t x = a.index;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * powers_[i];
    x /= p_;
  }
  return Element{out};
}

Element GroupParams::sub(Element a, Element b) const { return add(a, neg(b)); }

Element GroupParams::scalar_mul(std::uint32_t c, Element a) const {
  c %= p_;
  std::uint32_t out = 0;
  std::uint32_t x = a.index;
  for (std::uint32_t i = 0; i < m_; ++i) {
    auto d = static_cast<std::uint32_t>((std::uint64_t{x % p_} * c) % p_);
    out += d * powers_[i];
    x /= p_;
  }
  return Element{out};
}

std::string GroupParams::format(Element x) const {
  std::ostringstream os;
  os << '(';
  auto c = coords(x);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ')';
  return os.str();
}

std::vector<Coords> row_reduce(std::vector<Coords> rows, std::uint32_t p) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const std::uint32_t inv = inverse_mod(rows[lead][col] % p, p);
    for (auto& v : rows[lead]) v = static_cast<std::uint32_t>((std::uint64_t{v} * inv) % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead) continue;
      const std::uint32_t f = rows[r][col] % p;
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        const std::uint64_t sub = (std::uint64_t{f} * rows[lead][c]) % p;
        rows[r][c] = static_cast<std::uint32_t>((rows[r][c] % p + p - sub) % p);
      }
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

Subgroup::Subgroup(const GroupParams& g, std::vector<Coords> generators) : group_(g) {
  for (const auto& r : generators) {
    if (r.size() != g.m()) throw Error(ErrorCode::DimensionMismatch, "generator arity differs from rank");
  }
  basis_ = row_reduce(std::move(generators), g.p());
  for (const auto& row : basis_) {
    const auto it = std::find_if(row.begin(), row.end(), [](std::uint32_t v) { return v != 0; });
    pivots_.push_back(static_cast<std::uint32_t>(it - row.begin()));
  }
  elements_.assign(1, Element{0});
  elements_.reserve(g.power(static_cast<std::uint32_t>(basis_.size())));
  for (const auto& row : basis_) {
    const Element b = g.element(row);
    const std::size_t prev = elements_.size();
    Element step = b;
    for (std::uint32_t c = 1; c < g.p(); ++c) {
      for (std::size_t i = 0; i < prev; ++i) elements_.push_back(g.add(elements_[i], step));
      step = g.add(step, b);
    }
  }
  std::sort(elements_.begin(), elements_.end());
}

std::vector<Element> Subgroup::basis_elements() const {
  std::vector<Element> out;
  for (const auto& row : basis_) out.push_back(group_.element(row));
  return out;
}

bool Subgroup::contains(Element x) const {
  const std::uint32_t p = group_.p();
  Coords c = group_.coords(x);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::uint32_t f = c[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const std::uint64_t sub = (std::uint64_t{f} * basis_[r][j]) % p;
      c[j] = static_cast<std::uint32_t>((c[j] + p - sub) % p);
    }
  }
  return std::all_of(c.begin(), c.end(), [](std::uint32_t v) { return v == 0; });
}

std::string Subgroup::format() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ',';
    out += group_.format(group_.element(basis_[i]));
  }
  out += '}';
  return out;
}

std::uint64_t gaussian_binomial(std::uint64_t p, std::uint32_t m, std::uint32_t d) {
  if (d > m) return 0;
  // [m choose i+1] = [m choose i] * (p^(m-i) - 1) / (p^(i+1) - 1), exact at every step.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    unsigned __int128 num = 1, den = 1;
    for (std::uint32_t k = 0; k < m - i; ++k) {
      num *= p;
      if (num > kMax) return kMax;
    }
    for (std::uint32_t k = 0; k < i + 1; ++k) den *= p;
    acc = acc * (num - 1) / (den - 1);
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<Subgroup> enumerate_subgroups(const GroupParams& g, std::uint32_t d) {
  if (d < 1 || d > g.m()) {
    throw Error(ErrorCode::RankOutOfRange,
                "rank " + std::to_string(d) + " outside [1, " + std::to_string(g.m()) + "]");
  }
  if (gaussian_binomial(g.p(), g.m(), d) > (std::uint64_t{1} << 24)) {
    throw Error(ErrorCode::OrderTooLarge, "too many rank-" + std::to_string(d) + " subgroups to list");
  }
  const std::uint32_t m = g.m(), p = g.p();
  std::vector<Subgroup> out;
  std::vector<std::uint32_t> pivots(d);
  for (std::uint32_t i = 0; i < d; ++i) pivots[i] = i;

  while (true) {
    // Free positions: row r, column c > pivots[r], c not a pivot column.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
    for (std::uint32_t r = 0; r < d; ++r) {
      for (std::uint32_t c = pivots[r] + 1; c < m; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      }
    }
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      std::vector<Coords> rows(d, Coords(m, 0));
      for (std::uint32_t r = 0; r < d; ++r) rows[r][pivots[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = digits[f];
      out.emplace_back(g, std::move(rows));
      std::size_t f = free.size();
      while (f > 0 && ++digits[f - 1] == p) digits[--f] = 0;
      if (f == 0) break;
    }
    // Next pivot combination in lexicographic order.
    std::int64_t i = static_cast<std::int64_t>(d) - 1;
    while (i >= 0 && pivots[i] == m - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

std::vector<Subgroup> enumerate_lines(const GroupParams& g) { return enumerate_subgroups(g, 1); }

Element line_direction(const GroupParams& g, Element x) {
  const Coords c = g.coords(x);
  for (std::uint32_t v : c) {
    if (v != 0) return g.scalar_mul(inverse_mod(v, g.p()), x);
  }
  return Element{0};
}

Subgroup line_through(const GroupParams& g, Element x) {
  return Subgroup(g, {g.coords(x)});
}

Decomposition complement(const GroupParams& g, const Subgroup& h) {
  if (h.rank() >= g.m()) {
    throw Error(ErrorCode::NoComplementNeeded, "subgroup has full rank " + std::to_string(h.rank()));
  }
  std::vector<Coords> axes;
  for (std::uint32_t c = 0; c < g.m(); ++c) {
    if (std::find(h.pivots().begin(), h.pivots().end(), c) != h.pivots().end()) continue;
    Coords e(g.m(), 0);
    e[c] = 1;
    axes.push_back(std::move(e));
  }
  Decomposition dec(h, Subgroup(g, std::move(axes)));
  const auto basis = h.basis_elements();
  dec.proj_h_.resize(g.order());
  dec.proj_k_.resize(g.order());
  for (std::uint32_t z = 0; z < g.order(); ++z) {
    Element acc{0};
    for (std::size_t r = 0; r < basis.size(); ++r) {
      acc = g.add(acc, g.scalar_mul(g.coord(Element{z}, h.pivots()[r]), basis[r]));
    }
    dec.proj_h_[z] = acc.index;
    dec.proj_k_[z] = g.sub(Element{z}, acc).index;
  }
  return dec;
}

}  // namespace zpsum
