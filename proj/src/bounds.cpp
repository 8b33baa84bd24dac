#include "zpsum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "zpsum/error.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::CD: return "CD";
    case Rule::KneserUnion: return "KneserUnion";
    case Rule::Sweep: return "Sweep";
    case Rule::LineBound: return "LineBound";
    case Rule::PairReplacement: return "PairReplacement";
    case Rule::ConjectureFloor: return "ConjectureFloor";
  }
  return "Unknown";
}

namespace {

std::int64_t cd(std::uint64_t p, std::uint64_t n) {
  return static_cast<std::int64_t>(std::min(p, n + 1));
}

void require_rank2(const Multiset& a) {
  if (a.group().m() != 2) {
    throw Error(ErrorCode::RankOutOfRange, "this bound is defined for rank-2 groups only");
  }
}

void require_valid(const Multiset& a) {
  require_rank2(a);
  const ValidityReport v = is_valid(a);
  if (!v.valid) throw Error(ErrorCode::InvalidMultiset, a.to_literal());
}

}  // namespace

BoundCertificate cd_bound(const Multiset& a) {
  const GroupParams& g = a.group();
  if (a.contains_zero()) throw Error(ErrorCode::ZeroInMultiset, a.to_literal());
  std::optional<Element> dir;
  for (const auto& [x, c] : a.items()) {
    const Element d = line_direction(g, Element{x});
    if (dir && *dir != d) throw Error(ErrorCode::NotOnOneLine, a.to_literal());
    dir = d;
  }
  BoundCertificate cert;
  cert.rule = Rule::CD;
  cert.value = cd(g.p(), a.total());
  if (dir) cert.subgroup = line_through(g, *dir).format();
  return cert;
}

BoundCertificate kneser_union_bound(std::span<const std::uint64_t> cards, const GroupParams& g) {
  if (cards.empty()) throw Error(ErrorCode::EmptyPartition, "no parts");
  std::int64_t sum = 0;
  for (std::uint64_t c : cards) sum += static_cast<std::int64_t>(c);
  const auto largest_proper = static_cast<std::int64_t>(g.power(g.m() - 1));
  const auto parts = static_cast<std::int64_t>(cards.size());
  BoundCertificate cert;
  cert.rule = Rule::KneserUnion;
  cert.value = std::min<std::int64_t>(g.order(), sum - (parts - 1) * largest_proper);
  cert.part_cards.assign(cards.begin(), cards.end());
  return cert;
}

BoundCertificate sweep_bound(const Multiset& a, const Subgroup& h, bool exact_factors) {
  require_rank2(a);
  if (a.contains_zero()) throw Error(ErrorCode::ZeroInMultiset, a.to_literal());
  if (h.rank() != 1) throw Error(ErrorCode::RankOutOfRange, "sweep needs a line");
  const GroupParams& g = a.group();
  const Decomposition dec = complement(g, h);
  Multiset d(g), e(g);
  for (const auto& [x, c] : a.items()) {
    if (h.contains(Element{x})) {
      d.insert(Element{x}, c);
    } else {
      e.insert(dec.project(Element{x}, Side::K), c);
    }
  }
  BoundCertificate cert;
  cert.rule = Rule::Sweep;
  cert.subgroup = h.format();
  cert.complement = dec.k().format();
  cert.exact_factors = exact_factors;
  cert.line_count = d.total();
  if (exact_factors) {
    cert.d_size = sumset_card(d);
    cert.e_size = sumset_card(e);
    cert.value = static_cast<std::int64_t>(*cert.d_size * *cert.e_size);
  } else {
    cert.d_size = d.total();
    cert.e_size = e.total();
    cert.value = cd(g.p(), d.total()) * cd(g.p(), e.total());
  }
  return cert;
}

namespace {

// The public entry points validate A; best_bound validates once and calls
// these directly.
std::optional<BoundCertificate> line_bound_unchecked(const Multiset& a, Element x) {
  const std::uint64_t p = a.group().p();
  const std::uint64_t n = a.total();
  const Subgroup line = line_through(a.group(), x);
  const std::uint64_t on_line = subgroup_count(a, line);
  if (on_line + (p - 1) < n) return std::nullopt;
  BoundCertificate cert;
  cert.rule = Rule::LineBound;
  cert.value = static_cast<std::int64_t>((n + 2 - p) * p);
  cert.subgroup = line.format();
  cert.target = x;
  cert.line_count = on_line;
  return cert;
}

BoundCertificate pair_replacement_unchecked(const Multiset& a, Element z, std::uint64_t j, std::uint64_t j_max) {
  const GroupParams& g = a.group();
  const Subgroup line = line_through(g, z);
  const std::uint64_t on_line = subgroup_count(a, line);
  BoundCertificate cert;
  cert.rule = Rule::PairReplacement;
  cert.subgroup = line.format();
  cert.target = z;
  cert.pairs = j;
  cert.max_pairs = j_max;
  cert.line_count = on_line;
  // j <= j_max <= (|A| - L) / 2, so the second count is at least zero.
  cert.value = cd(g.p(), j + on_line) * cd(g.p(), a.total() - 2 * j - on_line);
  return cert;
}

}  // namespace

std::optional<BoundCertificate> line_bound(const Multiset& a, Element x) {
  require_valid(a);
  if (x.index == 0) throw Error(ErrorCode::ZeroTarget, "x must be nonzero");
  const std::uint64_t p = a.group().p();
  const std::uint64_t n = a.total();
  if (n + 1 < p || n > 2 * p - 2) {
    throw Error(ErrorCode::SizeOutOfRange, "|A| = " + std::to_string(n) + " outside [p-1, 2p-2]");
  }
  return line_bound_unchecked(a, x);
}

std::uint64_t max_replaceable_pairs(const Multiset& a, Element z) {
  const GroupParams& g = a.group();
  const Subgroup line = line_through(g, z);
  std::uint64_t twice = 0;
  for (const auto& [t, c] : a.items()) {
    if (line.contains(Element{t})) continue;
    twice += std::min(c, a.multiplicity(g.sub(z, Element{t})));
  }
  return twice / 2;
}

BoundCertificate pair_replacement_bound(const Multiset& a, Element z, std::uint64_t j) {
  require_valid(a);
  if (z.index == 0) throw Error(ErrorCode::ZeroTarget, "z must be nonzero");
  const std::uint64_t j_max = max_replaceable_pairs(a, z);
  if (j > j_max) {
    throw Error(ErrorCode::JOutOfRange, "j = " + std::to_string(j) + " exceeds " + std::to_string(j_max));
  }
  return pair_replacement_unchecked(a, z, j, j_max);
}

BoundCertificate best_bound(const Multiset& a) {
  require_valid(a);
  const GroupParams& g = a.group();
  const std::uint64_t p = g.p();

  std::optional<BoundCertificate> best;
  auto offer = [&](BoundCertificate c) {
    if (!best || c.value > best->value) best = std::move(c);
  };

  try {
    offer(cd_bound(a));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotOnOneLine) throw;
  }

  auto lines = enumerate_lines(g);
  std::sort(lines.begin(), lines.end(), [](const Subgroup& l, const Subgroup& r) {
    return l.basis_elements()[0] < r.basis_elements()[0];
  });
  for (const Subgroup& line : lines) offer(sweep_bound(a, line));
  if (a.total() + 1 >= p && a.total() <= 2 * p - 2) {
    for (const Subgroup& line : lines) {
      if (auto c = line_bound_unchecked(a, line.basis_elements()[0])) offer(std::move(*c));
    }
  }

  std::set<Element> targets;
  for (const auto& [x, cx] : a.items()) {
    const Element dx = line_direction(g, Element{x});
    for (const auto& [y, cy] : a.items()) {
      if (line_direction(g, Element{y}) == dx) continue;
      targets.insert(g.add(Element{x}, Element{y}));
    }
  }
  for (Element z : targets) {
    const std::uint64_t j_max = max_replaceable_pairs(a, z);
    for (std::uint64_t j = 0; j <= j_max; ++j) offer(pair_replacement_unchecked(a, z, j, j_max));
  }
  return *best;
}

std::uint64_t conjecture_floor(std::uint32_t p, std::uint32_t m, std::uint64_t n) {
  if (p == 2) throw Error(ErrorCode::EvenPrimeUnsupported, "the conjectured floor is stated for odd p");
  if (n + 1 > std::uint64_t{m} * p) {
    throw Error(ErrorCode::SizeOutOfRange,
                "no valid multiset of size " + std::to_string(n) + " exists (max mp-1)");
  }
  if (n < p) return n + 1;
  const std::uint64_t q = n / p;
  const std::uint64_t k = n % p;
  std::uint64_t pq = 1;
  for (std::uint64_t i = 0; i < q; ++i) pq *= p;
  if (k + 3 <= p) return (k + 2) * pq;
  if (k + 2 == p) return pq * p - 1;
  return pq * p;
}

BoundCertificate conjecture_floor_certificate(const Multiset& a) {
  BoundCertificate cert;
  cert.rule = Rule::ConjectureFloor;
  cert.value = static_cast<std::int64_t>(conjecture_floor(a.group().p(), a.group().m(), a.total()));
  return cert;
}

Rational harmonic(std::uint32_t k) {
  Rational h = 0;
  for (std::uint32_t i = 1; i <= k; ++i) h += Rational(1, i);
  return h;
}

ThresholdReport thresholds(std::uint64_t p, std::uint32_t k) {
  using boost::multiprecision::cpp_int;
  ThresholdReport r;
  r.p = p;
  r.k = k;
  r.harmonic = harmonic(k);
  const Rational bound = Rational(4 * (std::uint64_t{k} + 1) * (std::uint64_t{k} + 1)) * r.harmonic -
                         Rational(2 * std::uint64_t{k});
  cpp_int ceil_bound = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
  if (Rational(ceil_bound) < bound) ceil_bound += 1;
  r.p_min_large_p = ceil_bound.convert_to<std::uint64_t>();

  // (k+1)^2 (2 ln p + 1) <= p, searched upward from the floating estimate.
  if (p >= 2) {
    const long double scale = 2.0L * std::log(static_cast<long double>(p)) + 1.0L;
    auto fits = [&](std::int64_t kk) {
      const auto s = static_cast<long double>(kk + 1);
      return s * s * scale <= static_cast<long double>(p);
    };
    auto guess = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<long double>(p) / scale))) - 1;
    guess = std::max<std::int64_t>(guess, -1);
    while (guess >= 0 && !fits(guess)) --guess;
    while (fits(guess + 1)) ++guess;
    r.k_max_small_k = guess;
  }
  r.large_p_hypothesis = k >= 2 && p >= r.p_min_large_p;
  r.small_k_hypothesis = k >= 2 && static_cast<std::int64_t>(k) <= r.k_max_small_k;
  return r;
}

}  // namespace zpsum
