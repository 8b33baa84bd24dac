#include "zpsum/sumset.hpp"

#include <algorithm>
#include <bit>

#include "zpsum/error.hpp"

namespace zpsum {

std::uint64_t DenseSet::card() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

std::vector<Element> DenseSet::elements() const {
  std::vector<Element> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(Element{static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits))});
      bits &= bits - 1;
    }
  }
  return out;
}

std::string DenseSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint32_t bytes = (size() + 7) / 8;
  std::string out;
  out.reserve(bytes * 2);
  for (std::uint32_t b = 0; b < bytes; ++b) {
    const auto v = static_cast<unsigned>((words_[b / 8] >> (8 * (b % 8))) & 0xffU);
    out += kDigits[v >> 4];
    out += kDigits[v & 15];
  }
  return out;
}

DenseSet DenseSet::from_hex(const GroupParams& g, const std::string& hex) {
  DenseSet s(g);
  if (hex.size() != 2 * ((g.order() + 7) / 8)) {
    throw Error(ErrorCode::DimensionMismatch, "hex bit vector length does not match the group order");
  }
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    throw Error(ErrorCode::SyntaxError, "bad hex digit");
  };
  for (std::size_t b = 0; b < hex.size() / 2; ++b) {
    const std::uint64_t v = nibble(hex[2 * b]) << 4 | nibble(hex[2 * b + 1]);
    s.words_[b / 8] |= v << (8 * (b % 8));
  }
  if (g.order() % 64 != 0 && (s.words_.back() >> (g.order() % 64)) != 0) {
    throw Error(ErrorCode::DimensionMismatch, "bits set beyond the group order");
  }
  return s;
}

bool DenseSet::is_subset_of(const DenseSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

void extend_by_progression(DenseSet& s, Element x, std::uint32_t c) {
  const GroupParams& g = s.group();
  const std::uint32_t p = g.p();
  c = std::min(c, p - 1);
  if (x.index == 0 || c == 0) return;

  // Translation by x splits the group into p^(m-1) cycles of length p.
  // Along a cycle z, z+x, ..., the new bit i is the OR of old bits i-c..i.
  std::vector<std::uint64_t> visited((g.order() + 63) / 64, 0);
  std::vector<Element> cycle(p);
  std::vector<unsigned char> old_bits(p);
  for (std::uint32_t start = 0; start < g.order(); ++start) {
    if ((visited[start >> 6] >> (start & 63)) & 1U) continue;
    Element z{start};
    bool any = false;
    for (std::uint32_t i = 0; i < p; ++i) {
      cycle[i] = z;
      visited[z.index >> 6] |= std::uint64_t{1} << (z.index & 63);
      old_bits[i] = s.test(z) ? 1 : 0;
      any |= old_bits[i] != 0;
      z = g.add(z, x);
    }
    if (!any) continue;
    // Window count of old bits over positions i-c .. i (cyclic).
    std::uint32_t window = 0;
    for (std::uint32_t j = 0; j <= c; ++j) window += old_bits[(p - j) % p];
    for (std::uint32_t i = 0; i < p; ++i) {
      if (window) s.set(cycle[i]);
      window += old_bits[(i + 1) % p];
      window -= old_bits[(i + 1 + p - c - 1) % p];
    }
  }
}

DenseSet sumset(const Multiset& a) {
  DenseSet s(a.group());
  s.set(Element{0});
  for (const auto& [x, c] : a.items()) extend_by_progression(s, Element{x}, c);
  return s;
}

std::uint64_t sumset_card(const Multiset& a) { return sumset(a).card(); }

std::uint64_t submultiset_count(const Multiset& a) {
  std::uint64_t n = 1;
  for (const auto& [x, c] : a.items()) {
    n *= std::uint64_t{c} + 1;
    if (n > kBruteForceLimit) return kBruteForceLimit + 1;
  }
  return n;
}

DenseSet brute_force_sumset(const Multiset& a) {
  if (submultiset_count(a) > kBruteForceLimit) {
    throw Error(ErrorCode::TooManySubmultisets, "more than 2^24 submultisets");
  }
  const GroupParams& g = a.group();
  std::vector<Element> xs;
  std::vector<std::uint32_t> caps;
  for (const auto& [x, c] : a.items()) {
    xs.push_back(Element{x});
    caps.push_back(c);
  }
  DenseSet s(g);
  std::vector<std::uint32_t> delta(xs.size(), 0);
  Element sum{0};
  while (true) {
    s.set(sum);
    std::size_t i = 0;
    for (; i < xs.size(); ++i) {
      if (delta[i] < caps[i]) {
        ++delta[i];
        sum = g.add(sum, xs[i]);
        break;
      }
      sum = g.sub(sum, g.scalar_mul(delta[i], xs[i]));
      delta[i] = 0;
    }
    if (i == xs.size()) break;
  }
  return s;
}

DenseSet project_set(const DenseSet& s, const Decomposition& d, Side side) {
  DenseSet out(s.group());
  const auto& table = d.table(side);
  for (Element x : s.elements()) out.set(Element{table[x.index]});
  return out;
}

Multiset project_multiset(const Multiset& a, const Decomposition& d, Side side) {
  return map_multiset(a, [&](Element x) { return d.project(x, side); });
}

}  // namespace zpsum
