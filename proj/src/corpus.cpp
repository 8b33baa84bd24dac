#include "zpsum/corpus.hpp"

#include <algorithm>

namespace zpsum {

Multiset Corpus::any(const GroupParams& g, std::uint64_t max_choices) {
  Multiset a(g);
  const std::uint64_t support = 1 + below(std::min<std::uint64_t>(g.order(), 8));
  std::uint64_t choices = 1;
  for (std::uint64_t i = 0; i < support; ++i) {
    const Element x{static_cast<std::uint32_t>(below(g.order()))};
    const std::uint32_t have = a.multiplicity(x);
    const auto c = static_cast<std::uint32_t>(1 + below(g.p() + 1));
    // Replace the factor (have+1) by (have+c+1).
    const std::uint64_t next = choices / (have + 1) * (have + c + 1);
    if (next > max_choices) continue;
    choices = next;
    a.insert(x, c);
  }
  return a;
}

Multiset Corpus::valid(const GroupParams& g, std::uint64_t n) {
  Multiset a(g);
  for (int attempts = 0; a.total() < n && attempts < 64 * static_cast<int>(n + 1); ++attempts) {
    const Element x{static_cast<std::uint32_t>(1 + below(g.order() - 1))};
    a.insert(x);
    if (!is_valid(a).valid) a.remove(x);
  }
  return a;
}

}  // namespace zpsum
