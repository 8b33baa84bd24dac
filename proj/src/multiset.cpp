#include "zpsum/multiset.hpp"

#include <algorithm>
#include <set>

#include "zpsum/error.hpp"

namespace zpsum {

void Multiset::insert(Element x, std::uint32_t count) {
  if (count == 0) return;
  if (x.index >= group_.order()) throw Error(ErrorCode::GroupMismatch, "element outside the group");
  mult_[x.index] += count;
  total_ += count;
}

std::uint32_t Multiset::remove(Element x, std::uint32_t count) {
  auto it = mult_.find(x.index);
  if (it == mult_.end()) return 0;
  const std::uint32_t removed = std::min(count, it->second);
  it->second -= removed;
  total_ -= removed;
  if (it->second == 0) mult_.erase(it);
  return removed;
}

std::uint32_t Multiset::multiplicity(Element x) const {
  auto it = mult_.find(x.index);
  return it == mult_.end() ? 0 : it->second;
}

std::vector<Element> Multiset::sorted_elements() const {
  std::vector<Element> out;
  out.reserve(total_);
  for (const auto& [x, c] : mult_) out.insert(out.end(), c, Element{x});
  return out;
}

std::string Multiset::to_literal() const {
  std::string out = "p=" + std::to_string(group_.p()) + " m=" + std::to_string(group_.m()) + " :";
  for (const auto& [x, c] : mult_) {
    out += ' ';
    out += group_.format(Element{x});
    if (c != 1) out += "*" + std::to_string(c);
  }
  return out;
}

std::uint64_t subgroup_count(const Multiset& a, const Subgroup& h) {
  std::uint64_t n = 0;
  for (const auto& [x, c] : a.items()) {
    if (h.contains(Element{x})) n += c;
  }
  return n;
}

ValidityReport is_valid(const Multiset& a) {
  const GroupParams& g = a.group();
  if (g.p() == 2) {
    throw Error(ErrorCode::EvenPrimeUnsupported,
                "validity is only defined for odd p; over Z_2^m a zero-free multiset without "
                "repeated lines is just a set of independent points and its sumset is always 2^|A|");
  }
  ValidityReport report;
  report.zero_present = a.contains_zero();

  std::vector<Element> support;
  for (const auto& [x, c] : a.items()) {
    if (x != 0) support.push_back(Element{x});
  }

  // Breadth-first over subgroups spanned by support elements, keyed by
  // their echelon basis.
  std::set<std::vector<Coords>> seen;
  std::vector<Subgroup> frontier;
  auto visit = [&](std::vector<Coords> gens) {
    std::vector<Coords> basis = row_reduce(std::move(gens), g.p());
    if (!seen.insert(basis).second) return;
    Subgroup s(g, std::move(basis));
    const std::uint64_t count = subgroup_count(a, s) - a.multiplicity(Element{0});
    const std::uint64_t limit = std::uint64_t{s.rank()} * g.p();
    if (count >= limit) report.violations.push_back({s.rank(), count, limit, s.format()});
    if (s.rank() < g.m()) frontier.push_back(std::move(s));
  };
  for (Element x : support) visit({g.coords(x)});
  while (!frontier.empty()) {
    std::vector<Subgroup> current = std::move(frontier);
    frontier.clear();
    for (const Subgroup& s : current) {
      bool full_done = false;
      for (Element x : support) {
        if (s.contains(x)) continue;
        if (s.rank() + 1 == g.m()) {
          // Every such extension is the whole group.
          if (full_done) continue;
          full_done = true;
        }
        auto gens = s.basis();
        gens.push_back(g.coords(x));
        visit(std::move(gens));
      }
    }
  }

  std::sort(report.violations.begin(), report.violations.end(), [](const Violation& l, const Violation& r) {
    return std::tie(l.rank, l.subgroup) < std::tie(r.rank, r.subgroup);
  });
  report.full_rank_clause_only =
      g.m() == 2 && !report.violations.empty() &&
      std::all_of(report.violations.begin(), report.violations.end(),
                  [](const Violation& v) { return v.rank == 2; });
  report.valid = !report.zero_present && report.violations.empty();
  return report;
}

Multiset construct_extremal_2d(std::uint32_t p, std::uint32_t k) {
  if (p < 3 || k + 3 > p) {
    throw Error(ErrorCode::KOutOfRange, "need 0 <= k <= p-3, got p=" + std::to_string(p) +
                                            " k=" + std::to_string(k));
  }
  const GroupParams g = make_group(p, 2);
  Multiset a(g);
  a.insert(g.element(Coords{1, 0}), p - 1);
  a.insert(g.element(Coords{0, 1}), k + 1);
  return a;
}

Multiset construct_B(std::uint32_t p, std::uint32_t m) {
  if (p == 2) throw Error(ErrorCode::EvenPrimeUnsupported, "the B_m construction needs an odd prime");
  const GroupParams g = make_group(p, m);
  Multiset b(g);
  const Element x1{1};
  b.insert(x1, p - 1);
  for (std::uint32_t j = 1; j < m; ++j) {
    const Element xj{g.power(j)};
    for (std::uint32_t a = 0; a < p; ++a) b.insert(g.add(xj, g.scalar_mul(a, x1)));
  }
  return b;
}

Multiset construct_B_prime(std::uint32_t p, std::uint32_t m) {
  Multiset b = construct_B(p, m);
  b.remove(Element{1});
  return b;
}

}  // namespace zpsum
