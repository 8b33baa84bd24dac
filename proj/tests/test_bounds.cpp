#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <cmath>

#include "zpsum/bounds.hpp"
#include "zpsum/search.hpp"
#include "zpsum/sumset.hpp"

using namespace zpsum;

namespace {

Element el(const GroupParams& g, std::initializer_list<std::uint32_t> c) {
  return g.element(std::vector<std::uint32_t>(c));
}

Multiset on_x_axis(std::uint32_t p, std::uint32_t n) {
  Multiset a(make_group(p, 2));
  a.insert(Element{1}, n);
  return a;
}

// Every certificate the library can issue for a valid rank-2 multiset,
// with the exact sumset size to compare against.
std::vector<BoundCertificate> all_certificates(const Multiset& a) {
  const GroupParams& g = a.group();
  std::vector<BoundCertificate> out;
  try {
    out.push_back(cd_bound(a));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotOnOneLine) throw;
  }
  for (const Subgroup& line : enumerate_lines(g)) {
    out.push_back(sweep_bound(a, line));
    out.push_back(sweep_bound(a, line, true));
    const Element x = line.basis_elements()[0];
    if (a.total() + 1 >= g.p() && a.total() <= 2 * g.p() - 2) {
      if (auto c = line_bound(a, x)) out.push_back(*c);
    }
  }
  for (std::uint32_t z = 1; z < g.order(); ++z) {
    const std::uint64_t j_max = max_replaceable_pairs(a, Element{z});
    for (std::uint64_t j = 0; j <= j_max; ++j) out.push_back(pair_replacement_bound(a, Element{z}, j));
  }
  // Kneser union over the partition of A by lines.
  std::vector<std::uint64_t> cards;
  for (const Subgroup& line : enumerate_lines(g)) {
    Multiset part(g);
    for (Element x : line.elements()) part.insert(x, a.multiplicity(x));
    if (!part.empty()) cards.push_back(sumset_card(part));
  }
  if (!cards.empty()) out.push_back(kneser_union_bound(cards, g));
  out.push_back(best_bound(a));
  return out;
}

}  // namespace

TEST_CASE("Cauchy-Davenport") {
  CHECK(cd_bound(on_x_axis(5, 4)).value == 5);
  CHECK(cd_bound(on_x_axis(7, 2)).value == 3);
  CHECK(cd_bound(on_x_axis(5, 10)).value == 5);
  CHECK(cd_bound(Multiset(make_group(5, 2))).value == 1);
  Multiset z = on_x_axis(5, 2);
  z.insert(Element{0});
  CHECK_ERROR(cd_bound(z), ErrorCode::ZeroInMultiset);
  CHECK_ERROR(cd_bound(construct_extremal_2d(5, 1)), ErrorCode::NotOnOneLine);
  // Multiples of one direction count as one line.
  const GroupParams g = make_group(7, 2);
  Multiset line(g);
  line.insert(el(g, {1, 2}), 2);
  line.insert(el(g, {3, 6}), 3);
  CHECK(cd_bound(line).value == 6);
}

TEST_CASE("Kneser union") {
  const GroupParams g = make_group(5, 2);
  std::vector<std::uint64_t> a{10, 10}, b{25}, c{5, 5, 5}, none;
  CHECK(kneser_union_bound(a, g).value == 15);
  CHECK(kneser_union_bound(b, g).value == 25);
  CHECK(kneser_union_bound(c, g).value == 5);
  CHECK_ERROR(kneser_union_bound(none, g), ErrorCode::EmptyPartition);

  // Checked on a concrete partition: two parts with 10 sums each.
  Multiset p1(g), p2(g);
  p1.insert(el(g, {1, 0}), 4);
  p1.insert(el(g, {0, 1}));
  p2.insert(el(g, {1, 1}), 4);
  p2.insert(el(g, {1, 2}));
  REQUIRE(sumset_card(p1) == 10);
  REQUIRE(sumset_card(p2) == 10);
  Multiset both = p1;
  for (const auto& [x, k] : p2.items()) both.insert(Element{x}, k);
  CHECK(kneser_union_bound(a, g).value <= static_cast<std::int64_t>(sumset_card(both)));
}

TEST_CASE("sweep") {
  const GroupParams g = make_group(5, 2);
  const Multiset e = construct_extremal_2d(5, 1);
  const BoundCertificate c = sweep_bound(e, Subgroup(g, {{1, 0}}));
  CHECK(c.value == 15);
  CHECK(c.subgroup == "span{(1,0)}");
  CHECK(c.complement == "span{(0,1)}");
  CHECK(c.d_size == 4);
  CHECK(c.e_size == 2);

  const BoundCertificate inside = sweep_bound(on_x_axis(5, 3), Subgroup(g, {{1, 0}}));
  CHECK(inside.value == 4);

  CHECK(sweep_bound(e, Subgroup(g, {{1, 0}}), true).value == 15);
  CHECK_ERROR(sweep_bound(construct_B(3, 3), line_through(make_group(3, 3), Element{1})), ErrorCode::RankOutOfRange);
  Multiset z = e;
  z.insert(Element{0});
  CHECK_ERROR(sweep_bound(z, Subgroup(g, {{1, 0}})), ErrorCode::ZeroInMultiset);

  Corpus corpus(test_seed());
  const GroupParams g7 = make_group(7, 2);
  for (int i = 0; i < 100; ++i) {
    const Multiset a = corpus.valid(g7, 1 + corpus.below(13));
    const auto exact = static_cast<std::int64_t>(sumset_card(a));
    for (const Subgroup& line : enumerate_lines(g7)) {
      CHECK(sweep_bound(a, line).value <= exact);
      CHECK(sweep_bound(a, line, true).value <= exact);
      CHECK(sweep_bound(a, line).value <= sweep_bound(a, line, true).value);
    }
  }
}

TEST_CASE("line bound") {
  const GroupParams g = make_group(5, 2);
  // |A| = p: any x in A qualifies with value 2p.
  Corpus corpus(test_seed());
  for (int i = 0; i < 50; ++i) {
    const Multiset a = corpus.valid(g, 5);
    if (a.total() != 5) continue;
    for (const auto& [x, c] : a.items()) {
      const auto cert = line_bound(a, Element{x});
      REQUIRE(cert.has_value());
      CHECK(cert->value == 10);
    }
  }
  const auto e = line_bound(construct_extremal_2d(5, 1), el(g, {1, 0}));
  REQUIRE(e.has_value());
  CHECK(e->value == 15);

  // |A| = p + k with at most k points on each line: never applicable.
  const GroupParams g7 = make_group(7, 2);
  Multiset spread(g7);
  for (std::uint32_t t = 0; t < 4; ++t) spread.insert(g7.element(std::vector<std::uint32_t>{1, t}), 2);
  spread.insert(el(g7, {0, 1}));
  REQUIRE(spread.total() == 9);  // p + k with k = 2
  for (const Subgroup& line : enumerate_lines(g7)) {
    CHECK_FALSE(line_bound(spread, line.basis_elements()[0]).has_value());
  }

  CHECK_ERROR(line_bound(construct_B(5, 2), el(g, {1, 0})), ErrorCode::SizeOutOfRange);
  CHECK_ERROR(line_bound(on_x_axis(5, 2), el(g, {1, 0})), ErrorCode::SizeOutOfRange);
  CHECK_ERROR(line_bound(construct_extremal_2d(5, 1), Element{0}), ErrorCode::ZeroTarget);
  CHECK_ERROR(line_bound(on_x_axis(5, 5), el(g, {1, 0})), ErrorCode::InvalidMultiset);
}

TEST_CASE("pair replacement") {
  const GroupParams g = make_group(7, 2);
  Corpus corpus(test_seed());
  for (int i = 0; i < 200; ++i) {
    const Multiset a = corpus.valid(g, 1 + corpus.below(13));
    for (std::uint32_t z = 1; z < g.order(); ++z) {
      CHECK(pair_replacement_bound(a, Element{z}, 0).value ==
            sweep_bound(a, line_through(g, Element{z})).value);
    }
  }

  // |A| = p + k and a target z with L <= k points on <z>: replacing
  // j = k + 2 - L pairs gives at least (k+3)(p-k-3).
  Multiset a(g);
  a.insert(el(g, {1, 0}), 3);
  a.insert(el(g, {0, 1}), 3);
  a.insert(el(g, {1, 1}));
  a.insert(el(g, {1, 2}));
  a.insert(el(g, {1, 3}));
  const std::uint64_t k = 2, p = 7;
  REQUIRE(a.total() == p + k);
  int used = 0;
  for (std::uint32_t z = 1; z < g.order(); ++z) {
    const std::uint64_t on_line = subgroup_count(a, line_through(g, Element{z}));
    if (on_line > k) continue;
    const std::uint64_t j = k + 2 - on_line;
    if (j > max_replaceable_pairs(a, Element{z})) continue;
    ++used;
    CHECK(pair_replacement_bound(a, Element{z}, j).value >= static_cast<std::int64_t>((k + 3) * (p - k - 3)));
  }
  CHECK(used > 0);

  const Multiset e = construct_extremal_2d(7, 1);
  CHECK_ERROR(pair_replacement_bound(e, Element{0}, 0), ErrorCode::ZeroTarget);
  CHECK_ERROR(pair_replacement_bound(e, el(g, {1, 1}), max_replaceable_pairs(e, el(g, {1, 1})) + 1),
              ErrorCode::JOutOfRange);
}

TEST_CASE("max_replaceable_pairs") {
  const GroupParams g = make_group(5, 2);
  const Multiset e = construct_extremal_2d(5, 1);
  // z = (1,1): pairs (1,0)+(0,1), at most min(4,2) = 2 of them.
  CHECK(max_replaceable_pairs(e, el(g, {1, 1})) == 2);
  CHECK(max_replaceable_pairs(e, el(g, {1, 0})) == 0);
  CHECK(max_replaceable_pairs(e, el(g, {2, 1})) == 0);
}

TEST_CASE("best bound") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (std::uint32_t k = 0; k + 3 <= p; ++k) {
      const Multiset a = construct_extremal_2d(p, k);
      const BoundCertificate c = best_bound(a);
      CHECK(c.value == static_cast<std::int64_t>((k + 2) * p));
      CHECK(c.value == static_cast<std::int64_t>(sumset_card(a)));
    }
  }
  // One line plus one point: the line structure decides.
  const GroupParams g = make_group(7, 2);
  Multiset a = on_x_axis(7, 5);
  a.insert(el(g, {2, 3}));
  const BoundCertificate c = best_bound(a);
  CHECK((c.rule == Rule::Sweep || c.rule == Rule::LineBound));
  CHECK(c.value == 12);
  CHECK(sumset_card(a) == 12);

  // Deterministic, and earlier rules win ties.
  const BoundCertificate again = best_bound(a);
  CHECK(again.rule == c.rule);
  CHECK(again.value == c.value);
  CHECK(again.subgroup == c.subgroup);
  CHECK(again.target == c.target);
  CHECK(again.pairs == c.pairs);
  CHECK(best_bound(on_x_axis(7, 3)).rule == Rule::CD);
  CHECK_ERROR(best_bound(on_x_axis(7, 7)), ErrorCode::InvalidMultiset);
}

TEST_CASE("conjecture floor") {
  CHECK(conjecture_floor(5, 2, 6) == 15);
  CHECK(conjecture_floor(5, 2, 8) == 24);
  CHECK(conjecture_floor(3, 3, 8) == 27);
  CHECK(conjecture_floor(5, 2, 3) == 4);
  CHECK(conjecture_floor(3, 2, 4) == 8);
  CHECK_ERROR(conjecture_floor(5, 2, 10), ErrorCode::SizeOutOfRange);
  CHECK_ERROR(conjecture_floor(2, 2, 2), ErrorCode::EvenPrimeUnsupported);
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 2u}, {3u, 3u}, {5u, 3u}, {3u, 4u}}) {
    std::uint64_t prev = 0, full = 1;
    for (std::uint32_t i = 0; i < m; ++i) full *= p;
    for (std::uint64_t n = 1; n + 1 <= std::uint64_t{m} * p; ++n) {
      const std::uint64_t f = conjecture_floor(p, m, n);
      CHECK(f >= prev);
      prev = f;
    }
    CHECK(conjecture_floor(p, m, m * p - 1) == full);
  }
  const BoundCertificate c = conjecture_floor_certificate(construct_B_prime(5, 2));
  CHECK(c.rule == Rule::ConjectureFloor);
  CHECK(c.value == 24);
}

TEST_CASE("thresholds") {
  const ThresholdReport t2 = thresholds(101, 2);
  CHECK(t2.harmonic == Rational(3, 2));
  CHECK(t2.p_min_large_p == 50);
  CHECK(t2.large_p_hypothesis);
  CHECK(t2.small_k_hypothesis);
  CHECK(t2.k_max_small_k == 2);
  CHECK(thresholds(7, 1).harmonic == 1);
  CHECK_FALSE(thresholds(7, 1).large_p_hypothesis);
  CHECK(thresholds(7, 1).k_max_small_k == 0);
  CHECK(thresholds(3, 1).k_max_small_k == -1);
  CHECK_FALSE(thresholds(49, 2).large_p_hypothesis);
  CHECK(thresholds(50, 2).large_p_hypothesis);
  CHECK(ThresholdReport::kLogBase == "natural");
}

TEST_CASE("every certificate is sound on the exhaustive p = 3 family") {
  std::size_t families = 0;
  for (std::uint32_t n = 1; n <= 5; ++n) {
    enumerate_valid(3, 2, n, false, [&](const Multiset& a) {
      ++families;
      const auto exact = static_cast<std::int64_t>(sumset_card(a));
      for (const BoundCertificate& c : all_certificates(a)) CHECK_MESSAGE(c.value <= exact, a.to_literal());
    });
  }
  CHECK(families > 0);
}

TEST_CASE("every certificate is sound on a random corpus") {
  Corpus corpus(test_seed());
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const GroupParams g = make_group(p, 2);
    for (int i = 0; i < 150; ++i) {
      const Multiset a = corpus.valid(g, 1 + corpus.below(2 * p - 1));
      const auto exact = static_cast<std::int64_t>(sumset_card(a));
      for (const BoundCertificate& c : all_certificates(a)) CHECK_MESSAGE(c.value <= exact, a.to_literal());
    }
  }
}
