// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "zpsum/bounds.hpp"
#include "zpsum/corpus.hpp"
#include "zpsum/error.hpp"
#include "zpsum/report.hpp"
#include "zpsum/search.hpp"
#include "zpsum/sumset.hpp"

using namespace zpsum;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Settings {
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t workers = 1;
  std::uint64_t oracle_cases = 10000;
  std::uint64_t soundness_cases = 10200;
  bool stretch = false;
};

SearchConfig config(std::uint32_t p, std::uint32_t m, std::uint32_t lo, std::uint32_t hi, std::uint32_t w = 4) {
  SearchConfig c;
  c.p = p;
  c.m = m;
  c.n_lo = lo;
  c.n_hi = hi;
  c.witnesses = w;
  return c;
}

SearchOptions options(const Settings& s) {
  SearchOptions o;
  o.workers = s.workers;
  return o;
}

std::string minima(const SearchReport& r) {
  std::string out;
  for (const SizeRecord& rec : r.records) {
    if (!out.empty()) out += ",";
    out += rec.min_card ? std::to_string(*rec.min_card) : "-";
  }
  return out;
}

bool minima_are(const SearchReport& r, const std::vector<std::uint64_t>& expected) {
  if (!r.complete() || r.records.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (r.records[i].min_card != expected[i] || r.records[i].verdict() != Verdict::Confirmed) return false;
  }
  return true;
}

bool witnessed_by(const SizeRecord& rec, const Multiset& a) {
  const OrbitTag tag = canonical_form(a).orbit_tag;
  return is_valid(a).valid && a.total() == rec.n && sumset_card(a) == rec.min_card &&
         std::find(rec.witnesses.begin(), rec.witnesses.end(), tag) != rec.witnesses.end();
}

// ---- criteria ----

void tightness_at_p(Outcome& o, const Settings& s) {
  for (std::uint32_t p : {3u, 5u}) {
    const SearchReport r = verify_conjecture(config(p, 2, p, p, 1000), options(s));
    o.require(minima_are(r, {2ull * p}), "min at p=" + std::to_string(p));
    o.require(witnessed_by(r.records.at(0), construct_extremal_2d(p, 0)), "extremal witness at p=" + std::to_string(p));
    o.detail << " p=" << p << ": min " << minima(r) << " (2p=" << 2 * p << ", " << r.records[0].orbits_scanned
             << " orbits);";
  }
}

void three_p_at_p5(Outcome& o, const Settings& s) {
  const SearchReport r = verify_conjecture(config(5, 2, 6, 6, 1000), options(s));
  o.require(minima_are(r, {15}), "min 15");
  o.require(witnessed_by(r.records.at(0), construct_extremal_2d(5, 1)), "extremal witness");
  o.detail << " p=5 n=6: min " << minima(r) << ", " << r.records[0].orbits_scanned << " orbits";
}

void remark_p11(Outcome& o, const Settings&) {
  const RemarkReport r = verify_p11_remark();
  o.require(r.cases == 10000, "10000 cases");
  o.require(r.cases_at_32.size() == 16, "16 cases at 32");
  o.require(r.all_32_cases_plus_minus_shape, "shape of the 16 cases");
  o.require(r.others_at_most_33 == 0 && r.min_other_card > 33, "others > 33");
  o.require(r.extensions == 160 && r.extensions_at_most_33 == 0 && r.min_extension_card > 33, "extensions > 33");
  o.detail << " cases=" << r.cases << " at_32=" << r.cases_at_32.size() << " others_min=" << r.min_other_card
           << " extensions=" << r.extensions << " ext_min=" << r.min_extension_card;
}

void z3_squared(Outcome& o, const Settings& s) {
  const SearchReport r = verify_conjecture(config(3, 2, 3, 5, 1000), options(s));
  o.require(minima_are(r, {6, 8, 9}), "minima 6,8,9");
  o.require(witnessed_by(r.records.at(1), construct_B_prime(3, 2)), "n=4 witnessed by B'");
  o.detail << " n=3..5 minima " << minima(r) << ", n=4 witnessed by B'(3,2)";
}

void z5_squared(Outcome& o, const Settings& s) {
  const SearchReport r = verify_conjecture(config(5, 2, 5, 9), options(s));
  o.require(minima_are(r, {10, 15, 20, 24, 25}), "minima 10,15,20,24,25");
  std::uint64_t orbits = 0;
  for (const auto& rec : r.records) orbits += rec.orbits_scanned;
  o.detail << " n=5..9 minima " << minima(r) << ", " << orbits << " orbits";
  if (s.stretch) {
    SearchOptions opt = options(s);
    opt.override_budget = true;
    const SearchReport r7 = verify_conjecture(config(7, 2, 7, 11), opt);
    o.require(minima_are(r7, {14, 21, 28, 35, 42}), "p=7 minima 14,21,28,35,42");
    o.detail << "; p=7 n=7..11 minima " << minima(r7);
  }
}

void z3_cubed(Outcome& o, const Settings& s) {
  const SearchReport r = verify_conjecture(config(3, 3, 3, 8), options(s));
  o.require(minima_are(r, {6, 8, 9, 18, 26, 27}), "minima 6,8,9,18,26,27");
  std::uint64_t orbits = 0;
  for (const auto& rec : r.records) orbits += rec.orbits_scanned;
  o.detail << " n=3..8 minima " << minima(r) << ", " << orbits << " orbits";
}

void peng(Outcome& o, const Settings& s) {
  for (std::uint32_t p : {3u, 5u}) {
    const PengReport r = verify_peng(p, options(s));
    o.require(r.holds, "p=" + std::to_string(p));
    o.detail << " p=" << p << ": min " << minima(r.search) << " (p^2=" << p * p << ");";
  }
}

void b_prime(Outcome& o, const Settings&) {
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 3u}}) {
    const Multiset b = construct_B_prime(p, m);
    const GroupParams& g = b.group();
    const DenseSet s = sumset(b);
    const Element minus_x1 = g.neg(Element{1});
    std::uint64_t full = 1;
    for (std::uint32_t i = 0; i < m; ++i) full *= p;
    const std::string at = "(" + std::to_string(p) + "," + std::to_string(m) + ")";
    o.require(!s.test(minus_x1), "-x1 in sumset at " + at);
    o.require(s.card() == full - 1, "card at " + at);
    o.require(is_valid(b).valid, "validity at " + at);
    o.require(b.total() == m * p - 2, "size at " + at);
    o.detail << " " << at << ": #Sigma=" << s.card() << ";";
  }
}

void oracle_equivalence(Outcome& o, const Settings& s) {
  Corpus corpus(s.seed);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> groups{{3, 1},  {3, 2},  {5, 1},  {5, 2},  {7, 1},
                                                                    {7, 2},  {11, 1}, {11, 2}, {13, 1}, {13, 2}};
  std::uint64_t mismatches = 0, cases = 0;
  for (std::uint64_t i = 0; i < s.oracle_cases; ++i) {
    const auto [p, m] = groups[i % groups.size()];
    const Multiset a = corpus.any(make_group(p, m), std::uint64_t{1} << 16);
    if (submultiset_count(a) > (std::uint64_t{1} << 16)) continue;
    ++cases;
    if (!(sumset(a) == brute_force_sumset(a))) {
      if (mismatches++ == 0) o.detail << " first mismatch " << a.to_literal() << ";";
    }
  }
  o.require(cases >= 10000, "at least 10^4 cases");
  o.require(mismatches == 0, "no mismatches");
  o.detail << " " << cases << " cases (seed " << s.seed << "), " << mismatches << " mismatches";
}

struct Soundness {
  std::uint64_t cases = 0;
  std::uint64_t certificates = 0;
  std::uint64_t violations = 0;
  std::uint64_t j0_checks = 0;
  std::uint64_t j0_mismatches = 0;
  std::string first;
};

void check_certificates(const Multiset& a, Soundness& out) {
  const GroupParams& g = a.group();
  const auto exact = static_cast<std::int64_t>(sumset_card(a));
  ++out.cases;
  auto check = [&](const BoundCertificate& c) {
    ++out.certificates;
    if (c.value > exact) {
      if (out.violations++ == 0) out.first = std::string(to_string(c.rule)) + " on " + a.to_literal();
    }
  };
  try {
    check(cd_bound(a));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotOnOneLine) throw;
  }
  std::vector<std::uint64_t> parts;
  std::vector<std::int64_t> sweep_by_line(g.order(), -1);
  const bool line_range = a.total() + 1 >= g.p() && a.total() <= 2 * g.p() - 2;
  for (const Subgroup& line : enumerate_lines(g)) {
    const BoundCertificate sw = sweep_bound(a, line);
    check(sw);
    check(sweep_bound(a, line, true));
    for (Element x : line.elements()) sweep_by_line[x.index] = sw.value;
    if (line_range) {
      if (auto c = line_bound(a, line.basis_elements()[0])) check(*c);
    }
    Multiset part(g);
    for (Element x : line.elements()) part.insert(x, a.multiplicity(x));
    if (!part.empty()) parts.push_back(sumset_card(part));
  }
  if (!parts.empty()) check(kneser_union_bound(parts, g));
  for (std::uint32_t z = 1; z < g.order(); ++z) {
    const std::uint64_t j_max = max_replaceable_pairs(a, Element{z});
    for (std::uint64_t j = 0; j <= j_max; ++j) {
      const BoundCertificate c = pair_replacement_bound(a, Element{z}, j);
      check(c);
      if (j == 0) {
        ++out.j0_checks;
        if (c.value != sweep_by_line[z]) ++out.j0_mismatches;
      }
    }
  }
  check(best_bound(a));
}

void certificate_soundness(Outcome& o, const Settings& s) {
  Soundness exhaustive;
  for (std::uint32_t n = 1; n <= 5; ++n) {
    enumerate_valid(3, 2, n, false, [&](const Multiset& a) { check_certificates(a, exhaustive); });
  }
  Soundness random;
  Corpus corpus(s.seed);
  const std::uint32_t primes[] = {5, 7, 11};
  for (std::uint64_t i = 0; i < s.soundness_cases; ++i) {
    const std::uint32_t p = primes[i % 3];
    const Multiset a = corpus.valid(make_group(p, 2), 1 + corpus.below(2 * p - 1));
    check_certificates(a, random);
  }
  o.require(exhaustive.violations == 0 && random.violations == 0, "no certificate above the exact size");
  o.require(exhaustive.j0_mismatches == 0 && random.j0_mismatches == 0, "j=0 equals sweep");
  o.require(random.cases >= 10000, "at least 10^4 random cases");
  if (!exhaustive.first.empty()) o.detail << " violation: " << exhaustive.first << ";";
  if (!random.first.empty()) o.detail << " violation: " << random.first << ";";
  o.detail << " p=3 exhaustive: " << exhaustive.cases << " multisets, " << exhaustive.certificates
           << " certificates; random: " << random.cases << " multisets, " << random.certificates
           << " certificates; j=0 checks " << exhaustive.j0_checks + random.j0_checks << "; violations "
           << exhaustive.violations + random.violations;
}

void threshold_checks(Outcome& o, const Settings&) {
  using boost::multiprecision::cpp_int;
  constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
  const std::uint64_t ps[] = {3, 5, 7, 11, 13, 50, 101, 1009, 100003, 1000003};
  std::uint64_t bad_pmin = 0, bad_chain = 0, bad_kmax = 0;
  long double worst_gap = 1e9L;
  for (std::uint32_t k = 1; k <= 50; ++k) {
    // Exact H_k as num/den, independently of the library.
    cpp_int num = 0, den = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
      num = num * i + den;
      den *= i;
      const cpp_int g = boost::multiprecision::gcd(num, den);
      num /= g;
      den /= g;
    }
    const cpp_int target = 4 * cpp_int(k + 1) * (k + 1) * num - 2 * cpp_int(k) * den;
    const cpp_int ceiling = (target + den - 1) / den;
    for (std::uint64_t p : ps) {
      const ThresholdReport t = thresholds(p, k);
      if (numerator(t.harmonic) != num || denominator(t.harmonic) != den ||
          cpp_int(t.p_min_large_p) != ceiling) {
        ++bad_pmin;
      }
      // k <= sqrt(p / (2 ln p + 1)) - 1, checked as (k+1)^2 (2 ln p + 1) <= p.
      const long double rhs = std::sqrt(static_cast<long double>(p) / (2 * std::log(static_cast<long double>(p)) + 1)) - 1;
      const bool in_range = k >= 2 && static_cast<long double>(k) <= rhs;
      if (t.small_k_hypothesis != in_range) ++bad_kmax;
    }
    const long double hk = static_cast<long double>(num.convert_to<double>()) / den.convert_to<double>();
    const long double chain = kEulerGamma + std::log(static_cast<long double>(k + 1));
    if (hk > chain + 1e-12L) ++bad_chain;
    worst_gap = std::min(worst_gap, chain - hk);
  }
  o.require(bad_pmin == 0, "p_min matches the exact recomputation");
  o.require(bad_kmax == 0, "small-k range");
  o.require(bad_chain == 0, "H_k <= gamma + log(k+1)");
  o.detail << " k=1..50: p_min mismatches " << bad_pmin << ", small-k mismatches " << bad_kmax
           << ", H_k bound failures " << bad_chain << " (smallest margin " << std::setprecision(3)
           << static_cast<double>(worst_gap) << ")";
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&, const Settings&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  s.workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<int> only;
  CLI::App app{"Acceptance checks"};
  app.add_option("--seed", s.seed, "Seed for the random corpora");
  app.add_option("--workers", s.workers, "Worker threads for the exhaustive scans");
  app.add_option("--only", only, "Run only these criteria");
  app.add_flag("--stretch", s.stretch, "Also scan Z_7^2 up to n = 11 under criterion 5");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "tightness at |A| = p (Z_3^2, Z_5^2)", 10, tightness_at_p},
      {2, "3p at |A| = p+1 (Z_5^2)", 60, three_p_at_p5},
      {3, "p = 11 structured search", 60, remark_p11},
      {4, "minima over Z_3^2", 10, z3_squared},
      {5, "minima over Z_5^2", 1800, z5_squared},
      {6, "minima over Z_3^3", 7200, z3_cubed},
      {7, "full sumset at |A| = 2p-1 (p = 3, 5)", 60, peng},
      {8, "B' properties", 1, b_prime},
      {9, "sumset engine vs brute-force oracle", 600, oracle_equivalence},
      {10, "certificate soundness", 1200, certificate_soundness},
      {11, "threshold arithmetic for k <= 50", 60, threshold_checks},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o, s);
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) o.require(false, "over the time limit");
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name << "  ("
              << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds
              << " s)" << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
