#include "zpsum/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "zpsum/bounds.hpp"
#include "zpsum/error.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

std::uint64_t general_linear_order(std::uint32_t p, std::uint32_t m) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    pm *= p;
    if (pm > kMax) return kMax;
  }
  unsigned __int128 order = 1, pi = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= pm - pi;
    if (order > kMax) return kMax;
    pi *= p;
  }
  return static_cast<std::uint64_t>(order);
}

Automorphisms::Automorphisms(const GroupParams& g) : group_(g) {
  const std::uint64_t n = general_linear_order(g.p(), g.m());
  if (n > kMaxAutomorphisms || n * g.order() > (std::uint64_t{1} << 26)) {
    throw Error(ErrorCode::AutomorphismGroupTooLarge,
                "|GL_" + std::to_string(g.m()) + "(F_" + std::to_string(g.p()) + ")| = " + std::to_string(n));
  }
  const std::uint32_t order = g.order();
  table_.reserve(n * order);
  std::vector<Element> columns;
  std::vector<char> in_span(order, 0);

  // Columns are chosen in ascending index order, so the identity comes first.
  std::function<void()> choose = [&]() {
    if (columns.size() == g.m()) {
      const std::size_t base = table_.size();
      table_.resize(base + order);
      for (std::uint32_t x = 0; x < order; ++x) {
        Element img{0};
        for (std::uint32_t i = 0; i < g.m(); ++i) {
          img = g.add(img, g.scalar_mul(g.coord(Element{x}, i), columns[i]));
        }
        table_[base + x] = img.index;
      }
      ++count_;
      return;
    }
    // Span of the columns so far.
    std::fill(in_span.begin(), in_span.end(), 0);
    std::vector<Element> span{Element{0}};
    for (Element c : columns) {
      const std::size_t prev = span.size();
      Element step = c;
      for (std::uint32_t k = 1; k < g.p(); ++k) {
        for (std::size_t i = 0; i < prev; ++i) span.push_back(g.add(span[i], step));
        step = g.add(step, c);
      }
    }
    for (Element s : span) in_span[s.index] = 1;
    const std::vector<char> excluded = in_span;
    for (std::uint32_t x = 1; x < order; ++x) {
      if (excluded[x]) continue;
      columns.push_back(Element{x});
      choose();
      columns.pop_back();
    }
  };
  choose();
}

OrbitTag tag_of(const Multiset& a) {
  OrbitTag tag;
  for (Element x : a.sorted_elements()) tag.push_back(x.index);
  return tag;
}

Multiset from_tag(const GroupParams& g, const OrbitTag& tag) {
  Multiset a(g);
  for (std::uint32_t x : tag) a.insert(Element{x});
  return a;
}

namespace {

void image_sorted(const Automorphisms& autos, std::size_t t, const OrbitTag& tag, OrbitTag& out) {
  out.resize(tag.size());
  for (std::size_t i = 0; i < tag.size(); ++i) out[i] = autos.apply(t, Element{tag[i]});
  std::sort(out.begin(), out.end());
}

}  // namespace

CanonicalForm canonical_form(const Multiset& a, const Automorphisms& autos) {
  if (!(autos.group() == a.group())) throw Error(ErrorCode::GroupMismatch, "automorphisms of another group");
  const OrbitTag tag = tag_of(a);
  OrbitTag best = tag, img;
  for (std::size_t t = 1; t < autos.size(); ++t) {
    image_sorted(autos, t, tag, img);
    if (img < best) best = img;
  }
  return CanonicalForm{from_tag(a.group(), best), best};
}

CanonicalForm canonical_form(const Multiset& a) { return canonical_form(a, Automorphisms(a.group())); }

std::uint64_t orbit_size(const Multiset& a, const Automorphisms& autos) {
  const OrbitTag tag = tag_of(a);
  OrbitTag img;
  std::uint64_t stabilizer = 0;
  for (std::size_t t = 0; t < autos.size(); ++t) {
    image_sorted(autos, t, tag, img);
    if (img == tag) ++stabilizer;
  }
  return autos.size() / stabilizer;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t tag_hash(const OrbitTag& tag) {
  std::string bytes;
  bytes.reserve(tag.size() * 4);
  for (std::uint32_t v : tag) {
    for (int b = 0; b < 4; ++b) bytes += static_cast<char>((v >> (8 * b)) & 0xffU);
  }
  return fnv1a(bytes);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "CONFIRMED";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
    case Verdict::NoOrbits: return "NO_ORBITS";
  }
  return "UNKNOWN";
}

Verdict SizeRecord::verdict() const {
  if (!min_card) return Verdict::NoOrbits;
  return *min_card >= floor ? Verdict::Confirmed : Verdict::Counterexample;
}

bool SearchReport::any_counterexample() const {
  return std::any_of(records.begin(), records.end(),
                     [](const SizeRecord& r) { return r.verdict() == Verdict::Counterexample; });
}

namespace {

inline constexpr std::uint32_t kMaxSearchOrder = 1024;

// Immutable tables shared by all workers.
struct ScanTables {
  GroupParams group;
  std::uint32_t words = 0;
  std::vector<std::uint16_t> add;                           // add[a * order + b]
  std::vector<std::vector<std::uint32_t>> subgroups_of;     // proper subgroups containing x
  std::vector<std::uint32_t> limits;                        // d * p per subgroup
  std::optional<Automorphisms> autos;
  // inverse[t * order + y] = T_t^{-1}(y); by_preimage_of_one[s] lists the
  // maps with T(s) = 1.
  std::vector<std::uint32_t> inverse;
  std::vector<std::vector<std::uint32_t>> by_preimage_of_one;

  ScanTables(const GroupParams& g, bool canonical) : group(g) {
    const std::uint32_t order = g.order();
    if (order > kMaxSearchOrder) {
      throw Error(ErrorCode::OrderTooLarge, "exhaustive scans are limited to groups of order <= 1024");
    }
    words = (order + 63) / 64;
    add.resize(std::size_t{order} * order);
    for (std::uint32_t a = 0; a < order; ++a) {
      for (std::uint32_t b = 0; b < order; ++b) {
        add[std::size_t{a} * order + b] = static_cast<std::uint16_t>(g.add(Element{a}, Element{b}).index);
      }
    }
    subgroups_of.resize(order);
    for (std::uint32_t d = 1; d < g.m(); ++d) {
      for (const Subgroup& s : enumerate_subgroups(g, d)) {
        const auto id = static_cast<std::uint32_t>(limits.size());
        limits.push_back(d * g.p());
        for (Element x : s.elements()) subgroups_of[x.index].push_back(id);
      }
    }
    if (canonical) {
      autos.emplace(g);
      inverse.resize(autos->size() * order);
      by_preimage_of_one.resize(order);
      for (std::size_t t = 0; t < autos->size(); ++t) {
        for (std::uint32_t x = 0; x < order; ++x) inverse[t * order + autos->apply(t, Element{x})] = x;
        by_preimage_of_one[inverse[t * order + 1]].push_back(static_cast<std::uint32_t>(t));
      }
    }
  }
};

// Depth-first walk over nondecreasing sequences with validity counters, an
// incrementally maintained sumset per depth and optional canonical pruning.
class Walker {
 public:
  using Leaf = std::function<void(const OrbitTag&, std::uint64_t card)>;

  Walker(const ScanTables& t, std::uint32_t target, bool canonical)
      : t_(t), target_(target), canonical_(canonical), counters_(t.limits.size(), 0),
        counts_(t.group.order(), 0), sets_((std::size_t{target} + 1) * t.words, 0) {
    sets_[0] = 1;  // {0}
  }

  // Replays a prefix that is known to be valid and canonical.
  void seed(const OrbitTag& prefix) {
    for (std::uint32_t e : prefix) push(e);
  }

  void run(SizeRecord& stats, const Leaf& leaf) {
    stats_ = &stats;
    leaf_ = &leaf;
    if (seq_.size() == target_) {
      (*leaf_)(seq_, card(seq_.size()));
      return;
    }
    descend();
  }

 private:
  bool fits(std::uint32_t e) const {
    for (std::uint32_t s : t_.subgroups_of[e]) {
      if (counters_[s] + 1 >= t_.limits[s]) return false;
    }
    return true;
  }

  // Compares the multiplicity profile of T(seq) against seq from index 1
  // upward; T(seq) sorts first iff at the first differing index it has more
  // copies. Every nonzero orbit contains index 1, so a canonical sequence
  // contains 1 and only maps sending a support element to 1 can beat it.
  bool is_canonical() const {
    const std::size_t len = seq_.size();
    if (len == 0) return true;
    if (counts_[1] == 0) return false;
    const std::uint32_t order = t_.group.order();
    std::uint32_t prev = 0;
    for (std::uint32_t s : seq_) {
      if (s == prev) continue;
      prev = s;
      for (std::uint32_t t : t_.by_preimage_of_one[s]) {
        const std::uint32_t* inv = &t_.inverse[std::size_t{t} * order];
        std::size_t seen = 0;
        for (std::uint32_t v = 1; v < order; ++v) {
          const std::uint32_t mine = counts_[v];
          const std::uint32_t theirs = counts_[inv[v]];
          if (theirs != mine) {
            if (theirs > mine) return false;
            break;
          }
          seen += mine;
          if (seen == len) break;
        }
      }
    }
    return true;
  }

  void push(std::uint32_t e) {
    for (std::uint32_t s : t_.subgroups_of[e]) ++counters_[s];
    const std::size_t d = seq_.size();
    seq_.push_back(e);
    ++counts_[e];
    const std::uint64_t* src = &sets_[d * t_.words];
    std::uint64_t* dst = &sets_[(d + 1) * t_.words];
    std::copy(src, src + t_.words, dst);
    const std::uint32_t order = t_.group.order();
    for (std::uint32_t w = 0; w < t_.words; ++w) {
      std::uint64_t bits = src[w];
      while (bits) {
        const std::uint32_t i = w * 64 + static_cast<std::uint32_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint32_t j = t_.add[std::size_t{i} * order + e];
        dst[j >> 6] |= std::uint64_t{1} << (j & 63);
      }
    }
  }

  void pop() {
    const std::uint32_t e = seq_.back();
    seq_.pop_back();
    --counts_[e];
    for (std::uint32_t s : t_.subgroups_of[e]) --counters_[s];
  }

  std::uint64_t card(std::size_t depth) const {
    std::uint64_t n = 0;
    const std::uint64_t* s = &sets_[depth * t_.words];
    for (std::uint32_t w = 0; w < t_.words; ++w) n += static_cast<std::uint64_t>(std::popcount(s[w]));
    return n;
  }

  void descend() {
    const std::uint32_t start = seq_.empty() ? 1 : seq_.back();
    for (std::uint32_t e = start; e < t_.group.order(); ++e) {
      if (!fits(e)) {
        ++stats_->pruned_invalid;
        continue;
      }
      seq_.push_back(e);
      ++counts_[e];
      const bool keep = !canonical_ || is_canonical();
      --counts_[e];
      seq_.pop_back();
      if (!keep) {
        ++stats_->pruned_noncanonical;
        continue;
      }
      push(e);
      ++stats_->nodes;
      if (seq_.size() == target_) {
        (*leaf_)(seq_, card(seq_.size()));
      } else {
        descend();
      }
      pop();
    }
  }

  const ScanTables& t_;
  std::uint32_t target_;
  bool canonical_;
  std::vector<std::uint32_t> counters_;
  std::vector<std::uint32_t> counts_;  // multiplicity of each element in seq_
  std::vector<std::uint64_t> sets_;
  OrbitTag seq_;
  SizeRecord* stats_ = nullptr;
  const Leaf* leaf_ = nullptr;
};

void check_group_for_scan(std::uint32_t p, std::uint32_t m) {
  if (p == 2) throw Error(ErrorCode::EvenPrimeUnsupported, "validity is only defined for odd p");
  (void)make_group(p, m);
}

void offer_leaf(SizeRecord& rec, const OrbitTag& tag, std::uint64_t card, std::uint32_t max_witnesses) {
  ++rec.orbits_scanned;
  if (!rec.min_card || card < *rec.min_card) {
    rec.min_card = card;
    rec.witnesses.clear();
  }
  if (card == *rec.min_card && rec.witnesses.size() < max_witnesses) rec.witnesses.push_back(tag);
}

}  // namespace

void enumerate_valid(std::uint32_t p, std::uint32_t m, std::uint32_t n, bool canonical_only,
                     const std::function<void(const Multiset&)>& visit) {
  check_group_for_scan(p, m);
  if (std::uint64_t{n} + 1 > std::uint64_t{m} * p) return;  // the full group caps |A| at mp - 1
  const ScanTables tables(make_group(p, m), canonical_only);
  Walker walker(tables, n, canonical_only);
  SizeRecord stats;
  walker.run(stats, [&](const OrbitTag& tag, std::uint64_t) { visit(from_tag(tables.group, tag)); });
}

std::vector<Multiset> enumerate_valid(std::uint32_t p, std::uint32_t m, std::uint32_t n, bool canonical_only) {
  std::vector<Multiset> out;
  enumerate_valid(p, m, n, canonical_only, [&](const Multiset& a) { out.push_back(a); });
  return out;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ZPSUM_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return SearchOptions{}.budget;
}

double estimate_orbits(std::uint32_t p, std::uint32_t m, std::uint32_t n) {
  const double nonzero = std::pow(static_cast<double>(p), m) - 1.0;
  // Multisets of size n over the nonzero elements: C(nonzero + n - 1, n).
  const double log_count =
      std::lgamma(nonzero + n) - std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(nonzero);
  return std::exp(log_count) / static_cast<double>(general_linear_order(p, m));
}

SizeRecord merge_records(const SizeRecord& a, const SizeRecord& b, std::uint32_t max_witnesses) {
  if (a.n != b.n) throw std::invalid_argument("merging records of different sizes");
  SizeRecord out = a;
  out.orbits_scanned += b.orbits_scanned;
  out.nodes += b.nodes;
  out.pruned_invalid += b.pruned_invalid;
  out.pruned_noncanonical += b.pruned_noncanonical;
  out.elapsed += b.elapsed;
  if (b.min_card && (!a.min_card || *b.min_card < *a.min_card)) {
    out.min_card = b.min_card;
    out.witnesses = b.witnesses;
  } else if (b.min_card && a.min_card && *b.min_card == *a.min_card) {
    out.witnesses.insert(out.witnesses.end(), b.witnesses.begin(), b.witnesses.end());
    std::sort(out.witnesses.begin(), out.witnesses.end());
    out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()), out.witnesses.end());
  }
  if (out.witnesses.size() > max_witnesses) out.witnesses.resize(max_witnesses);
  return out;
}

SearchReport merge_reports(const SearchReport& a, const SearchReport& b) {
  SearchConfig ca = a.config, cb = b.config;
  ca.shard_id = cb.shard_id = 0;
  if (!(ca == cb)) throw std::invalid_argument("merging reports with different configurations");
  if (!a.complete() || !b.complete()) throw std::invalid_argument("merging incomplete reports");
  SearchReport out = a;
  out.config.shard_id = std::min(a.config.shard_id, b.config.shard_id);
  for (std::size_t i = 0; i < out.records.size(); ++i) {
    out.records[i] = merge_records(a.records[i], b.records[i], a.config.witnesses);
  }
  return out;
}

namespace {

void validate_config(const SearchConfig& c) {
  check_group_for_scan(c.p, c.m);
  if (c.shards == 0 || c.shard_id >= c.shards) {
    throw Error(ErrorCode::ShardOutOfRange,
                "shard " + std::to_string(c.shard_id) + " of " + std::to_string(c.shards));
  }
  if (c.n_lo < 1 || c.n_lo > c.n_hi || std::uint64_t{c.n_hi} + 1 > std::uint64_t{c.m} * c.p) {
    throw Error(ErrorCode::SizeOutOfRange, "sizes must satisfy 1 <= n_lo <= n_hi <= mp-1");
  }
}

// Re-derives each witness from scratch with the general-purpose engine.
void reverify(const GroupParams& g, const SizeRecord& rec) {
  for (const OrbitTag& w : rec.witnesses) {
    const Multiset a = from_tag(g, w);
    if (!is_valid(a).valid || a.total() != rec.n || sumset_card(a) != rec.min_card) {
      throw std::logic_error("witness failed re-verification: " + a.to_literal());
    }
  }
}

}  // namespace

SearchReport verify_conjecture(const SearchConfig& config, const SearchOptions& options,
                               const SearchReport* resume) {
  validate_config(config);
  if (!options.override_budget) {
    for (std::uint32_t n = config.n_lo; n <= config.n_hi; ++n) {
      const double per_shard = estimate_orbits(config.p, config.m, n) / config.shards;
      if (per_shard > static_cast<double>(options.budget)) {
        throw Error(ErrorCode::BudgetExceeded,
                    "estimated " + std::to_string(static_cast<std::uint64_t>(per_shard)) +
                        " orbits per shard at n=" + std::to_string(n) + " exceeds the budget of " +
                        std::to_string(options.budget));
      }
    }
  }

  SearchReport report;
  report.config = config;
  std::uint32_t n_start = config.n_lo;
  std::optional<Frontier> resume_at;
  if (resume) {
    if (!(resume->config == config)) throw Error(ErrorCode::CorruptCheckpoint, "checkpoint config mismatch");
    report.records = resume->records;
    if (resume->complete()) return report;
    resume_at = resume->frontier;
    n_start = resume_at->n;
    if (n_start < config.n_lo || n_start > config.n_hi ||
        report.records.size() != n_start - config.n_lo) {
      throw Error(ErrorCode::CorruptCheckpoint, "frontier outside the configured sizes");
    }
  }

  const ScanTables tables(make_group(config.p, config.m), true);
  const std::uint32_t workers = std::max<std::uint32_t>(1, options.workers);
  std::uint64_t tasks_finished_this_call = 0;

  for (std::uint32_t n = n_start; n <= config.n_hi; ++n) {
    const auto started = std::chrono::steady_clock::now();
    const std::uint32_t split = std::min(options.split_depth, n - 1);

    SizeRecord partial;
    partial.n = n;
    partial.floor = conjecture_floor(config.p, config.m, n);

    // Subtree roots at depth `split`; traversal above them is accounted here.
    std::vector<OrbitTag> tasks;
    SizeRecord generation = partial;
    {
      Walker walker(tables, split, true);
      walker.run(generation, [&](const OrbitTag& tag, std::uint64_t) { tasks.push_back(tag); });
    }

    std::uint64_t done = 0;
    if (resume_at && resume_at->n == n) {
      partial = resume_at->partial;
      done = resume_at->tasks_done;
      if (done > tasks.size() || (done > 0 && tasks[done - 1] != resume_at->last_tag)) {
        throw Error(ErrorCode::CorruptCheckpoint, "frontier tag does not match the task list");
      }
      resume_at.reset();
    } else {
      partial = generation;
      partial.elapsed = 0.0;
    }

    auto run_task = [&](std::size_t i) {
      SizeRecord local;
      local.n = n;
      local.floor = partial.floor;
      Walker walker(tables, n, true);
      walker.seed(tasks[i]);
      walker.run(local, [&](const OrbitTag& tag, std::uint64_t card) {
        if (tag_hash(tag) % config.shards == config.shard_id) offer_leaf(local, tag, card, config.witnesses);
      });
      return local;
    };

    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::optional<SizeRecord>> results(tasks.size());
    std::size_t next = done;
    bool stop = false;

    auto should_stop = [&] {
      if (options.cancel && options.cancel->load()) return true;
      return options.stop_after_tasks && tasks_finished_this_call >= *options.stop_after_tasks;
    };

    auto worker = [&] {
      while (true) {
        std::size_t i;
        {
          std::lock_guard lock(mu);
          if (stop || next >= tasks.size()) return;
          i = next++;
        }
        SizeRecord r = run_task(i);
        {
          std::lock_guard lock(mu);
          results[i] = std::move(r);
        }
        cv.notify_all();
      }
    };

    std::vector<std::thread> pool;
    if (workers > 1) {
      for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    bool interrupted = false;
    while (done < tasks.size()) {
      if (workers > 1) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return results[done].has_value() || (stop && next <= done); });
        if (!results[done]) break;
      } else {
        if (should_stop()) break;
        results[done] = run_task(done);
      }
      partial = merge_records(partial, *results[done], config.witnesses);
      results[done].reset();
      ++done;
      ++tasks_finished_this_call;
      if (options.on_progress) {
        SearchReport snapshot = report;
        snapshot.frontier = Frontier{n, done, tasks[done - 1], partial};
        options.on_progress(snapshot);
      }
      if (workers > 1 && should_stop()) {
        std::lock_guard lock(mu);
        stop = true;
      }
    }
    {
      std::lock_guard lock(mu);
      stop = true;
    }
    for (auto& t : pool) t.join();
    // Completed tasks beyond the contiguous prefix are recomputed on resume.
    interrupted = done < tasks.size();

    partial.elapsed += std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (interrupted) {
      report.frontier = Frontier{n, done, done ? tasks[done - 1] : OrbitTag{}, partial};
      return report;
    }
    reverify(tables.group, partial);
    report.records.push_back(std::move(partial));
  }
  return report;
}

PengReport verify_peng(std::uint32_t p, const SearchOptions& options) {
  SearchConfig config;
  config.p = p;
  config.m = 2;
  config.n_lo = config.n_hi = 2 * p - 1;
  PengReport out;
  out.search = verify_conjecture(config, options);
  out.holds = out.search.complete() && out.search.records.size() == 1 &&
              out.search.records[0].min_card == std::uint64_t{p} * p;
  return out;
}

RemarkReport verify_p11_remark() {
  const GroupParams g = make_group(11, 2);
  auto pt = [&](std::uint32_t s, std::uint32_t t) { return g.element(Coords{s % 11, t % 11}); };
  auto plus_minus_one = [](std::uint32_t v) { return v == 1 || v == 10; };

  RemarkReport r;
  r.min_other_card = std::numeric_limits<std::uint64_t>::max();
  r.min_extension_card = std::numeric_limits<std::uint64_t>::max();
  for (std::uint32_t i = 1; i <= 10; ++i) {
    for (std::uint32_t j = 1; j <= 10; ++j) {
      for (std::uint32_t k = 1; k <= 10; ++k) {
        for (std::uint32_t l = 1; l <= 10; ++l) {
          Multiset a(g);
          a.insert(pt(1, 0));
          a.insert(pt(0, 1));
          a.insert(pt(i, i));
          a.insert(pt(j, 2 * j));
          a.insert(pt(k, 3 * k));
          a.insert(pt(l, 4 * l));
          const std::uint64_t card = sumset_card(a);
          ++r.cases;
          if (card == 32) {
            r.cases_at_32.push_back({i, j, k, l, card});
          } else {
            r.min_other_card = std::min(r.min_other_card, card);
            if (card <= 33) ++r.others_at_most_33;
          }
        }
      }
    }
  }
  r.all_32_cases_plus_minus_shape = std::all_of(r.cases_at_32.begin(), r.cases_at_32.end(), [&](const RemarkCase& c) {
    return plus_minus_one(c.i) && plus_minus_one(c.j) && plus_minus_one(c.k) && plus_minus_one(c.l);
  });
  for (const RemarkCase& c : r.cases_at_32) {
    for (std::uint32_t s = 1; s <= 10; ++s) {
      Multiset a(g);
      a.insert(pt(1, 0));
      a.insert(pt(0, 1));
      a.insert(pt(c.i, c.i));
      a.insert(pt(c.j, 2 * c.j));
      a.insert(pt(c.k, 3 * c.k));
      a.insert(pt(c.l, 4 * c.l));
      a.insert(pt(s, 5 * s));
      const std::uint64_t card = sumset_card(a);
      ++r.extensions;
      r.min_extension_card = std::min(r.min_extension_card, card);
      if (card <= 33) ++r.extensions_at_most_33;
    }
  }
  Multiset base(g);
  for (auto [s, t] : {std::pair{1u, 0u}, {0u, 1u}, {1u, 1u}, {1u, 2u}, {1u, 3u}, {1u, 4u}}) base.insert(pt(s, t));
  r.base_card = sumset_card(base);
  return r;
}

}  // namespace zpsum
