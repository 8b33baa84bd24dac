#pragma once

// Exhaustive, symmetry-reduced scans of valid multisets.
//
// Multisets of size n are generated as nondecreasing sequences of nonzero
// element indices. The orbit representative under GL_m(F_p) is the image
// whose ascending element sequence is lexicographically smallest. If a
// prefix already has a smaller image, so does every extension of it, which
// lets the DFS cut non-canonical branches at the first bad prefix.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zpsum/group.hpp"
#include "zpsum/multiset.hpp"

namespace zpsum {

using OrbitTag = std::vector<std::uint32_t>;

// |GL_m(F_p)|, saturating at UINT64_MAX.
std::uint64_t general_linear_order(std::uint32_t p, std::uint32_t m);

inline constexpr std::uint64_t kMaxAutomorphisms = 10'000'000;

// Every invertible linear map of Z_p^m as a permutation of element indices,
// identity first.
class Automorphisms {
 public:
  // Throws AutomorphismGroupTooLarge when |GL| or its table would not fit.
  explicit Automorphisms(const GroupParams& g);

  const GroupParams& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return count_; }
  std::uint32_t apply(std::size_t t, Element x) const { return table_[t * group_.order() + x.index]; }

 private:
  GroupParams group_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> table_;
};

struct CanonicalForm {
  Multiset multiset;
  OrbitTag orbit_tag;
};

OrbitTag tag_of(const Multiset& a);
Multiset from_tag(const GroupParams& g, const OrbitTag& tag);

CanonicalForm canonical_form(const Multiset& a);
CanonicalForm canonical_form(const Multiset& a, const Automorphisms& autos);

// |GL| / |stabilizer|.
std::uint64_t orbit_size(const Multiset& a, const Automorphisms& autos);

// Stable 64-bit FNV-1a over the little-endian tag words.
std::uint64_t tag_hash(const OrbitTag& tag);
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 14695981039346656037ULL);

// Visits every valid multiset of size n (one per GL-orbit when
// canonical_only) in lexicographic order of the ascending element sequence.
void enumerate_valid(std::uint32_t p, std::uint32_t m, std::uint32_t n, bool canonical_only,
                     const std::function<void(const Multiset&)>& visit);
std::vector<Multiset> enumerate_valid(std::uint32_t p, std::uint32_t m, std::uint32_t n,
                                      bool canonical_only);

enum class Verdict { Confirmed, Counterexample, NoOrbits };
std::string_view to_string(Verdict v);

struct SizeRecord {
  std::uint32_t n = 0;
  std::uint64_t floor = 0;
  std::optional<std::uint64_t> min_card;
  std::vector<OrbitTag> witnesses;  // lexicographically first, at min_card
  std::uint64_t orbits_scanned = 0;
  // Traversal counters for this shard's DFS.
  std::uint64_t nodes = 0;
  std::uint64_t pruned_invalid = 0;
  std::uint64_t pruned_noncanonical = 0;
  double elapsed = 0.0;

  Verdict verdict() const;
};

// Where an interrupted scan stopped: the first `tasks_done` subtrees of the
// current size were finished, the last of them rooted at `last_tag`.
struct Frontier {
  std::uint32_t n = 0;
  std::uint64_t tasks_done = 0;
  OrbitTag last_tag;
  SizeRecord partial;
};

struct SearchConfig {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t n_lo = 0;
  std::uint32_t n_hi = 0;
  std::uint32_t shards = 1;
  std::uint32_t shard_id = 0;
  std::uint32_t witnesses = 4;

  friend bool operator==(const SearchConfig&, const SearchConfig&) = default;
};

struct SearchReport {
  SearchConfig config;
  std::vector<SizeRecord> records;
  std::optional<Frontier> frontier;  // set while the scan is incomplete

  bool complete() const { return !frontier.has_value(); }
  bool any_counterexample() const;
};

struct SearchOptions {
  std::uint32_t workers = 1;
  // Largest estimated orbit count per shard accepted without override.
  std::uint64_t budget = 50'000'000;
  bool override_budget = false;
  // Subtrees rooted at this depth are the unit of parallel work and of
  // checkpointing.
  std::uint32_t split_depth = 3;
  const std::atomic<bool>* cancel = nullptr;
  // Stop after this many completed subtrees (counted across sizes).
  std::optional<std::uint64_t> stop_after_tasks;
  // Called from the coordinating thread after each contiguous advance of the
  // frontier.
  std::function<void(const SearchReport&)> on_progress;
};

// Budget from the ZPSUM_BUDGET environment variable, else the default.
std::uint64_t default_budget();

// Estimated number of orbits of size-n multisets of nonzero elements.
double estimate_orbits(std::uint32_t p, std::uint32_t m, std::uint32_t n);

// Throws BudgetExceeded, ShardOutOfRange, SizeOutOfRange,
// EvenPrimeUnsupported, AutomorphismGroupTooLarge.
SearchReport verify_conjecture(const SearchConfig& config, const SearchOptions& options = {},
                               const SearchReport* resume = nullptr);

// Shard merge: associative and independent of order. Configs must match
// except for shard_id.
SearchReport merge_reports(const SearchReport& a, const SearchReport& b);
SizeRecord merge_records(const SizeRecord& a, const SizeRecord& b, std::uint32_t max_witnesses);

struct PengReport {
  SearchReport search;
  bool holds = false;  // min #Sigma A = p^2 at |A| = 2p - 1
};

PengReport verify_peng(std::uint32_t p, const SearchOptions& options = {});

struct RemarkCase {
  std::uint32_t i = 0, j = 0, k = 0, l = 0;
  std::uint64_t card = 0;
};

struct RemarkReport {
  std::uint64_t cases = 0;
  std::vector<RemarkCase> cases_at_32;
  bool all_32_cases_plus_minus_shape = false;
  std::uint64_t others_at_most_33 = 0;
  std::uint64_t min_other_card = 0;
  std::uint64_t extensions = 0;
  std::uint64_t extensions_at_most_33 = 0;
  std::uint64_t min_extension_card = 0;
  std::uint64_t base_card = 0;  // #Sigma{(1,0),(0,1),(1,1),(1,2),(1,3),(1,4)}
  // All claims of the p = 11 computation hold.
  bool confirmed() const {
    return cases == 10000 && cases_at_32.size() == 16 && all_32_cases_plus_minus_shape &&
           others_at_most_33 == 0 && min_other_card > 33 && extensions == 160 &&
           extensions_at_most_33 == 0 && min_extension_card > 33;
  }
};

RemarkReport verify_p11_remark();

// File = one JSON header line carrying the config and a hash of the body,
// followed by the binary body (frontier tag, then the partial report).
void checkpoint_save(const SearchReport& report, const std::string& path);
// Throws CorruptCheckpoint on hash mismatch, malformed content, or a
// config different from `expected`.
SearchReport checkpoint_resume(const std::string& path, const SearchConfig& expected);

}  // namespace zpsum
