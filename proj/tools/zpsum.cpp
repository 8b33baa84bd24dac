// zpsum: command-line front end. See README.md for usage.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zpsum/bounds.hpp"
#include "zpsum/corpus.hpp"
#include "zpsum/error.hpp"
#include "zpsum/multiset.hpp"
#include "zpsum/report.hpp"
#include "zpsum/search.hpp"
#include "zpsum/sumset.hpp"

using namespace zpsum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIncomplete = 4;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_interrupted{false};
static_assert(std::atomic<bool>::is_always_lock_free);

extern "C" void on_signal(int) { g_interrupted.store(true); }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Human, Json, Csv };

struct Options {
  Format format = Format::Human;

  // Multiset input: a literal, or a named construction.
  std::string literal;
  std::string construct;
  std::optional<std::uint32_t> p, m, k;

  // sumset
  std::uint64_t oracle_cases = 0;
  std::uint64_t seed = kDefaultSeed;

  // verify / peng
  std::string n_range;
  std::uint32_t shards = 1;
  std::uint32_t shard_id = 0;
  std::uint32_t workers = 1;
  std::uint32_t witnesses = 4;
  std::string checkpoint;
  bool resume = false;
  double checkpoint_interval = 30.0;
  std::optional<std::uint64_t> budget;
  bool override_budget = false;
  std::optional<std::uint64_t> stop_after_tasks;
};

Json envelope(std::string_view command) {
  return Json{{"artifact", std::string(kArtifactName)},
              {"version", std::string(kArtifactVersion)},
              {"command", std::string(command)}};
}

std::uint32_t need(const std::optional<std::uint32_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

Multiset build(const std::string& name, std::uint32_t p, std::uint32_t m, std::optional<std::uint32_t> k) {
  if (name == "extremal") {
    if (m != 2) throw UsageError("the extremal construction lives in rank 2 (--m 2)");
    return construct_extremal_2d(p, k.value_or(0));
  }
  if (name == "B") return construct_B(p, m);
  if (name == "B-prime") return construct_B_prime(p, m);
  throw UsageError("unknown construction '" + name + "' (extremal, B, B-prime)");
}

Multiset input_multiset(const Options& o) {
  if (!o.literal.empty() && !o.construct.empty()) throw UsageError("give a literal or --construct, not both");
  if (!o.literal.empty()) return parse_multiset_literal(o.literal);
  if (!o.construct.empty()) return build(o.construct, need(o.p, "--p"), o.m.value_or(2), o.k);
  throw UsageError("expected a multiset literal such as \"p=5 m=2 : (1,0)*4 (0,1)*2\" or --construct");
}

void emit_csv(const Json& flat) {
  std::cout << "field,value\n";
  for (const auto& [key, value] : flat.items()) {
    if (value.is_structured()) continue;
    std::cout << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

// ---- sumset ----

int run_oracle_corpus(const Options& o) {
  const GroupParams g = make_group(need(o.p, "--p"), o.m.value_or(2));
  Corpus corpus(o.seed);
  std::uint64_t mismatches = 0;
  std::string first;
  for (std::uint64_t i = 0; i < o.oracle_cases; ++i) {
    const Multiset a = corpus.any(g, std::uint64_t{1} << 16);
    if (!(sumset(a) == brute_force_sumset(a))) {
      if (mismatches++ == 0) first = a.to_literal();
    }
  }
  Json out = envelope("sumset");
  out["p"] = g.p();
  out["m"] = g.m();
  out["seed"] = o.seed;
  out["cases"] = o.oracle_cases;
  out["mismatches"] = mismatches;
  out["first_mismatch"] = first.empty() ? Json(nullptr) : Json(first);
  switch (o.format) {
    case Format::Json: std::cout << out.dump(2) << '\n'; break;
    case Format::Csv: emit_csv(out); break;
    case Format::Human:
      std::cout << o.oracle_cases << " random multisets over Z_" << g.p() << '^' << g.m() << " (seed " << o.seed
                << "): " << mismatches << " mismatches between the sumset engine and the oracle\n";
      if (!first.empty()) std::cout << "first mismatch: " << first << '\n';
  }
  return mismatches == 0 ? kExitOk : kExitCounterexample;
}

int run_sumset(const Options& o) {
  if (o.oracle_cases > 0) return run_oracle_corpus(o);
  const Multiset a = input_multiset(o);
  const DenseSet s = sumset(a);
  std::optional<std::uint64_t> oracle;
  if (submultiset_count(a) <= kBruteForceLimit) oracle = brute_force_sumset(a).card();

  Json out = envelope("sumset");
  out["multiset"] = a.to_literal();
  out["size"] = a.total();
  out["support"] = a.support();
  out.update(sumset_json(s));
  out["oracle_card"] = oracle ? Json(*oracle) : Json(nullptr);
  switch (o.format) {
    case Format::Json: std::cout << out.dump(2) << '\n'; break;
    case Format::Csv: emit_csv(out); break;
    case Format::Human:
      std::cout << a.to_literal() << '\n'
                << "|A| = " << a.total() << ", #A = " << a.support() << '\n'
                << "#Sigma A = " << s.card() << '\n';
      if (oracle) {
        std::cout << "oracle:    " << *oracle << (*oracle == s.card() ? " (agrees)" : " (DISAGREES)") << '\n';
      } else {
        std::cout << "oracle:    skipped, too many submultisets\n";
      }
  }
  return oracle && *oracle != s.card() ? kExitCounterexample : kExitOk;
}

// ---- validate ----

int run_validate(const Options& o) {
  const Multiset a = input_multiset(o);
  const ValidityReport v = is_valid(a);
  Json out = envelope("validate");
  out["multiset"] = a.to_literal();
  out["size"] = a.total();
  out.update(to_json(v));
  switch (o.format) {
    case Format::Json: std::cout << out.dump(2) << '\n'; break;
    case Format::Csv: emit_csv(out); break;
    case Format::Human:
      std::cout << a.to_literal() << '\n' << (v.valid ? "valid" : "invalid") << '\n';
      if (v.zero_present) std::cout << "  contains the identity\n";
      for (const Violation& x : v.violations) {
        std::cout << "  rank " << x.rank << " subgroup " << x.subgroup << " holds " << x.count << " >= " << x.limit
                  << '\n';
      }
      if (v.full_rank_clause_only) {
        std::cout << "  note: only the whole-group clause fails; every line is within its limit\n";
      }
  }
  return kExitOk;
}

// ---- bound ----

std::string describe(const BoundCertificate& c, const GroupParams& g) {
  std::ostringstream s;
  s << to_string(c.rule) << " = " << c.value;
  const Json params = to_json(c, g).at("params");
  if (!params.empty()) s << "  " << params.dump();
  return s.str();
}

int run_thresholds(const Options& o) {
  const ThresholdReport t = thresholds(need(o.p, "--p"), need(o.k, "--k"));
  Json out = envelope("bound");
  out.update(to_json(t));
  switch (o.format) {
    case Format::Json: std::cout << out.dump(2) << '\n'; break;
    case Format::Csv: emit_csv(out); break;
    case Format::Human:
      std::cout << "k = " << t.k << ", H_k = " << out["harmonic"].get<std::string>() << '\n'
                << "large-p threshold: p >= " << t.p_min_large_p << " ("
                << (t.large_p_hypothesis ? "met" : "not met") << " at p = " << t.p << ")\n"
                << "small-k range at p = " << t.p << ": k <= " << t.k_max_small_k << " ("
                << (t.small_k_hypothesis ? "met" : "not met") << ")\n";
  }
  return kExitOk;
}

int run_bound(const Options& o) {
  if (o.literal.empty() && o.construct.empty()) return run_thresholds(o);
  const Multiset a = input_multiset(o);
  const GroupParams& g = a.group();

  std::vector<BoundCertificate> certs;
  try {
    certs.push_back(cd_bound(a));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotOnOneLine && e.code() != ErrorCode::ZeroInMultiset) throw;
  }
  const bool valid = g.p() != 2 && is_valid(a).valid;
  std::optional<BoundCertificate> best;
  if (valid && g.m() == 2) best = best_bound(a);
  std::optional<BoundCertificate> floor;
  if (g.p() != 2 && a.total() + 1 <= std::uint64_t{g.m()} * g.p()) floor = conjecture_floor_certificate(a);
  const std::uint64_t exact = sumset_card(a);

  Json out = envelope("bound");
  out["multiset"] = a.to_literal();
  out["valid"] = valid;
  Json list = Json::array();
  for (const auto& c : certs) list.push_back(to_json(c, g));
  out["certificates"] = list;
  out["best"] = best ? to_json(*best, g) : Json(nullptr);
  out["conjecture_floor"] = floor ? to_json(*floor, g) : Json(nullptr);
  out["sumset_card"] = exact;

  switch (o.format) {
    case Format::Json: std::cout << out.dump(2) << '\n'; break;
    case Format::Csv: {
      std::cout << "rule,value\n";
      for (const auto& c : certs) std::cout << to_string(c.rule) << ',' << c.value << '\n';
      if (best) std::cout << "best:" << to_string(best->rule) << ',' << best->value << '\n';
      if (floor) std::cout << "ConjectureFloor," << floor->value << '\n';
      std::cout << "exact," << exact << '\n';
      break;
    }
    case Format::Human:
      std::cout << a.to_literal() << '\n';
      for (const auto& c : certs) std::cout << describe(c, g) << '\n';
      if (best) {
        std::cout << "best: " << describe(*best, g) << '\n';
      } else if (g.m() == 2) {
        std::cout << "best: not available, the multiset is not valid\n";
      } else {
        std::cout << "best: only implemented in rank 2\n";
      }
      if (floor) std::cout << "conjectured floor: " << floor->value << '\n';
      std::cout << "exact #Sigma A = " << exact << '\n';
  }
  return kExitOk;
}

// ---- construct ----

int run_construct(const Options& o) {
  if (o.construct.empty()) throw UsageError("construct needs a name: extremal, B or B-prime");
  const Multiset a = input_multiset(o);
  const ValidityReport v = is_valid(a);
  const DenseSet s = sumset(a);
  Json out = envelope("construct");
  out["name"] = o.construct;
  out["multiset"] = a.to_literal();
  out["size"] = a.total();
  out["valid"] = v.valid;
  out.update(sumset_json(s));
  switch (o.format) {
    case Format::Json: std::cout << out.dump(2) << '\n'; break;
    case Format::Csv: emit_csv(out); break;
    case Format::Human:
      std::cout << a.to_literal() << '\n'
                << "|A| = " << a.total() << ", " << (v.valid ? "valid" : "invalid") << ", #Sigma A = " << s.card()
                << '\n';
  }
  return kExitOk;
}

// ---- verify / peng ----

void parse_range(const std::string& text, std::uint32_t& lo, std::uint32_t& hi) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = static_cast<std::uint32_t>(std::stoul(text, &used));
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      lo = static_cast<std::uint32_t>(std::stoul(a, &used));
      if (used != a.size()) throw std::invalid_argument(text);
      hi = static_cast<std::uint32_t>(std::stoul(b, &used));
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw UsageError("--n expects N or A..B, got '" + text + "'");
  }
}

SearchOptions search_options(const Options& o) {
  SearchOptions opt;
  opt.workers = o.workers;
  opt.budget = o.budget.value_or(default_budget());
  opt.override_budget = o.override_budget;
  opt.cancel = &g_interrupted;
  opt.stop_after_tasks = o.stop_after_tasks;
  return opt;
}

void print_records(const SearchReport& r, Format format) {
  const GroupParams g = make_group(r.config.p, r.config.m);
  if (format == Format::Csv) {
    std::cout << "n,floor,min_card,verdict\n";
    for (const SizeRecord& rec : r.records) {
      std::cout << rec.n << ',' << rec.floor << ',' << (rec.min_card ? std::to_string(*rec.min_card) : "") << ','
                << to_string(rec.verdict()) << '\n';
    }
    return;
  }
  std::cout << "Z_" << r.config.p << '^' << r.config.m << ", n = " << r.config.n_lo << ".." << r.config.n_hi;
  if (r.config.shards > 1) std::cout << ", shard " << r.config.shard_id << " of " << r.config.shards;
  std::cout << '\n';
  std::cout << std::left << std::setw(5) << "n" << std::setw(8) << "floor" << std::setw(8) << "min" << std::setw(16)
            << "verdict" << std::setw(14) << "orbits" << "elapsed\n";
  for (const SizeRecord& rec : r.records) {
    std::cout << std::setw(5) << rec.n << std::setw(8) << rec.floor << std::setw(8)
              << (rec.min_card ? std::to_string(*rec.min_card) : "-") << std::setw(16) << to_string(rec.verdict())
              << std::setw(14) << rec.orbits_scanned << std::fixed << std::setprecision(2) << rec.elapsed << "s\n";
    for (const OrbitTag& w : rec.witnesses) std::cout << "     " << from_tag(g, w).to_literal() << '\n';
  }
  if (r.frontier) {
    std::cout << "incomplete: stopped at n = " << r.frontier->n << " after " << r.frontier->tasks_done
              << " subtrees\n";
  }
}

SearchReport run_search(const SearchConfig& config, const Options& o) {
  SearchOptions opt = search_options(o);
  std::optional<SearchReport> resume;
  if (o.resume) {
    if (o.checkpoint.empty()) throw UsageError("--resume needs --checkpoint");
    resume = checkpoint_resume(o.checkpoint, config);
  }
  if (!o.checkpoint.empty()) {
    auto last = std::chrono::steady_clock::now();
    opt.on_progress = [&o, last](const SearchReport& snapshot) mutable {
      const auto now = std::chrono::steady_clock::now();
      if (std::chrono::duration<double>(now - last).count() < o.checkpoint_interval) return;
      checkpoint_save(snapshot, o.checkpoint);
      last = now;
    };
  }
  SearchReport r = verify_conjecture(config, opt, resume ? &*resume : nullptr);
  if (!o.checkpoint.empty()) checkpoint_save(r, o.checkpoint);
  return r;
}

int search_exit(const SearchReport& r) {
  if (!r.complete()) return g_interrupted.load() ? kExitInterrupted : kExitIncomplete;
  return r.any_counterexample() ? kExitCounterexample : kExitOk;
}

int run_verify(const Options& o) {
  SearchConfig config;
  config.p = need(o.p, "--p");
  config.m = need(o.m, "--m");
  if (o.n_range.empty()) throw UsageError("missing --n");
  parse_range(o.n_range, config.n_lo, config.n_hi);
  config.shards = o.shards;
  config.shard_id = o.shard_id;
  config.witnesses = o.witnesses;
  const SearchReport r = run_search(config, o);
  if (o.format == Format::Json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    print_records(r, o.format);
  }
  return search_exit(r);
}

int run_peng(const Options& o) {
  const std::uint32_t p = need(o.p, "--p");
  SearchConfig config;
  config.p = p;
  config.m = 2;
  config.n_lo = config.n_hi = 2 * p - 1;
  config.shards = o.shards;
  config.shard_id = o.shard_id;
  config.witnesses = o.witnesses;
  const SearchReport r = run_search(config, o);
  const bool sharded = config.shards > 1;
  const bool holds = r.complete() && r.records.size() == 1 && r.records[0].min_card == std::uint64_t{p} * p;
  switch (o.format) {
    case Format::Json: {
      Json out = envelope("peng");
      out["p"] = p;
      out["holds"] = holds;
      out["search"] = to_json(r);
      std::cout << out.dump(2) << '\n';
      break;
    }
    case Format::Csv: print_records(r, o.format); break;
    case Format::Human:
      print_records(r, o.format);
      if (r.complete()) {
        std::cout << "every valid multiset of size " << 2 * p - 1 << " fills Z_" << p << "^2: "
                  << (holds ? "yes" : "no") << (sharded ? " (this shard)" : "") << '\n';
      }
  }
  if (!r.complete()) return search_exit(r);
  return holds ? kExitOk : kExitCounterexample;
}

// ---- remark-p11 ----

int run_remark(const Options& o) {
  const RemarkReport r = verify_p11_remark();
  Json out = envelope("remark-p11");
  out.update(to_json(r));
  switch (o.format) {
    case Format::Json: std::cout << out.dump(2) << '\n'; break;
    case Format::Csv: emit_csv(out); break;
    case Format::Human:
      std::cout << "six-element configurations: " << r.cases << '\n'
                << "with exactly 32 sums: " << r.cases_at_32.size()
                << (r.all_32_cases_plus_minus_shape ? " (all of the +-(1,1), +-(1,2), +-(1,3), +-(1,4) shape)" : "")
                << '\n'
                << "others with at most 33: " << r.others_at_most_33 << " (smallest other: " << r.min_other_card
                << ")\n"
                << "seven-element extensions: " << r.extensions << ", with at most 33: " << r.extensions_at_most_33
                << " (smallest: " << r.min_extension_card << ")\n"
                << (r.confirmed() ? "CONFIRMED" : "NOT CONFIRMED") << '\n';
  }
  return r.confirmed() ? kExitOk : kExitCounterexample;
}

void add_format(CLI::App* cmd, Options& o) {
  const std::map<std::string, Format> formats{{"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
  cmd->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats));
}

void add_multiset_input(CLI::App* cmd, Options& o) {
  cmd->add_option("multiset", o.literal, "Multiset literal, e.g. \"p=5 m=2 : (1,0)*4 (0,1)*2\"");
  cmd->add_option("--construct", o.construct, "Use a named construction instead: extremal, B, B-prime");
  cmd->add_option("--p", o.p, "Prime p for --construct");
  cmd->add_option("--m", o.m, "Rank m for --construct (default 2)");
  cmd->add_option("--k", o.k, "k for the extremal construction (default 0)");
}

void add_search_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--shards", o.shards, "Number of shards")->check(CLI::PositiveNumber);
  cmd->add_option("--shard-id", o.shard_id, "Shard to scan, 0-based");
  cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--witnesses", o.witnesses, "Witnesses kept per size");
  cmd->add_option("--checkpoint", o.checkpoint, "Checkpoint file, written periodically and on exit");
  cmd->add_option("--checkpoint-interval", o.checkpoint_interval, "Seconds between checkpoint writes");
  cmd->add_flag("--resume", o.resume, "Continue from --checkpoint");
  cmd->add_option("--budget", o.budget, "Largest estimated orbit count per shard (default $ZPSUM_BUDGET or 5e7)");
  cmd->add_flag("--override-budget", o.override_budget, "Run even when the estimate exceeds the budget");
  cmd->add_option("--stop-after", o.stop_after_tasks, "Stop after this many subtrees (exit 4, resumable)");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Sumsets of multisets over Z_p^m"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kArtifactVersion));

  auto* sumset_cmd = app.add_subcommand("sumset", "Exact #Sigma A, checked against the brute-force oracle");
  add_multiset_input(sumset_cmd, o);
  add_format(sumset_cmd, o);
  sumset_cmd->add_option("--oracle-cases", o.oracle_cases, "Compare engine and oracle on N random multisets over --p/--m");
  sumset_cmd->add_option("--seed", o.seed, "Seed for --oracle-cases");

  auto* validate_cmd = app.add_subcommand("validate", "Validity report");
  add_multiset_input(validate_cmd, o);
  add_format(validate_cmd, o);

  auto* bound_cmd = app.add_subcommand("bound", "Lower-bound certificates, or thresholds for --p/--k");
  add_multiset_input(bound_cmd, o);
  add_format(bound_cmd, o);

  auto* construct_cmd = app.add_subcommand("construct", "Build a named construction");
  construct_cmd->add_option("name", o.construct, "extremal, B or B-prime")->required();
  construct_cmd->add_option("--p", o.p, "Prime p")->required();
  construct_cmd->add_option("--m", o.m, "Rank m (default 2)");
  construct_cmd->add_option("--k", o.k, "k for the extremal construction (default 0)");
  add_format(construct_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive minimum of #Sigma A over valid multisets");
  verify_cmd->add_option("--p", o.p, "Prime p")->required();
  verify_cmd->add_option("--m", o.m, "Rank m")->required();
  verify_cmd->add_option("--n", o.n_range, "Size N or range A..B")->required();
  add_search_flags(verify_cmd, o);
  add_format(verify_cmd, o);

  auto* remark_cmd = app.add_subcommand("remark-p11", "The structured p = 11 search");
  add_format(remark_cmd, o);

  auto* peng_cmd = app.add_subcommand("peng", "Every valid multiset of size 2p-1 in Z_p^2 has full sumset");
  peng_cmd->add_option("--p", o.p, "Prime p")->required();
  add_search_flags(peng_cmd, o);
  add_format(peng_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  try {
    if (sumset_cmd->parsed()) return run_sumset(o);
    if (validate_cmd->parsed()) return run_validate(o);
    if (bound_cmd->parsed()) return run_bound(o);
    if (construct_cmd->parsed()) return run_construct(o);
    if (verify_cmd->parsed()) return run_verify(o);
    if (remark_cmd->parsed()) return run_remark(o);
    if (peng_cmd->parsed()) return run_peng(o);
  } catch (const SyntaxError& e) {
    std::cerr << "zpsum: syntax error at byte " << e.offset() << ": " << e.what() << '\n';
    if (!o.literal.empty()) std::cerr << "  " << o.literal << "\n  " << std::string(e.offset(), ' ') << "^\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "zpsum: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "zpsum: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
