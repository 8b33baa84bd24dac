#include "zpsum/report.hpp"

#include <cstdio>

#include "zpsum/error.hpp"

namespace zpsum {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json to_json(const BoundCertificate& c, const GroupParams& g) {
  Json params = Json::object();
  if (c.subgroup) params["subgroup"] = *c.subgroup;
  if (c.complement) params["complement"] = *c.complement;
  if (c.target) params["target"] = g.format(*c.target);
  if (c.pairs) params["j"] = *c.pairs;
  if (c.max_pairs) params["j_max"] = *c.max_pairs;
  if (c.line_count) params["line_count"] = *c.line_count;
  if (c.d_size) params["d"] = *c.d_size;
  if (c.e_size) params["e"] = *c.e_size;
  if (c.exact_factors) params["exact_factors"] = *c.exact_factors;
  if (!c.part_cards.empty()) params["part_cards"] = c.part_cards;
  return Json{{"rule", std::string(to_string(c.rule))}, {"params", params}, {"value", c.value}};
}

Json to_json(const ValidityReport& v) {
  Json violations = Json::array();
  for (const Violation& x : v.violations) {
    violations.push_back({{"rank", x.rank}, {"count", x.count}, {"limit", x.limit}, {"subgroup", x.subgroup}});
  }
  return Json{{"valid", v.valid},
              {"zero_present", v.zero_present},
              {"violations", violations},
              {"full_rank_clause_only", v.full_rank_clause_only}};
}

Json sumset_json(const DenseSet& s) {
  return Json{{"sumset_card", s.card()}, {"sumset_bits", s.to_hex()}};
}

Json to_json(const ThresholdReport& t) {
  return Json{{"p", t.p},
              {"k", t.k},
              {"harmonic", boost::multiprecision::numerator(t.harmonic).str() + "/" +
                               boost::multiprecision::denominator(t.harmonic).str()},
              {"harmonic_approx", static_cast<double>(t.harmonic)},
              {"p_min_large_p", t.p_min_large_p},
              {"k_max_small_k", t.k_max_small_k},
              {"large_p_hypothesis", t.large_p_hypothesis},
              {"small_k_hypothesis", t.small_k_hypothesis},
              {"log_base", std::string(ThresholdReport::kLogBase)}};
}

Json to_json(const RemarkReport& r) {
  Json cases = Json::array();
  for (const RemarkCase& c : r.cases_at_32) {
    cases.push_back({{"i", c.i}, {"j", c.j}, {"k", c.k}, {"l", c.l}, {"card", c.card}});
  }
  return Json{{"p", 11},
              {"cases", r.cases},
              {"sixteen_cases", r.cases_at_32.size()},
              {"cases_at_32", cases},
              {"all_32_cases_plus_minus_shape", r.all_32_cases_plus_minus_shape},
              {"others_at_most_33", r.others_at_most_33},
              {"min_other_card", r.min_other_card},
              {"extensions", r.extensions},
              {"extensions_at_most_33", r.extensions_at_most_33},
              {"min_extension_card", r.min_extension_card},
              {"base_card", r.base_card},
              {"confirmed", r.confirmed()}};
}

Json to_json(const SearchConfig& c) {
  return Json{{"p", c.p},           {"m", c.m},           {"n_lo", c.n_lo},         {"n_hi", c.n_hi},
              {"shards", c.shards}, {"shard_id", c.shard_id}, {"witnesses", c.witnesses}};
}

SearchConfig search_config_from_json(const Json& j) {
  SearchConfig c;
  c.p = j.at("p").get<std::uint32_t>();
  c.m = j.at("m").get<std::uint32_t>();
  c.n_lo = j.at("n_lo").get<std::uint32_t>();
  c.n_hi = j.at("n_hi").get<std::uint32_t>();
  c.shards = j.at("shards").get<std::uint32_t>();
  c.shard_id = j.at("shard_id").get<std::uint32_t>();
  c.witnesses = j.at("witnesses").get<std::uint32_t>();
  return c;
}

namespace {

Json record_body(const SizeRecord& r, const GroupParams& g) {
  Json witnesses = Json::array();
  for (const OrbitTag& w : r.witnesses) witnesses.push_back(from_tag(g, w).to_literal());
  return Json{{"n", r.n},
              {"floor", r.floor},
              {"min_card", r.min_card ? Json(*r.min_card) : Json(nullptr)},
              {"verdict", std::string(to_string(r.verdict()))},
              {"witnesses", witnesses},
              {"orbits_scanned", r.orbits_scanned},
              {"nodes", r.nodes},
              {"pruned_counts", {{"invalid", r.pruned_invalid}, {"noncanonical", r.pruned_noncanonical}}}};
}

Json report_body(const SearchReport& r, bool timing) {
  const GroupParams g = make_group(r.config.p, r.config.m);
  auto record = [&](const SizeRecord& rec) {
    Json j = record_body(rec, g);
    if (timing) j["elapsed"] = rec.elapsed;
    return j;
  };
  Json records = Json::array();
  for (const SizeRecord& rec : r.records) records.push_back(record(rec));
  Json out{{"artifact", std::string(kArtifactName)},
           {"version", std::string(kArtifactVersion)},
           {"config", to_json(r.config)},
           {"records", records},
           {"complete", r.complete()}};
  if (r.frontier) {
    Json tag = Json::array();
    for (std::uint32_t v : r.frontier->last_tag) tag.push_back(v);
    out["frontier"] = {{"n", r.frontier->n},
                       {"tasks_done", r.frontier->tasks_done},
                       {"last_tag", tag},
                       {"partial", record(r.frontier->partial)}};
  }
  return out;
}

}  // namespace

Json to_json(const SizeRecord& r, const GroupParams& g) {
  Json j = record_body(r, g);
  j["elapsed"] = r.elapsed;
  return j;
}

Json to_json(const SearchReport& r) {
  Json j = report_body(r, true);
  j["body_hash"] = hex64(fnv1a(report_body(r, false).dump()));
  return j;
}

SizeRecord size_record_from_json(const Json& j, const GroupParams& g) {
  SizeRecord r;
  r.n = j.at("n").get<std::uint32_t>();
  r.floor = j.at("floor").get<std::uint64_t>();
  if (!j.at("min_card").is_null()) r.min_card = j.at("min_card").get<std::uint64_t>();
  for (const auto& w : j.at("witnesses")) {
    const Multiset a = parse_multiset_literal(w.get<std::string>());
    if (!(a.group() == g)) throw Error(ErrorCode::GroupMismatch, "witness from another group");
    r.witnesses.push_back(tag_of(a));
  }
  r.orbits_scanned = j.at("orbits_scanned").get<std::uint64_t>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.pruned_invalid = j.at("pruned_counts").at("invalid").get<std::uint64_t>();
  r.pruned_noncanonical = j.at("pruned_counts").at("noncanonical").get<std::uint64_t>();
  if (j.contains("elapsed")) r.elapsed = j.at("elapsed").get<double>();
  return r;
}

SearchReport search_report_from_json(const Json& j) {
  SearchReport r;
  r.config = search_config_from_json(j.at("config"));
  const GroupParams g = make_group(r.config.p, r.config.m);
  for (const auto& rec : j.at("records")) r.records.push_back(size_record_from_json(rec, g));
  if (j.contains("frontier")) {
    const Json& f = j.at("frontier");
    Frontier fr;
    fr.n = f.at("n").get<std::uint32_t>();
    fr.tasks_done = f.at("tasks_done").get<std::uint64_t>();
    fr.last_tag = f.at("last_tag").get<OrbitTag>();
    fr.partial = size_record_from_json(f.at("partial"), g);
    r.frontier = std::move(fr);
  }
  return r;
}

}  // namespace zpsum
