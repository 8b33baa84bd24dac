#pragma once

// JSON forms of every report the library emits. Field names are stable.

#include <string>
#include <string_view>

#include <json.hpp>

#include "zpsum/bounds.hpp"
#include "zpsum/multiset.hpp"
#include "zpsum/search.hpp"
#include "zpsum/sumset.hpp"

namespace zpsum {

inline constexpr std::string_view kArtifactName = "zpsum";
inline constexpr std::string_view kArtifactVersion = "1.0.0";

using Json = nlohmann::json;

// "p=<p> m=<m> : ( <elem> ('*' <int>)? )*", residues reduced mod p.
// Throws SyntaxError (with byte offset), DimensionMismatch, NonPrime,
// RankZero, OrderTooLarge.
Multiset parse_multiset_literal(std::string_view text);

Json to_json(const BoundCertificate& c, const GroupParams& g);
Json to_json(const ValidityReport& v);
Json sumset_json(const DenseSet& s);
Json to_json(const ThresholdReport& t);
Json to_json(const RemarkReport& r);
Json to_json(const SearchConfig& c);
Json to_json(const SizeRecord& r, const GroupParams& g);
// Complete search report including "body_hash", the FNV-1a hash of the
// report serialized without timing fields.
Json to_json(const SearchReport& r);

SearchConfig search_config_from_json(const Json& j);
SizeRecord size_record_from_json(const Json& j, const GroupParams& g);
SearchReport search_report_from_json(const Json& j);

// Hex of a 64-bit value, 16 lowercase digits.
std::string hex64(std::uint64_t v);

}  // namespace zpsum
