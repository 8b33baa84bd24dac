#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zpsum/error.hpp"
#include "zpsum/report.hpp"

namespace zpsum {

namespace {

constexpr std::string_view kFormat = "zpsum-checkpoint";
constexpr std::string_view kMagic = "ZPCK";

void put_u32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out += static_cast<char>((v >> (8 * b)) & 0xffU);
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out += static_cast<char>((v >> (8 * b)) & 0xffU);
}

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  std::uint64_t take(int bytes) {
    if (pos_ + static_cast<std::size_t>(bytes) > data_.size()) {
      throw Error(ErrorCode::CorruptCheckpoint, "truncated body");
    }
    std::uint64_t v = 0;
    for (int b = 0; b < bytes; ++b) v |= std::uint64_t{static_cast<unsigned char>(data_[pos_ + b])} << (8 * b);
    pos_ += static_cast<std::size_t>(bytes);
    return v;
  }
  std::string_view bytes(std::size_t n) {
    if (pos_ + n > data_.size()) throw Error(ErrorCode::CorruptCheckpoint, "truncated body");
    auto s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool at_end() const { return pos_ == data_.size(); }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace

void checkpoint_save(const SearchReport& report, const std::string& path) {
  // Binary frontier, then the partial report as JSON.
  std::string body(kMagic);
  const Frontier empty{};
  const Frontier& f = report.frontier ? *report.frontier : empty;
  put_u32(body, report.frontier ? 1 : 0);
  put_u32(body, f.n);
  put_u64(body, f.tasks_done);
  put_u32(body, static_cast<std::uint32_t>(f.last_tag.size()));
  for (std::uint32_t v : f.last_tag) put_u32(body, v);
  const std::string json = to_json(report).dump();
  put_u32(body, static_cast<std::uint32_t>(json.size()));
  body += json;

  const Json header{{"format", std::string(kFormat)},
                    {"version", 1},
                    {"config", to_json(report.config)},
                    {"body_bytes", body.size()},
                    {"body_hash", hex64(fnv1a(body))}};

  // Write-then-rename so an interrupted save never leaves a torn file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp);
    out << header.dump() << '\n' << body;
    if (!out) throw Error(ErrorCode::Io, "short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename " + tmp + ": " + ec.message());
}

SearchReport checkpoint_resume(const std::string& path, const SearchConfig& expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();
  const auto newline = data.find('\n');
  if (newline == std::string::npos) throw Error(ErrorCode::CorruptCheckpoint, "missing header line");

  Json header;
  try {
    header = Json::parse(data.substr(0, newline));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::CorruptCheckpoint, std::string("bad header: ") + e.what());
  }
  const std::string_view body = std::string_view(data).substr(newline + 1);

  SearchReport report;
  try {
    if (header.at("format").get<std::string>() != kFormat || header.at("version").get<int>() != 1) {
      throw Error(ErrorCode::CorruptCheckpoint, "unknown checkpoint format");
    }
    if (header.at("body_bytes").get<std::size_t>() != body.size() ||
        header.at("body_hash").get<std::string>() != hex64(fnv1a(body))) {
      throw Error(ErrorCode::CorruptCheckpoint, "content hash mismatch");
    }
    if (!(search_config_from_json(header.at("config")) == expected)) {
      throw Error(ErrorCode::CorruptCheckpoint, "checkpoint header is for a different (p, m, n) configuration");
    }

    Reader r(body);
    if (r.bytes(kMagic.size()) != kMagic) throw Error(ErrorCode::CorruptCheckpoint, "bad magic");
    const bool has_frontier = r.take(4) != 0;
    Frontier f;
    f.n = static_cast<std::uint32_t>(r.take(4));
    f.tasks_done = r.take(8);
    const auto len = r.take(4);
    for (std::uint64_t i = 0; i < len; ++i) f.last_tag.push_back(static_cast<std::uint32_t>(r.take(4)));
    const auto json_len = r.take(4);
    report = search_report_from_json(Json::parse(r.bytes(json_len)));
    if (!r.at_end()) throw Error(ErrorCode::CorruptCheckpoint, "trailing bytes");
    if (!(report.config == expected) || has_frontier != report.frontier.has_value()) {
      throw Error(ErrorCode::CorruptCheckpoint, "body disagrees with header");
    }
    if (has_frontier && (report.frontier->n != f.n || report.frontier->tasks_done != f.tasks_done ||
                         report.frontier->last_tag != f.last_tag)) {
      throw Error(ErrorCode::CorruptCheckpoint, "binary frontier disagrees with the partial report");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::CorruptCheckpoint, e.what());
  }
  return report;
}

}  // namespace zpsum
