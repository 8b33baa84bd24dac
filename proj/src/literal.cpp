#include <cctype>
#include <limits>

#include "zpsum/error.hpp"
#include "zpsum/report.hpp"

namespace zpsum {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) throw SyntaxError(pos_, "expected '" + std::string(w) + "'");
    pos_ += w.size();
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError(start, "expected an integer");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) throw SyntaxError(start, "integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -v : v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Multiset parse_multiset_literal(std::string_view text) {
  Cursor cur(text);
  cur.expect_word("p");
  cur.expect('=');
  const std::size_t p_at = cur.pos();
  const std::int64_t p = cur.integer();
  cur.expect_word("m");
  cur.expect('=');
  const std::size_t m_at = cur.pos();
  const std::int64_t m = cur.integer();
  if (p < 0) throw SyntaxError(p_at, "p must be positive");
  if (m < 0) throw SyntaxError(m_at, "m must be positive");
  const GroupParams g = make_group(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(m));
  cur.expect(':');

  Multiset a(g);
  while (!cur.done()) {
    const std::size_t elem_at = cur.pos();
    cur.expect('(');
    std::vector<std::int64_t> coords{cur.integer()};
    while (cur.peek(',')) {
      cur.expect(',');
      coords.push_back(cur.integer());
    }
    cur.expect(')');
    if (coords.size() != g.m()) {
      throw Error(ErrorCode::DimensionMismatch, "element at byte " + std::to_string(elem_at) + " has " +
                                                    std::to_string(coords.size()) + " coordinates, expected " +
                                                    std::to_string(g.m()));
    }
    std::int64_t count = 1;
    if (cur.peek('*')) {
      cur.expect('*');
      const std::size_t count_at = cur.pos();
      count = cur.integer();
      if (count < 1 || count > std::numeric_limits<std::uint32_t>::max()) {
        throw SyntaxError(count_at, "multiplicity must be a positive integer");
      }
    }
    a.insert(g.element_reduced(coords), static_cast<std::uint32_t>(count));
  }
  return a;
}

}  // namespace zpsum
