#include "fg/parse.hpp"

#include <cctype>
#include <vector>

namespace fg {

namespace {

class Parser {
 public:
  Parser(const std::string& text, int rank) : text_(text), rank_(rank) {}

  Word run() {
    std::vector<Letter> out = parse_sequence();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return Word(rank_, out);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(what);
    ++pos_;
  }

  // sequence of units, stops at ',' ')' ']' or end
  std::vector<Letter> parse_sequence() {
    std::vector<Letter> out;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == ',' || c == ')' || c == ']') break;
      std::vector<Letter> unit = parse_unit();
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        long long k = parse_int();
        append_power(out, unit, k);
      } else {
        out.insert(out.end(), unit.begin(), unit.end());
      }
    }
    return out;
  }

  std::vector<Letter> parse_unit() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a letter or group");
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      Letter l = letter_from_char(c);
      int gen = l > 0 ? l : -l;
      if (gen > rank_) fail("generator beyond configured rank");
      ++pos_;
      return {l};
    }
    if (c == '(') {
      ++pos_;
      std::vector<Letter> inner = parse_sequence();
      expect(')', "expected ')'");
      return inner;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Letter> u = parse_sequence();
      expect(',', "expected ',' in commutator");
      std::vector<Letter> v = parse_sequence();
      expect(']', "expected ']'");
      std::vector<Letter> out = u;
      out.insert(out.end(), v.begin(), v.end());
      for (auto it = u.rbegin(); it != u.rend(); ++it)
        out.push_back(inverse_letter(*it));
      for (auto it = v.rbegin(); it != v.rend(); ++it)
        out.push_back(inverse_letter(*it));
      return out;
    }
    if (c == '^') fail("power without a preceding letter or group");
    fail("unexpected character");
  }

  long long parse_int() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer exponent");
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return negative ? -value : value;
  }

  static void append_power(std::vector<Letter>& out,
                           const std::vector<Letter>& unit, long long k) {
    if (k >= 0) {
      for (long long i = 0; i < k; ++i)
        out.insert(out.end(), unit.begin(), unit.end());
    } else {
      for (long long i = 0; i < -k; ++i)
        for (auto it = unit.rbegin(); it != unit.rend(); ++it)
          out.push_back(inverse_letter(*it));
    }
  }

  const std::string& text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, int rank) {
  return Parser(text, rank).run();
}

}  // namespace fg
