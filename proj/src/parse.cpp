#include "cuspidal/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "cuspidal/errors.hpp"

namespace cuspidal {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  MixedPolynomial run() {
    skip_ws();
    if (at_end()) fail({"term"});
    auto value = expr();
    skip_ws();
    if (!at_end()) fail({"'+'", "'-'", "'*'", "factor", "end of input"});
    return value;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "parse error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    if (at_end()) {
      msg += ", found end of input";
    } else {
      msg += ", found '";
      msg += src_[pos_];
      msg += "'";
    }
    throw ParseError(pos_, std::move(expected), msg);
  }

  bool starts_number() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  bool starts_atom() const {
    const char c = peek();
    return c == 'z' || c == 'i' || c == '(';
  }

  MixedPolynomial expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
      skip_ws();
    }
    auto sum = term();
    if (negate) sum = -sum;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return sum;
      ++pos_;
      skip_ws();
      auto next = term();
      sum = c == '+' ? sum + next : sum - next;
    }
  }

  MixedPolynomial term() {
    MixedPolynomial product = MixedPolynomial::constant(1.0);
    bool seen = false;
    if (starts_number()) {
      product = MixedPolynomial::constant(number());
      seen = true;
    }
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        if (!seen) fail({"term"});
        ++pos_;
        skip_ws();
        if (!starts_atom()) fail({"'z'", "'zbar'", "'i'", "'('"});
      } else if (!starts_atom()) {
        if (!seen) fail({"term"});
        return product;
      }
      product = product * factor();
      seen = true;
    }
  }

  MixedPolynomial factor() {
    auto base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    return power(base, exponent());
  }

  MixedPolynomial atom() {
    if (src_.substr(pos_, 4) == "zbar") {
      pos_ += 4;
      return MixedPolynomial::zbar();
    }
    const char c = peek();
    if (c == 'z') {
      ++pos_;
      return MixedPolynomial::z();
    }
    if (c == 'i') {
      ++pos_;
      return MixedPolynomial::constant(Complex{0.0, 1.0});
    }
    if (c == '(') {
      ++pos_;
      skip_ws();
      if (auto literal = complex_literal()) return *literal;
      auto inner = expr();
      skip_ws();
      if (peek() != ')') fail({"')'", "'+'", "'-'"});
      ++pos_;
      return inner;
    }
    fail({"'z'", "'zbar'", "'i'", "'('"});
  }

  // '(' already consumed. Backtracks unless the text reads real ',' real ')'.
  std::optional<MixedPolynomial> complex_literal() {
    const std::size_t start = pos_;
    const auto signed_number = [this]() -> std::optional<double> {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      }
      if (!starts_number()) return std::nullopt;
      const double v = number();
      return negative ? -v : v;
    };
    const auto re = signed_number();
    skip_ws();
    if (!re || peek() != ',') {
      pos_ = start;
      return std::nullopt;
    }
    ++pos_;
    skip_ws();
    const auto im = signed_number();
    if (!im) fail({"number"});
    skip_ws();
    if (peek() != ')') fail({"')'"});
    ++pos_;
    return MixedPolynomial::constant(Complex{*re, *im});
  }

  double number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start + 1 && src_[start] == '.') {
      pos_ = start;
      fail({"number"});
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc{} || ptr != src_.data() + pos_) {
      pos_ = start;
      fail({"number"});
    }
    return value;
  }

  unsigned exponent() {
    const std::size_t start = pos_;
    unsigned value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      ++pos_;
      if (value > kMaxExponent) {
        pos_ = start;
        fail({"exponent <= " + std::to_string(kMaxExponent)});
      }
    }
    if (pos_ == start) fail({"unsigned integer"});
    return value;
  }
};

}  // namespace

MixedPolynomial parse_poly(std::string_view src) { return Parser(src).run(); }

}  // namespace cuspidal
