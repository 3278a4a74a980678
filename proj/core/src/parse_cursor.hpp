#pragma once

// Shared recursive-descent helpers for the scalar and element grammars.

#include "spinhecke/scalar.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace spinhecke::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  /// Character after the current one, skipping whitespace on both sides.
  char peek_after() {
    skip_ws();
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }
  char get() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_++];
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip_ws();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000L) fail("integer literal too large");
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return value;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Scalar parse_scalar_expr(Cursor &cur);
/// A product/quotient chain.  With stop_before_generator set, a '*' that is
/// followed by 'T' or 'c' is left unconsumed so the element grammar can pick
/// up the generator word.
Scalar parse_scalar_term(Cursor &cur, bool stop_before_generator);

}  // namespace spinhecke::detail
