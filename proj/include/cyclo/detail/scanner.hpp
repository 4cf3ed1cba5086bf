#pragma once

#include "cyclo/zeta_product.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

namespace cyclo::detail {

/// Whitespace-skipping tokenizer for the small textual input formats.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t position() const { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'" + found(), pos_);
    }
    ++pos_;
  }

  Int integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected an integer" + found(), pos_);
    }
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (INT64_MAX - 9) / 10) throw ParseError("integer out of range", start);
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace cyclo::detail
