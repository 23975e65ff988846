#pragma once

// Shared text encodings:
//   sgv and flat derived vectors  "2,3,4,4,5"
//   block form                    "1^2 2^6 4 6^3 18 24^2"   (^1 may be omitted)
//   Puiseux characteristic        "[24; 90, 94, 103]"
// Parse errors report the 1-based character position of the offending input.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "goursat/checked.hpp"
#include "goursat/error.hpp"
#include "goursat/invariant_types.hpp"

namespace goursat {

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }
  std::size_t position() const noexcept { return pos_ + 1; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  Value number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    Value out = 0;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec == std::errc::result_out_of_range) fail("integer exceeds 64 bits");
    if (ec != std::errc{}) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string shown = done() ? std::string("end of input") : "'" + std::string(1, peek()) + "'";
    throw Error(ErrorCode::Parse, what + ", found " + shown, position());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<Value> parse_values(std::string_view text) {
  detail::Scanner in(text);
  std::vector<Value> out;
  in.skip_spaces();
  if (in.done()) in.fail("expected a comma-separated list of integers");
  while (true) {
    in.skip_spaces();
    out.push_back(in.number());
    in.skip_spaces();
    if (in.done()) break;
    in.expect(',');
  }
  return out;
}

inline std::string format_values(const std::vector<Value>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::vector<Block> parse_blocks(std::string_view text) {
  detail::Scanner in(text);
  std::vector<Block> out;
  in.skip_spaces();
  if (in.done()) in.fail("expected block atoms like 1^2");
  while (!in.done()) {
    Block b;
    b.value = in.number();
    b.mult = in.consume('^') ? in.number() : 1;
    out.push_back(b);
    if (!in.done() && !std::isspace(static_cast<unsigned char>(in.peek()))) {
      in.fail("expected whitespace between block atoms");
    }
    in.skip_spaces();
  }
  return out;
}

inline std::string format_blocks(const std::vector<Block>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(blocks[i].value);
    if (blocks[i].mult != 1) out += '^' + std::to_string(blocks[i].mult);
  }
  return out;
}

inline SmallGrowthVector parse_sgv(std::string_view text) {
  return SmallGrowthVector::from_dims(parse_values(text));
}

inline DerivedVector parse_derived(std::string_view text) {
  auto flat = parse_values(text);
  return DerivedVector::from_flat(flat);
}

inline DerivedVector parse_derived_blocks(std::string_view text) {
  return DerivedVector::from_blocks(parse_blocks(text));
}

inline std::string format(const SmallGrowthVector& sgv) { return format_values(sgv.dims()); }
inline std::string format(const DerivedVector& der) { return format_values(der.flat()); }
inline std::string format_blocks(const DerivedVector& der) { return format_blocks(der.blocks()); }

inline std::string format(const PuiseuxCharacteristic& pc) {
  std::string out = "[" + std::to_string(pc.lambda0) + ";";
  for (std::size_t j = 0; j < pc.exponents.size(); ++j) {
    out += (j == 0 ? " " : ", ") + std::to_string(pc.exponents[j]);
  }
  return out + "]";
}

inline PuiseuxCharacteristic parse_puiseux(std::string_view text) {
  detail::Scanner in(text);
  PuiseuxCharacteristic pc;
  in.skip_spaces();
  in.expect('[');
  in.skip_spaces();
  pc.lambda0 = in.number();
  in.skip_spaces();
  in.expect(';');
  in.skip_spaces();
  if (!in.consume(']')) {
    while (true) {
      in.skip_spaces();
      pc.exponents.push_back(in.number());
      in.skip_spaces();
      if (in.consume(']')) break;
      in.expect(',');
    }
  }
  in.skip_spaces();
  if (!in.done()) in.fail("trailing input after ']'");
  return pc;
}

}  // namespace goursat
