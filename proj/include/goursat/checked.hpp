#pragma once

#include <cstdint>
#include <string>

#include "goursat/error.hpp"

namespace goursat {

/// Exact unsigned integer used for every dimension, multiplicity and
/// characteristic exponent. Values grow like Fibonacci numbers in the level,
/// so 64 bits cover every level up to 88; beyond that operations throw.
using Value = std::uint64_t;

namespace checked {

inline Value add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow,
                std::to_string(a) + " + " + std::to_string(b) + " exceeds 64 bits");
  }
  return out;
}

inline Value mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow,
                std::to_string(a) + " * " + std::to_string(b) + " exceeds 64 bits");
  }
  return out;
}

// Underflow is a logic error in every caller, so it is reported the same way.
inline Value sub(Value a, Value b) {
  if (b > a) {
    throw Error(ErrorCode::Overflow,
                std::to_string(a) + " - " + std::to_string(b) + " is negative");
  }
  return a - b;
}

}  // namespace checked
}  // namespace goursat
