#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobex {

// Domain error: malformed specs, arity mismatches, elements outside a
// monoid, unsupported operations. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 64-bit arithmetic left the representable range. Never silently wraps.
struct OverflowError : Error {
  using Error::Error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer overflow: " + std::to_string(a) + " + " +
                        std::to_string(b));
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw OverflowError("integer overflow: " + std::to_string(a) + " - " +
                        std::to_string(b));
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("integer overflow: " + std::to_string(a) + " * " +
                        std::to_string(b));
  return out;
}

}  // namespace frobex
