#pragma once

// Commutative monoids given by the presentations
//
//   free:d      N^d
//   two:p,q     <a, b | p*a = q*b>
//   three:p,q,r <a, b, c | p*a + q*b = r*c>
//   numsg:p,q   the submonoid N*p + N*q of N, for coprime p, q
//
// Elements are kept in a unique normal form; the divisibility order
// x <= y  iff  y - x exists is decided through the finite set of
// representatives of the rewrite-equivalence class of each element.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobex/errors.hpp"

namespace frobex {

using Coords = std::vector<std::int64_t>;

enum class MonoidKind { free_n, two_gen, three_gen, numerical_semigroup };

class MonoidSpec {
 public:
  static MonoidSpec free_n(std::int64_t dim);
  static MonoidSpec two_gen(std::int64_t p, std::int64_t q);
  static MonoidSpec three_gen(std::int64_t p, std::int64_t q, std::int64_t r);
  static MonoidSpec numerical_semigroup(std::int64_t p, std::int64_t q);

  MonoidKind kind() const { return kind_; }
  std::int64_t p() const;
  std::int64_t q() const;
  std::int64_t r() const;
  std::int64_t dim() const;
  // Length of the coordinate tuple elements carry (1 for numsg).
  std::size_t arity() const;
  std::size_t generator_count() const;

  bool operator==(const MonoidSpec& o) const = default;

  // Text form: "free:2", "two:2,3", "three:1,1,2", "numsg:3,5".
  static MonoidSpec parse(std::string_view text);
  std::string to_string() const;

 private:
  MonoidSpec(MonoidKind k, std::int64_t a, std::int64_t b, std::int64_t c);

  MonoidKind kind_;
  std::int64_t a_, b_, c_;
};

// An element held in normal form together with its spec.
class MonoidElement {
 public:
  MonoidElement(MonoidSpec spec, Coords normal_coords);

  const MonoidSpec& spec() const { return spec_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const;

  bool operator==(const MonoidElement& o) const;
  bool operator!=(const MonoidElement& o) const { return !(*this == o); }
  // Lexicographic on coordinates; both sides must share a spec.
  bool operator<(const MonoidElement& o) const;

  std::string to_string() const;  // "3,1,2"

 private:
  MonoidSpec spec_;
  Coords coords_;
};

MonoidElement zero(const MonoidSpec& spec);
// index 0, 1, 2 = a, b, c.  For numsg the generators are p and q.
MonoidElement generator(const MonoidSpec& spec, std::size_t index);

// Rewrites a raw nonnegative tuple to the unique normal form and validates
// membership (numsg).  Raw coordinates need not be normal.
MonoidElement normalize(const MonoidSpec& spec, const Coords& raw);

// Parses "1,2,3" against the spec's arity, then normalizes.
MonoidElement parse_element(const MonoidSpec& spec, std::string_view text);

MonoidElement add(const MonoidElement& x, const MonoidElement& y);
MonoidElement scale(std::int64_t n, const MonoidElement& x);

// All raw tuples rewrite-equivalent to x, in lexicographic order.  Finite
// for every spec kind.
std::vector<Coords> representations(const MonoidElement& x);

// Divisibility order: x <= y iff some z satisfies x + z = y.
bool leq(const MonoidElement& x, const MonoidElement& y);
bool lt(const MonoidElement& x, const MonoidElement& y);

// y - x when it exists.
std::optional<MonoidElement> subtract(const MonoidElement& y,
                                      const MonoidElement& x);

bool numsg_contains(std::int64_t p, std::int64_t q, std::int64_t value);

// Recognition of a three-generator relation among vectors of N^2: given
// u, v, w pairwise linearly independent with a relation
// alpha*u + beta*v + gamma*w = 0, returns the unique presentation
// p*u' + q*v' = r*w' with p, q, r > 0, the positive pair kept in input
// order (the lexicographically smallest valid permutation).
struct RecognizedMonoid {
  std::int64_t p, q, r;
  std::array<int, 3> permutation;  // output slot -> input index
};
RecognizedMonoid recognize_submonoid(const std::array<std::int64_t, 2>& u,
                                     const std::array<std::int64_t, 2>& v,
                                     const std::array<std::int64_t, 2>& w);

// Order isomorphism between two:p,q (coprime p, q) and numsg:p,q,
// sending a -> q and b -> p.
class NumsgIso {
 public:
  NumsgIso(std::int64_t p, std::int64_t q);

  std::int64_t to_integer(const MonoidElement& x) const;
  MonoidElement from_integer(std::int64_t value) const;

  const MonoidSpec& quotient_spec() const { return quotient_; }
  const MonoidSpec& semigroup_spec() const { return semigroup_; }

 private:
  MonoidSpec quotient_;
  MonoidSpec semigroup_;
};

}  // namespace frobex
