#pragma once

// Reduced simplicial homology over GF(p) or the rationals, computed from
// boundary-matrix ranks.  The augmentation map is carried explicitly, so
// degree -1 is meaningful: the empty complex has reduced Betti {-1: 1}.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "frobex/complex.hpp"

namespace frobex {

class FieldSpec {
 public:
  enum class Kind { gf, rational };

  static FieldSpec gf(std::int64_t prime);
  static FieldSpec rational();

  Kind kind() const { return kind_; }
  std::int64_t prime() const;

  bool operator==(const FieldSpec& o) const = default;

  // "gf2", "gf:5", "rational".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;

 private:
  FieldSpec(Kind k, std::int64_t p) : kind_(k), prime_(p) {}
  Kind kind_;
  std::int64_t prime_;
};

struct BoundaryMatrix {
  std::int64_t rows = 0, cols = 0;
  struct Entry {
    std::int32_t row;
    std::int32_t col;
    std::int8_t coeff;  // +1 or -1
  };
  std::vector<Entry> entries;  // sorted by (col, row)
};

// result[0] is the augmentation (1 x f_0, all +1); result[d] is the d-th
// boundary map (f_{d-1} x f_d) for 1 <= d <= max_dim.  Empty complex ->
// empty vector.
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c);

std::int64_t matrix_rank(const BoundaryMatrix& m, const FieldSpec& field);

// Sparse vector of Betti numbers by degree; zeros are not stored.
class BettiVector {
 public:
  std::int64_t at(int degree) const;
  void set(int degree, std::int64_t value);
  const std::map<int, std::int64_t>& entries() const { return betti_; }
  bool operator==(const BettiVector& o) const = default;
  // Sum of (-1)^degree * value (degree -1 contributes negatively).
  std::int64_t alternating_sum() const;
  // Same values re-indexed up by `amount`.
  BettiVector shifted(int amount) const;
  std::string to_string() const;

 private:
  std::map<int, std::int64_t> betti_;
};

using LocalBettiVector = BettiVector;  // degrees >= 0 by construction

BettiVector reduced_betti(const SimplicialComplex& c, const FieldSpec& field);

// Local Betti numbers of lambda: {0: 1} for lambda = 0, and otherwise the
// reduced Betti numbers of the open interval's order complex shifted up by
// two degrees.  use_core replaces the interval by its dismantled core
// first (exact, and necessary at scale).
LocalBettiVector local_betti(const MonoidSpec& spec,
                             const MonoidElement& lambda,
                             const FieldSpec& field, bool use_core = true);

// The degree shift from reduced interval homology to local Betti numbers.
LocalBettiVector local_from_reduced(const BettiVector& reduced);

}  // namespace frobex
