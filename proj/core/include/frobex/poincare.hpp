#pragma once

// Truncated multigraded Poincaré series: finite sums of c * t^i * z^lambda
// with homological degree i and monoid-graded exponent lambda in normal
// form.  Series are compared term-by-term inside the intersection of their
// truncation regions.

#include <cstdint>
#include <map>
#include <vector>

#include "frobex/homology.hpp"
#include "frobex/monoid.hpp"

namespace frobex {

struct SeriesTrunc {
  int i_max = 0;
  Coords box;  // inclusive per-coordinate bound on normal forms
};

class MultigradedSeries {
 public:
  using Key = std::pair<int, Coords>;

  MultigradedSeries(MonoidSpec spec, SeriesTrunc trunc);

  const MonoidSpec& spec() const { return spec_; }
  const SeriesTrunc& trunc() const { return trunc_; }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }

  // Adds c at (i, lambda); silently drops keys outside the truncation.
  void add_term(int i, const Coords& lambda, std::int64_t c);
  std::int64_t coefficient(int i, const Coords& lambda) const;
  bool in_region(int i, const Coords& lambda) const;

 private:
  MonoidSpec spec_;
  SeriesTrunc trunc_;
  std::map<Key, std::int64_t> terms_;  // nonzero coefficients only
};

enum class SeriesMode { homology, oracle };

// Default truncation box used by the verification suites: coordinates up
// to 2 on the first two axes and enough multiples of r on the third to
// cover homological degrees <= i_max (third-generator presentations), the
// analogous margin elsewhere.
Coords default_series_box(const MonoidSpec& spec, int i_max);

// Sum of local Betti vectors over all normal forms inside the box,
// lambda = 0 included.  homology mode computes interval homology; oracle
// mode uses the closed-form prediction.
MultigradedSeries series_computed(const MonoidSpec& spec, int i_max,
                                  const Coords& box, SeriesMode mode,
                                  const FieldSpec& field = FieldSpec::gf(2));

// Closed form: for three:p,q,r with r >= 2,
//   (1 + t z^a)(1 + t z^b)(1 + t z^c) / (1 - t^2 z^{r c});
// for r = 1 the two-factor form (1 + t z^a)(1 + t z^b).  Exponents are
// normalized before collection, so distinct factor terms may merge.
MultigradedSeries series_closed_form(const MonoidSpec& spec, int i_max,
                                     const Coords& box);

// Applies the transition map to every exponent.  Truncation box maps to
// the coordinatewise tau-image.  Keys where several source exponents land
// are summed and reported (the maps in use are injective on supports, so
// collisions indicate a bug — but they are still applied faithfully).
struct PushforwardResult {
  MultigradedSeries series;
  std::vector<Coords> collisions;  // target exponents hit more than once
};
PushforwardResult pushforward(const MonoidSpec& target,
                              const MultigradedSeries& source);

// Coefficient mismatches inside the intersection of the truncation
// regions, sorted by (i, lambda).
struct SeriesDiffEntry {
  int i;
  Coords lambda;
  std::int64_t lhs, rhs;
};
std::vector<SeriesDiffEntry> series_diff(const MultigradedSeries& lhs,
                                         const MultigradedSeries& rhs);

}  // namespace frobex
