#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "frobex/complex.hpp"
#include "frobex/homology.hpp"
#include "frobex/interval.hpp"

using namespace frobex;

namespace {

std::set<Coords> element_set(const IntervalPoset& poset) {
  std::set<Coords> out;
  for (const MonoidElement& e : poset.elements()) out.insert(e.coords());
  return out;
}

// Independent completeness oracle: scan every normal form in a generous box
// and keep those strictly between 0 and lambda.
std::set<Coords> brute_interval(const MonoidSpec& spec,
                                const MonoidElement& lambda,
                                const Coords& scan_box) {
  std::set<Coords> out;
  Coords cur(scan_box.size(), 0);
  while (true) {
    MonoidElement mu = normalize(spec, cur);
    if (!mu.is_zero() && lt(mu, lambda)) out.insert(mu.coords());
    std::size_t pos = 0;
    while (pos < scan_box.size()) {
      if (cur[pos] < scan_box[pos]) {
        ++cur[pos];
        break;
      }
      cur[pos] = 0;
      ++pos;
    }
    if (pos == scan_box.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("open interval of a two-generator monoid is complete") {
  MonoidSpec spec = MonoidSpec::two_gen(2, 3);
  MonoidElement lambda = normalize(spec, {1, 5});
  IntervalPoset poset = open_interval(spec, lambda);
  CHECK(element_set(poset) == brute_interval(spec, lambda, {12, 24}));
  CHECK(poset.strict_order_is_irreflexive());
  CHECK(poset.strict_order_is_transitive());
}

TEST_CASE("open interval completeness across presentations") {
  struct Case {
    MonoidSpec spec;
    Coords lambda;
    Coords scan;
  };
  const Case cases[] = {
      {MonoidSpec::two_gen(2, 2), {1, 4}, {10, 14}},
      {MonoidSpec::two_gen(3, 5), {2, 4}, {14, 20}},
      {MonoidSpec::three_gen(1, 1, 2), {0, 0, 4}, {5, 5, 8}},
      {MonoidSpec::three_gen(2, 3, 4), {1, 1, 6}, {8, 9, 10}},
      {MonoidSpec::three_gen(2, 3, 1), {2, 2, 0}, {6, 6, 4}},
      {MonoidSpec::free_n(3), {1, 2, 1}, {3, 3, 3}},
  };
  for (const Case& c : cases) {
    MonoidElement lambda = normalize(c.spec, c.lambda);
    IntervalPoset poset = open_interval(c.spec, lambda);
    CHECK(element_set(poset) == brute_interval(c.spec, lambda, c.scan));
    CHECK(poset.strict_order_is_irreflexive());
    CHECK(poset.strict_order_is_transitive());
    for (const MonoidElement& e : poset.elements()) {
      CHECK(lt(e, lambda));
      CHECK(!e.is_zero());
    }
  }
}

TEST_CASE("numerical semigroup intervals use difference membership") {
  MonoidSpec spec = MonoidSpec::numerical_semigroup(2, 3);
  IntervalPoset poset = open_interval(spec, normalize(spec, {5}));
  CHECK(element_set(poset) == std::set<Coords>{{2}, {3}});
  // 3 - 2 = 1 is a gap, so the two points are incomparable.
  CHECK(!poset.less(0, 1));
  CHECK(!poset.less(1, 0));

  IntervalPoset big = open_interval(spec, normalize(spec, {10}));
  CHECK(element_set(big) ==
        std::set<Coords>{{2}, {3}, {4}, {5}, {6}, {7}, {8}});
  // The full relation table must agree with difference membership.
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = 0; j < big.size(); ++j)
      CHECK(big.less(i, j) ==
            (i != j && leq(big.elements()[i], big.elements()[j])));
}

TEST_CASE("half-open interval [mu, lambda) is a cone with apex mu") {
  MonoidSpec spec = MonoidSpec::two_gen(2, 2);
  MonoidElement lambda = normalize(spec, {1, 3});
  MonoidElement mu = normalize(spec, {0, 1});
  IntervalPoset poset = half_open_interval(spec, mu, lambda);
  // Contains mu itself and everything between.
  CHECK(element_set(poset).count(mu.coords()) == 1);
  for (const MonoidElement& e : poset.elements()) {
    CHECK(leq(mu, e));
    CHECK(lt(e, lambda));
  }
  // mu is the minimum, so the poset dismantles to a single point.
  CHECK(poset.core().size() == 1);

  CHECK_THROWS_AS(half_open_interval(spec, lambda, mu), Error);
}

TEST_CASE("restriction keeps the induced order") {
  MonoidSpec spec = MonoidSpec::two_gen(2, 2);
  IntervalPoset poset = open_interval(spec, normalize(spec, {1, 3}));
  IntervalPoset even = restrict_to(poset, [](const MonoidElement& e) {
    return (e.coords()[0] + e.coords()[1]) % 2 == 0;
  });
  CHECK(even.size() < poset.size());
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = 0; j < even.size(); ++j)
      CHECK(even.less(i, j) ==
            (i != j && leq(even.elements()[i], even.elements()[j])));
}

TEST_CASE("dismantling preserves reduced homology") {
  // The core computation must be exact: same Betti vectors over GF(2) and
  // over the rationals as the full order complex.
  struct Case {
    MonoidSpec spec;
    Coords lambda;
  };
  std::vector<Case> cases;
  for (std::int64_t m = 0; m <= 1; ++m)
    for (std::int64_t n = 1; m + n <= 6; ++n)
      cases.push_back({MonoidSpec::two_gen(2, 2), {m, n}});
  for (std::int64_t n = 1; n <= 5; ++n)
    cases.push_back({MonoidSpec::two_gen(2, 3), {1, n}});
  for (std::int64_t k = 1; k <= 4; ++k) {
    cases.push_back({MonoidSpec::three_gen(1, 1, 2), {0, 0, k}});
    cases.push_back({MonoidSpec::three_gen(1, 1, 2), {1, 0, k}});
    cases.push_back({MonoidSpec::three_gen(2, 2, 2), {1, 1, k}});
  }
  cases.push_back({MonoidSpec::three_gen(2, 2, 2), {2, 1, 3}});
  cases.push_back({MonoidSpec::three_gen(2, 3, 4), {1, 2, 3}});
  cases.push_back({MonoidSpec::three_gen(2, 3, 1), {2, 2, 0}});
  cases.push_back({MonoidSpec::numerical_semigroup(3, 5), {16}});

  for (const Case& c : cases) {
    MonoidElement lambda = normalize(c.spec, c.lambda);
    IntervalPoset poset = open_interval(c.spec, lambda);
    IntervalPoset core = poset.core();
    CHECK(core.size() <= poset.size());
    SimplicialComplex full = order_complex(poset);
    SimplicialComplex reduced = order_complex(core);
    for (FieldSpec field : {FieldSpec::gf(2), FieldSpec::rational()}) {
      BettiVector want = reduced_betti(full, field);
      BettiVector got = reduced_betti(reduced, field);
      CHECK(got == want);
    }
  }
}

TEST_CASE("dismantling is deterministic") {
  MonoidSpec spec = MonoidSpec::three_gen(2, 2, 2);
  MonoidElement lambda = normalize(spec, {1, 1, 4});
  IntervalPoset a = open_interval(spec, lambda).core();
  IntervalPoset b = open_interval(spec, lambda).core();
  CHECK(element_set(a) == element_set(b));
  CHECK(a.size() == b.size());
}

TEST_CASE("interval endpoints and sizes") {
  MonoidSpec spec = MonoidSpec::two_gen(2, 2);
  MonoidElement lambda = normalize(spec, {1, 1});
  IntervalPoset poset = open_interval(spec, lambda);
  CHECK(poset.size() == 2);  // the two generators
  CHECK(poset.lower().is_zero());
  CHECK(poset.upper() == lambda);

  // A generator has an empty open interval.
  CHECK(open_interval(spec, generator(spec, 0)).size() == 0);
}
