#include <doctest.h>

#include <json.hpp>

#include "frobex/poincare.hpp"
#include "frobex/serialize.hpp"

using namespace frobex;

TEST_CASE("default truncation boxes") {
  CHECK(default_series_box(MonoidSpec::three_gen(2, 2, 2), 6) ==
        Coords{2, 2, 8});
  CHECK(default_series_box(MonoidSpec::three_gen(2, 3, 3), 6) ==
        Coords{2, 2, 11});
  CHECK(default_series_box(MonoidSpec::three_gen(2, 3, 1), 6) ==
        Coords{2, 2, 2});
  CHECK(default_series_box(MonoidSpec::two_gen(2, 3), 6) == Coords{2, 11});
  CHECK(default_series_box(MonoidSpec::free_n(2), 6) == Coords{2, 2});
}

TEST_CASE("closed form merges colliding exponents") {
  MonoidSpec spec = MonoidSpec::three_gen(1, 1, 2);
  Coords box{2, 2, 4};
  MultigradedSeries series = series_closed_form(spec, 2, box);
  CHECK(series.coefficient(0, {0, 0, 0}) == 1);
  CHECK(series.coefficient(1, {1, 0, 0}) == 1);
  CHECK(series.coefficient(1, {0, 1, 0}) == 1);
  CHECK(series.coefficient(1, {0, 0, 1}) == 1);
  // a + b normalizes to 2c and meets the denominator term there.
  CHECK(series.coefficient(2, {0, 0, 2}) == 2);
  CHECK(series.coefficient(2, {1, 0, 1}) == 1);
  CHECK(series.coefficient(2, {0, 1, 1}) == 1);
  CHECK(series.terms().size() == 7);
}

TEST_CASE("homology, oracle, and closed form agree") {
  for (MonoidSpec spec :
       {MonoidSpec::three_gen(1, 1, 2), MonoidSpec::three_gen(1, 2, 2),
        MonoidSpec::three_gen(2, 3, 1)}) {
    const int i_max = 4;
    Coords box = default_series_box(spec, i_max);
    MultigradedSeries homology =
        series_computed(spec, i_max, box, SeriesMode::homology);
    MultigradedSeries oracle =
        series_computed(spec, i_max, box, SeriesMode::oracle);
    MultigradedSeries closed = series_closed_form(spec, i_max, box);
    CHECK(series_diff(homology, oracle).empty());
    CHECK(series_diff(homology, closed).empty());
  }
}

TEST_CASE("series match closed form and pushforward on wider presentations") {
  // Push the base-case series along the transition map and compare against
  // both the direct computation and the closed form.
  struct Route {
    MonoidSpec base, target;
  };
  const Route routes[] = {
      {MonoidSpec::three_gen(2, 2, 2), MonoidSpec::three_gen(3, 3, 2)},
      {MonoidSpec::three_gen(2, 2, 2), MonoidSpec::three_gen(2, 2, 4)},
  };
  const int i_max = 5;
  for (const Route& route : routes) {
    Coords box = default_series_box(route.target, i_max);
    MultigradedSeries computed =
        series_computed(route.target, i_max, box, SeriesMode::homology);
    MultigradedSeries closed = series_closed_form(route.target, i_max, box);
    CHECK(series_diff(computed, closed).empty());

    MultigradedSeries base_closed = series_closed_form(
        route.base, i_max, default_series_box(route.base, i_max));
    PushforwardResult pushed = pushforward(route.target, base_closed);
    CHECK(pushed.collisions.empty());
    CHECK(series_diff(pushed.series, computed).empty());
  }
}

TEST_CASE("single-term pushforward lands on the transition image") {
  MonoidSpec base = MonoidSpec::three_gen(1, 1, 2);
  MonoidSpec target = MonoidSpec::three_gen(1, 1, 4);
  MultigradedSeries source(base, {1, {2, 2, 2}});
  source.add_term(1, {0, 0, 1}, 1);
  PushforwardResult pushed = pushforward(target, source);
  CHECK(pushed.collisions.empty());
  CHECK(pushed.series.coefficient(1, {0, 0, 1}) == 1);
  CHECK(pushed.series.terms().size() == 1);
}

TEST_CASE("pushforward surfaces exponent collisions") {
  // tau_{2->1} folds (0,2) and (0,3) onto the same image.
  MonoidSpec base = MonoidSpec::two_gen(2, 2);
  MonoidSpec target = MonoidSpec::two_gen(1, 1);
  MultigradedSeries source(base, {1, {0, 3}});
  source.add_term(1, {0, 2}, 1);
  source.add_term(1, {0, 3}, 1);
  PushforwardResult pushed = pushforward(target, source);
  REQUIRE(pushed.collisions.size() == 1);
  CHECK(pushed.collisions[0] == Coords{0, 1});
  CHECK(pushed.series.coefficient(1, {0, 1}) == 2);  // summed faithfully
}

TEST_CASE("series diff pinpoints a perturbed coefficient") {
  MonoidSpec spec = MonoidSpec::three_gen(1, 1, 2);
  Coords box = default_series_box(spec, 3);
  MultigradedSeries a = series_closed_form(spec, 3, box);
  MultigradedSeries b = series_closed_form(spec, 3, box);
  b.add_term(2, {0, 0, 2}, 5);
  auto diff = series_diff(a, b);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].i == 2);
  CHECK(diff[0].lambda == Coords{0, 0, 2});
  CHECK(diff[0].lhs == diff[0].rhs - 5);

  CHECK_THROWS_AS(
      series_diff(a, series_closed_form(MonoidSpec::three_gen(1, 2, 2), 3,
                                        default_series_box(
                                            MonoidSpec::three_gen(1, 2, 2), 3))),
      Error);
}

TEST_CASE("truncation region filters terms") {
  MonoidSpec spec = MonoidSpec::three_gen(1, 1, 2);
  MultigradedSeries series(spec, {2, {1, 1, 1}});
  series.add_term(3, {0, 0, 1}, 7);   // beyond i_max: dropped
  series.add_term(1, {0, 0, 2}, 7);   // outside the box: dropped
  series.add_term(1, {0, 0, 1}, 7);
  CHECK(series.terms().size() == 1);
  CHECK(series.in_region(1, {0, 0, 1}));
  CHECK(!series.in_region(3, {0, 0, 1}));
  CHECK(!series.in_region(1, {0, 0, 2}));
  // Adding the negative cancels and erases the key.
  series.add_term(1, {0, 0, 1}, -7);
  CHECK(series.terms().empty());
}

TEST_CASE("zero-degree term is the unit") {
  MonoidSpec spec = MonoidSpec::three_gen(2, 3, 3);
  Coords box = default_series_box(spec, 2);
  MultigradedSeries computed =
      series_computed(spec, 2, box, SeriesMode::oracle);
  CHECK(computed.coefficient(0, {0, 0, 0}) == 1);
  // Degree one counts the generators.
  CHECK(computed.coefficient(1, {1, 0, 0}) == 1);
  CHECK(computed.coefficient(1, {0, 1, 0}) == 1);
  CHECK(computed.coefficient(1, {0, 0, 1}) == 1);
}

TEST_CASE("series serialization keeps the documented schema") {
  MonoidSpec spec = MonoidSpec::three_gen(1, 1, 2);
  MultigradedSeries series = series_closed_form(spec, 2, {2, 2, 4});
  nlohmann::json parsed = nlohmann::json::parse(series_to_json(series));
  REQUIRE(parsed.is_object());
  CHECK(parsed.size() == 3);
  CHECK(parsed["spec"] == "three:1,1,2");
  CHECK(parsed["i_max"] == 2);
  REQUIRE(parsed["terms"].is_array());
  CHECK(parsed["terms"].size() == series.terms().size());
  const auto& first = parsed["terms"][0];
  CHECK(first["i"] == 0);
  CHECK(first["lambda"] == nlohmann::json::array({0, 0, 0}));
  CHECK(first["coeff"] == 1);
}
