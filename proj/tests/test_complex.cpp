#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "frobex/complex.hpp"
#include "frobex/homology.hpp"
#include "frobex/interval.hpp"

using namespace frobex;

namespace {

SimplicialComplex interval_complex(const MonoidSpec& spec,
                                   const Coords& lambda) {
  return order_complex(open_interval(spec, normalize(spec, lambda)));
}

// Chains enumerated the slow way: all vertex subsets that are totally
// ordered, checked pair by pair.
std::set<std::vector<std::int32_t>> brute_chains(const IntervalPoset& poset) {
  std::set<std::vector<std::int32_t>> chains;
  std::int32_t n = static_cast<std::int32_t>(poset.size());
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::int32_t> verts;
    for (std::int32_t v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    bool chain = true;
    for (std::size_t i = 0; i < verts.size() && chain; ++i)
      for (std::size_t j = i + 1; j < verts.size() && chain; ++j)
        chain = poset.less(verts[i], verts[j]) || poset.less(verts[j], verts[i]);
    if (chain) chains.insert(verts);
  }
  return chains;
}

std::set<std::vector<std::int32_t>> all_faces(const SimplicialComplex& c) {
  std::set<std::vector<std::int32_t>> out;
  for (int d = 0; d <= c.max_dim(); ++d)
    for (std::size_t i = 0; i < c.face_count(d); ++i) {
      auto f = c.face(d, i);
      out.insert(std::vector<std::int32_t>(f.begin(), f.end()));
    }
  return out;
}

}  // namespace

TEST_CASE("order complex faces are exactly the chains") {
  struct Case {
    MonoidSpec spec;
    Coords lambda;
  };
  const Case cases[] = {
      {MonoidSpec::two_gen(2, 2), {1, 3}},
      {MonoidSpec::two_gen(2, 3), {1, 4}},
      {MonoidSpec::three_gen(1, 1, 2), {0, 0, 3}},
      {MonoidSpec::three_gen(2, 3, 1), {2, 2, 0}},
      {MonoidSpec::numerical_semigroup(2, 3), {8}},
  };
  for (const Case& c : cases) {
    IntervalPoset poset = open_interval(c.spec, normalize(c.spec, c.lambda));
    REQUIRE(poset.size() <= 20);
    SimplicialComplex complex = order_complex(poset);
    CHECK(all_faces(complex) == brute_chains(poset));
    CHECK(is_downward_closed(complex));
    // Faces are sorted per dimension.
    for (int d = 0; d <= complex.max_dim(); ++d) {
      for (std::size_t i = 0; i + 1 < complex.face_count(d); ++i) {
        auto a = complex.face(d, i), b = complex.face(d, i + 1);
        CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                           b.end()));
      }
    }
  }
}

TEST_CASE("the square interval is a 4-cycle") {
  // two:2,2 at lambda = (1,2): two minimal and two maximal elements, every
  // minimal below every maximal — the order complex is a circle.
  SimplicialComplex complex = interval_complex(MonoidSpec::two_gen(2, 2),
                                               {1, 2});
  CHECK(f_vector(complex) == std::vector<std::int64_t>{4, 4});
  CHECK(reduced_euler(complex) == -1);
  BettiVector betti = reduced_betti(complex, FieldSpec::gf(2));
  BettiVector want;
  want.set(1, 1);
  CHECK(betti == want);
  CHECK(reduced_euler(complex) == betti.alternating_sum());
}

TEST_CASE("two incomparable points form a 0-sphere") {
  SimplicialComplex complex = interval_complex(MonoidSpec::two_gen(2, 2),
                                               {1, 1});
  CHECK(f_vector(complex) == std::vector<std::int64_t>{2});
  CHECK(reduced_euler(complex) == 1);
  CHECK(!facets(complex).empty());
  CHECK(facets(complex)[0].size() == 2);  // both vertices are facets
}

TEST_CASE("empty complex bookkeeping") {
  SimplicialComplex complex = interval_complex(MonoidSpec::two_gen(2, 2),
                                               {1, 0});
  CHECK(!complex.has_vertices());
  CHECK(complex.max_dim() == -1);
  CHECK(f_vector(complex).empty());
  CHECK(reduced_euler(complex) == -1);
}

TEST_CASE("reduced Euler characteristic equals the alternating Betti sum") {
  const std::pair<MonoidSpec, Coords> cases[] = {
      {MonoidSpec::two_gen(2, 2), {1, 4}},
      {MonoidSpec::two_gen(2, 3), {1, 5}},
      {MonoidSpec::three_gen(1, 1, 2), {0, 0, 4}},
      {MonoidSpec::three_gen(2, 2, 2), {1, 1, 3}},
      {MonoidSpec::three_gen(2, 3, 1), {3, 3, 0}},
  };
  for (const auto& [spec, lambda] : cases) {
    SimplicialComplex complex = interval_complex(spec, lambda);
    BettiVector betti = reduced_betti(complex, FieldSpec::rational());
    CHECK(reduced_euler(complex) == betti.alternating_sum());
  }
}

TEST_CASE("face_index inverts face") {
  SimplicialComplex complex = interval_complex(MonoidSpec::two_gen(2, 3),
                                               {1, 5});
  for (int d = 0; d <= complex.max_dim(); ++d)
    for (std::size_t i = 0; i < complex.face_count(d); ++i)
      CHECK(face_index(complex, d, complex.face(d, i)) ==
            static_cast<std::int64_t>(i));
  const std::int32_t missing[] = {0, static_cast<std::int32_t>(
                                         complex.vertex_count + 5)};
  CHECK(face_index(complex, 1, missing) == -1);
}

TEST_CASE("facets cover every face") {
  SimplicialComplex complex = interval_complex(MonoidSpec::three_gen(1, 1, 2),
                                               {0, 0, 3});
  auto top = facets(complex);
  std::set<std::vector<std::int32_t>> covered;
  for (int d = 0; d < static_cast<int>(top.size()); ++d) {
    std::size_t stride = d + 1;
    for (std::size_t i = 0; i < top[d].size(); i += stride) {
      std::vector<std::int32_t> f(top[d].begin() + i,
                                  top[d].begin() + i + stride);
      // Every subset of a facet is a face of the complex.
      for (std::uint32_t mask = 1; mask < (1u << stride); ++mask) {
        std::vector<std::int32_t> sub;
        for (std::size_t v = 0; v < stride; ++v)
          if (mask >> v & 1) sub.push_back(f[v]);
        covered.insert(sub);
      }
    }
  }
  CHECK(covered == all_faces(complex));
}

TEST_CASE("chain counts match materialized faces and cap enumeration") {
  MonoidSpec spec = MonoidSpec::two_gen(2, 2);
  IntervalPoset poset = open_interval(spec, normalize(spec, {1, 5}));
  std::vector<std::int64_t> counts = chain_counts(poset);
  SimplicialComplex complex = order_complex(poset);
  CHECK(counts == f_vector(complex));
  CHECK_THROWS_AS(order_complex(poset, 3), Error);
}
