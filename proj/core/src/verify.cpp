#include "frobex/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "frobex/complex.hpp"
#include "frobex/homology.hpp"
#include "frobex/interval.hpp"
#include "frobex/monoid.hpp"
#include "frobex/poincare.hpp"
#include "frobex/transition.hpp"

namespace frobex {

namespace {

using Clock = std::chrono::steady_clock;

// Shared accumulator: counts checks, keeps the first failure witness.
struct Tally {
  long checked = 0;
  std::string witness;

  bool ok() const { return witness.empty(); }
  void require(bool condition, const std::function<std::string()>& describe) {
    ++checked;
    if (!condition && witness.empty()) witness = describe();
  }
};

BettiVector interval_reduced(const MonoidSpec& spec, const MonoidElement& lambda,
                             const FieldSpec& field) {
  return reduced_betti(order_complex(open_interval(spec, lambda).core()), field);
}

std::string betti_mismatch(const MonoidElement& lambda, const BettiVector& got,
                           const BettiVector& want) {
  return lambda.spec().to_string() + " lambda=(" + lambda.to_string() +
         "): got " + got.to_string() + ", want " + want.to_string();
}

// All normal forms with coordinates within the inclusive box.
std::vector<MonoidElement> normal_box(const MonoidSpec& spec, const Coords& box) {
  std::vector<MonoidElement> out;
  Coords cur(box.size(), 0);
  while (true) {
    MonoidElement n = normalize(spec, cur);
    if (n.coords() == cur) out.push_back(std::move(n));
    std::size_t pos = 0;
    while (pos < box.size()) {
      if (cur[pos] < box[pos]) {
        ++cur[pos];
        break;
      }
      cur[pos] = 0;
      ++pos;
    }
    if (pos == box.size()) break;
  }
  return out;
}

// --- criterion 1: open intervals of two:2,2 are spheres of dim m+n-2 ---

void check_sphere_ladder(Tally& t) {
  MonoidSpec spec = MonoidSpec::two_gen(2, 2);
  FieldSpec field = FieldSpec::gf(2);
  for (std::int64_t m = 0; m <= 1; ++m)
    for (std::int64_t n = 0; m + n <= 9; ++n) {
      if (m + n < 1) continue;
      MonoidElement lambda = normalize(spec, {m, n});
      BettiVector got = interval_reduced(spec, lambda, field);
      BettiVector want;
      want.set(static_cast<int>(m + n) - 2, 1);
      t.require(got == want,
                [&] { return betti_mismatch(lambda, got, want); });
    }
}

// --- criterion 2: two-generator reduction matches direct homology ---

void check_two_gen_reduction(Tally& t) {
  FieldSpec field = FieldSpec::gf(2);
  const std::pair<std::int64_t, std::int64_t> params[] = {{2, 3}, {3, 4}, {3, 5}};
  for (auto [p, q] : params) {
    MonoidSpec spec = MonoidSpec::two_gen(p, q);
    for (std::int64_t m = 0; m <= p - 1; ++m)
      for (std::int64_t n = 0; n <= 7; ++n) {
        if (m == 0 && n == 0) continue;
        MonoidElement lambda = normalize(spec, {m, n});
        LocalBettiVector got = local_betti(spec, lambda, field);
        LocalBettiVector want = predicted_betti(spec, lambda).betti;
        t.require(got == want,
                  [&] { return betti_mismatch(lambda, got, want); });
      }

    // The same intervals computed inside N p + N q must agree.
    NumsgIso iso(p, q);
    const MonoidSpec& semigroup = iso.semigroup_spec();
    for (std::int64_t x = 1; x <= 45; ++x) {
      if (!numsg_contains(p, q, x)) continue;
      MonoidElement inside = normalize(semigroup, {x});
      LocalBettiVector direct = local_betti(semigroup, inside, field);
      LocalBettiVector through = local_betti(spec, iso.from_integer(x), field);
      LocalBettiVector want = predicted_betti(semigroup, inside).betti;
      t.require(direct == through, [&] {
        return semigroup.to_string() + " x=" + std::to_string(x) +
               ": direct " + direct.to_string() + " vs quotient " +
               through.to_string();
      });
      t.require(direct == want,
                [&] { return betti_mismatch(inside, direct, want); });
    }
  }
}

// --- criterion 3: three:1,1,2 multiples of c give doubled Betti numbers ---

void check_wedge_doubling(Tally& t) {
  MonoidSpec spec = MonoidSpec::three_gen(1, 1, 2);
  FieldSpec field = FieldSpec::gf(2);
  for (std::int64_t k = 1; k <= 6; ++k) {
    MonoidElement lambda = normalize(spec, {0, 0, k});
    BettiVector got = interval_reduced(spec, lambda, field);
    BettiVector want;
    if (k == 1)
      want.set(-1, 1);
    else
      want.set(static_cast<int>(k) - 2, 2);
    t.require(got == want, [&] { return betti_mismatch(lambda, got, want); });
  }
  for (std::int64_t k = 0; k <= 6; ++k) {
    MonoidElement lambda = normalize(spec, {1, 0, k});
    BettiVector got = interval_reduced(spec, lambda, field);
    BettiVector want;
    want.set(static_cast<int>(k) - 1, 1);
    t.require(got == want, [&] { return betti_mismatch(lambda, got, want); });
  }
}

// --- criterion 4: base-table match for three:1,2,2 and three:2,2,2 ---

void check_base_tables(Tally& t) {
  FieldSpec field = FieldSpec::gf(2);
  for (MonoidSpec spec :
       {MonoidSpec::three_gen(1, 2, 2), MonoidSpec::three_gen(2, 2, 2)}) {
    for (const MonoidElement& lambda : normal_box(spec, {3, 3, 5})) {
      if (lambda.is_zero()) continue;
      std::int64_t m = lambda.coords()[0], n = lambda.coords()[1],
                   k = lambda.coords()[2];
      bool small = m <= 1 && n <= 1;
      bool contractible_row = std::max(m, n) >= 2;  // up to 3 via the box
      if (!small && !contractible_row) continue;
      LocalBettiVector want;
      if (small) want.set(static_cast<int>(m + n + k), 1);
      LocalBettiVector got = local_betti(spec, lambda, field);
      t.require(got == want, [&] { return betti_mismatch(lambda, got, want); });
    }
  }
}

// --- criterion 5: three-generator reduction matches direct homology ---

void check_three_gen_reduction(Tally& t) {
  FieldSpec field = FieldSpec::gf(2);
  for (MonoidSpec spec :
       {MonoidSpec::three_gen(2, 3, 4), MonoidSpec::three_gen(1, 3, 2)}) {
    for (const MonoidElement& lambda : normal_box(spec, {3, 4, 5})) {
      if (lambda.is_zero()) continue;
      LocalBettiVector got = local_betti(spec, lambda, field);
      LocalBettiVector want = predicted_betti(spec, lambda).betti;
      t.require(got == want, [&] { return betti_mismatch(lambda, got, want); });
    }
  }
}

// --- criterion 6: three:2,3,1 reduces to the free two-generator table ---

void check_free_case(Tally& t) {
  MonoidSpec spec = MonoidSpec::three_gen(2, 3, 1);
  FieldSpec field = FieldSpec::gf(2);
  for (std::int64_t m = 0; m <= 3; ++m)
    for (std::int64_t n = 0; n <= 3; ++n) {
      if (m == 0 && n == 0) continue;
      MonoidElement lambda = normalize(spec, {m, n, 0});
      LocalBettiVector want;
      if ((m == 1 && n == 0) || (m == 0 && n == 1))
        want.set(1, 1);
      else if (m == 1 && n == 1)
        want.set(2, 1);
      LocalBettiVector got = local_betti(spec, lambda, field);
      t.require(got == want, [&] { return betti_mismatch(lambda, got, want); });
    }
}

// --- criterion 7: series equalities and pushforward identities ---

std::string diff_witness(const std::string& what,
                         const std::vector<SeriesDiffEntry>& diff) {
  if (diff.empty()) return "";
  std::ostringstream os;
  os << what << ": " << diff.size() << " mismatches, first at i=" << diff[0].i
     << " lambda=(";
  for (std::size_t i = 0; i < diff[0].lambda.size(); ++i) {
    if (i) os << ',';
    os << diff[0].lambda[i];
  }
  os << "): " << diff[0].lhs << " vs " << diff[0].rhs;
  return os.str();
}

void check_poincare_series(Tally& t) {
  const int i_max = 6;
  FieldSpec field = FieldSpec::gf(2);
  std::map<std::string, MultigradedSeries> computed_by_spec;
  const std::array<std::int64_t, 3> params[] = {
      {2, 3, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {2, 3, 3}, {1, 3, 2}};
  for (const auto& [p, q, r] : params) {
    MonoidSpec spec = MonoidSpec::three_gen(p, q, r);
    Coords box = default_series_box(spec, i_max);
    MultigradedSeries computed =
        series_computed(spec, i_max, box, SeriesMode::homology, field);
    MultigradedSeries closed = series_closed_form(spec, i_max, box);
    auto diff = series_diff(computed, closed);
    t.require(diff.empty(), [&] {
      return diff_witness(spec.to_string() + " homology vs closed form", diff);
    });
    MultigradedSeries oracle =
        series_computed(spec, i_max, box, SeriesMode::oracle);
    auto mode_diff = series_diff(computed, oracle);
    t.require(mode_diff.empty(), [&] {
      return diff_witness(spec.to_string() + " homology vs oracle mode",
                          mode_diff);
    });
    computed_by_spec.emplace(spec.to_string(), std::move(computed));
  }

  // Base-case series pushed along the transition map reproduce the target
  // series; identity pushforward included.
  const std::pair<std::array<std::int64_t, 3>, std::array<std::int64_t, 3>>
      routes[] = {{{2, 2, 2}, {2, 3, 3}},
                  {{1, 2, 2}, {1, 3, 2}},
                  {{1, 1, 2}, {1, 1, 2}}};
  for (const auto& [b, g] : routes) {
    MonoidSpec base = MonoidSpec::three_gen(b[0], b[1], b[2]);
    MonoidSpec target = MonoidSpec::three_gen(g[0], g[1], g[2]);
    MultigradedSeries base_closed =
        series_closed_form(base, i_max, default_series_box(base, i_max));
    PushforwardResult pushed = pushforward(target, base_closed);
    t.require(pushed.collisions.empty(), [&] {
      return base.to_string() + "->" + target.to_string() +
             ": unexpected exponent collisions";
    });
    const MultigradedSeries& target_computed =
        computed_by_spec.at(target.to_string());
    auto diff = series_diff(pushed.series, target_computed);
    t.require(diff.empty(), [&] {
      return diff_witness(
          base.to_string() + "->" + target.to_string() + " pushforward", diff);
    });
  }
}

// --- criterion 8: transition-function/map laws and closure hypotheses ---

void check_law_suites(Tally& t) {
  // Laws of the scalar transition functions.
  for (std::int64_t p = 1; p <= 5; ++p)
    for (std::int64_t q = 1; q <= 5; ++q)
      for (std::int64_t n = 0; n <= 200; ++n) {
        auto describe = [&](const char* law) {
          return [=] {
            std::ostringstream os;
            os << "tau law " << law << " fails at p=" << p << " q=" << q
               << " n=" << n;
            return os.str();
          };
        };
        t.require(tau(p, q, n + p) == tau(p, q, n) + q, describe("shift"));
        t.require(tau(p, q, n) <= tau(p, q, n + 1), describe("monotone"));
        std::int64_t round = tau(q, p, tau(p, q, n));
        t.require(round <= n, describe("round-trip <= id"));
        if (p <= q) t.require(round == n, describe("round-trip = id"));
        if (n > 0 && ((p == 1 && q == 1) || (p >= 2 && q >= 2)))
          t.require(tau(p, q, n) > 0, describe("zero preimage"));
      }

  // Laws of the induced maps, two-generator presentations.
  for (std::int64_t p = 1; p <= 5; ++p)
    for (std::int64_t q = 1; q <= 5; ++q)
      for (std::int64_t r = 1; r <= 5; ++r)
        for (std::int64_t s = 1; s <= 5; ++s) {
          MonoidSpec src = MonoidSpec::two_gen(p, q);
          MonoidSpec tgt = MonoidSpec::two_gen(r, s);
          auto at = [&](const Coords& c, const char* law) {
            return [=] {
              std::ostringstream os;
              os << "two-gen map law " << law << " fails for " << p << ','
                 << q << "->" << r << ',' << s << " at (" << c[0] << ','
                 << c[1] << ')';
              return os.str();
            };
          };
          for (std::int64_t m = 0; m <= 10; ++m)
            for (std::int64_t n = 0; n <= 10; ++n) {
              Coords raw{m, n};
              // Well-defined: the map commutes with normalization.
              MonoidElement via_normal =
                  transition_map(src, tgt, normalize(src, raw));
              MonoidElement via_raw =
                  normalize(tgt, {tau(p, r, m), tau(q, s, n)});
              t.require(via_normal == via_raw, at(raw, "well-defined"));

              MonoidElement x = normalize(src, raw);
              if (x.coords() != raw) continue;  // laws below on normal forms
              // Order preservation on generator steps spans the order.
              for (std::size_t gen = 0; gen < 2; ++gen) {
                MonoidElement step = add(x, generator(src, gen));
                t.require(leq(transition_map(src, tgt, x),
                              transition_map(src, tgt, step)),
                          at(raw, "order-preserving"));
              }
              MonoidElement back =
                  transition_map(tgt, src, transition_map(src, tgt, x));
              t.require(leq(back, x), at(raw, "round-trip <= id"));
              if (p <= r && q <= s)
                t.require(back == x, at(raw, "round-trip = id"));
              if (p >= 2 && q >= 2 && r >= 2 && s >= 2 && !x.is_zero())
                t.require(!transition_map(src, tgt, x).is_zero(),
                          at(raw, "zero preimage"));
            }
        }

  // Laws of the induced maps, three-generator presentations.
  for (std::int64_t p = 1; p <= 5; ++p)
    for (std::int64_t q = 1; q <= 5; ++q)
      for (std::int64_t r = 1; r <= 5; ++r)
        for (std::int64_t s = 1; s <= 5; ++s)
          for (std::int64_t tt = 1; tt <= 5; ++tt)
            for (std::int64_t u = 1; u <= 5; ++u) {
              MonoidSpec src = MonoidSpec::three_gen(p, q, r);
              MonoidSpec tgt = MonoidSpec::three_gen(s, tt, u);
              auto at = [&](const Coords& c, const char* law) {
                return [=] {
                  std::ostringstream os;
                  os << "three-gen map law " << law << " fails for " << p
                     << ',' << q << ',' << r << "->" << s << ',' << tt << ','
                     << u << " at (" << c[0] << ',' << c[1] << ',' << c[2]
                     << ')';
                  return os.str();
                };
              };
              // Zero-preimage law holds when each source/target pair is
              // either both 1 or both at least 2.
              bool zero_law =
                  ((p == 1 && s == 1) || (p >= 2 && s >= 2)) &&
                  ((q == 1 && tt == 1) || (q >= 2 && tt >= 2)) &&
                  ((r == 1 && u == 1) || (r >= 2 && u >= 2));
              for (std::int64_t m = 0; m <= 6; ++m)
                for (std::int64_t n = 0; n <= 6; ++n)
                  for (std::int64_t k = 0; k <= 6; ++k) {
                    Coords raw{m, n, k};
                    MonoidElement via_normal =
                        transition_map(src, tgt, normalize(src, raw));
                    MonoidElement via_raw = normalize(
                        tgt, {tau(p, s, m), tau(q, tt, n), tau(r, u, k)});
                    t.require(via_normal == via_raw, at(raw, "well-defined"));

                    MonoidElement x = normalize(src, raw);
                    if (x.coords() != raw) continue;
                    for (std::size_t gen = 0; gen < 3; ++gen) {
                      MonoidElement step = add(x, generator(src, gen));
                      t.require(leq(transition_map(src, tgt, x),
                                    transition_map(src, tgt, step)),
                                at(raw, "order-preserving"));
                    }
                    MonoidElement back =
                        transition_map(tgt, src, transition_map(src, tgt, x));
                    t.require(leq(back, x), at(raw, "round-trip <= id"));
                    if (p <= s && q <= tt && r <= u)
                      t.require(back == x, at(raw, "round-trip = id"));
                    if (zero_law && !x.is_zero())
                      t.require(!transition_map(src, tgt, x).is_zero(),
                                at(raw, "zero preimage"));
                  }
            }

  // Closure-operator hypotheses for every operator the reductions use.
  struct Case {
    ClosureOp op;
    Coords box;
  };
  const Case cases[] = {
      {ClosureOp::clamp_112(), {12, 12, 12}},
      {ClosureOp::clamp_122(), {12, 12, 12}},
      {ClosureOp::clamp_222(), {12, 12, 12}},
      {ClosureOp::free_clamp(), {12, 12}},
      {ClosureOp::composed_transition(MonoidSpec::two_gen(2, 3),
                                      MonoidSpec::two_gen(2, 2)),
       {12, 12}},
      {ClosureOp::composed_transition(MonoidSpec::two_gen(3, 4),
                                      MonoidSpec::two_gen(2, 2)),
       {12, 12}},
      {ClosureOp::composed_transition(MonoidSpec::two_gen(3, 5),
                                      MonoidSpec::two_gen(2, 2)),
       {12, 12}},
      {ClosureOp::composed_transition(MonoidSpec::two_gen(2, 2),
                                      MonoidSpec::two_gen(2, 2)),
       {12, 12}},
      {ClosureOp::composed_transition(MonoidSpec::three_gen(2, 3, 4),
                                      MonoidSpec::three_gen(2, 2, 2)),
       {12, 12, 12}},
      {ClosureOp::composed_transition(MonoidSpec::three_gen(2, 3, 3),
                                      MonoidSpec::three_gen(2, 2, 2)),
       {12, 12, 12}},
      {ClosureOp::composed_transition(MonoidSpec::three_gen(1, 3, 2),
                                      MonoidSpec::three_gen(1, 2, 2)),
       {12, 12, 12}},
      {ClosureOp::composed_transition(MonoidSpec::three_gen(1, 1, 2),
                                      MonoidSpec::three_gen(1, 1, 2)),
       {12, 12, 12}},
  };
  for (const Case& c : cases) {
    ClosureCheck check = verify_closure(c.op, c.box);
    t.require(check.pass,
              [&] { return c.op.name() + ": " + check.failure; });
  }
}

// --- criterion 9: suspension shift identities ---

void check_suspension_shift(Tally& t) {
  FieldSpec field = FieldSpec::gf(2);

  // two:2,2 — strip one a off when m >= 1 and m+n >= 2.
  {
    MonoidSpec spec = MonoidSpec::two_gen(2, 2);
    for (std::int64_t m = 0; m <= 1; ++m)
      for (std::int64_t n = 0; m + n <= 9; ++n) {
        if (m < 1 || m + n < 2) continue;
        MonoidElement lambda = normalize(spec, {m, n});
        MonoidElement smaller = normalize(spec, {m - 1, n});
        BettiVector big = interval_reduced(spec, lambda, field);
        BettiVector small = interval_reduced(spec, smaller, field).shifted(1);
        t.require(big == small,
                  [&] { return betti_mismatch(lambda, big, small); });
      }
  }

  // Base presentations — strip one c off when c < lambda and a+b < lambda.
  struct Sweep {
    MonoidSpec spec;
    std::vector<MonoidElement> lambdas;
  };
  std::vector<Sweep> sweeps;
  {
    MonoidSpec s112 = MonoidSpec::three_gen(1, 1, 2);
    Sweep sweep{s112, {}};
    for (std::int64_t k = 1; k <= 6; ++k)
      sweep.lambdas.push_back(normalize(s112, {0, 0, k}));
    for (std::int64_t k = 0; k <= 6; ++k)
      sweep.lambdas.push_back(normalize(s112, {1, 0, k}));
    sweeps.push_back(std::move(sweep));
  }
  for (MonoidSpec spec :
       {MonoidSpec::three_gen(1, 2, 2), MonoidSpec::three_gen(2, 2, 2)}) {
    Sweep sweep{spec, {}};
    for (const MonoidElement& lambda : normal_box(spec, {3, 3, 5})) {
      if (lambda.is_zero()) continue;
      std::int64_t m = lambda.coords()[0], n = lambda.coords()[1];
      if ((m <= 1 && n <= 1) || std::max(m, n) >= 2)
        sweep.lambdas.push_back(lambda);
    }
    sweeps.push_back(std::move(sweep));
  }
  for (const Sweep& sweep : sweeps) {
    MonoidElement c = generator(sweep.spec, 2);
    MonoidElement ab = add(generator(sweep.spec, 0), generator(sweep.spec, 1));
    for (const MonoidElement& lambda : sweep.lambdas) {
      if (!lt(c, lambda) || !lt(ab, lambda)) continue;
      MonoidElement smaller = *subtract(lambda, c);
      BettiVector big = interval_reduced(sweep.spec, lambda, field);
      BettiVector small =
          interval_reduced(sweep.spec, smaller, field).shifted(1);
      t.require(big == small,
                [&] { return betti_mismatch(lambda, big, small); });
    }
  }
}

// --- criterion 10: Betti numbers agree over GF(2), GF(3), and Q ---

void check_field_independence(Tally& t) {
  const FieldSpec fields[] = {FieldSpec::gf(2), FieldSpec::gf(3),
                              FieldSpec::rational()};

  auto check_lambda = [&](const MonoidSpec& spec, const MonoidElement& lambda) {
    BettiVector reference = interval_reduced(spec, lambda, fields[0]);
    for (int f = 1; f < 3; ++f) {
      BettiVector other = interval_reduced(spec, lambda, fields[f]);
      t.require(reference == other, [&] {
        return lambda.spec().to_string() + " lambda=(" + lambda.to_string() +
               "): " + fields[0].to_string() + " gives " +
               reference.to_string() + ", " + fields[f].to_string() +
               " gives " + other.to_string();
      });
    }
  };

  {
    MonoidSpec spec = MonoidSpec::two_gen(2, 2);
    for (std::int64_t m = 0; m <= 1; ++m)
      for (std::int64_t n = 0; m + n <= 9; ++n)
        if (m + n >= 1) check_lambda(spec, normalize(spec, {m, n}));
  }
  {
    MonoidSpec spec = MonoidSpec::three_gen(1, 1, 2);
    for (std::int64_t k = 1; k <= 6; ++k)
      check_lambda(spec, normalize(spec, {0, 0, k}));
    for (std::int64_t k = 0; k <= 6; ++k)
      check_lambda(spec, normalize(spec, {1, 0, k}));
  }
  for (MonoidSpec spec :
       {MonoidSpec::three_gen(1, 2, 2), MonoidSpec::three_gen(2, 2, 2)}) {
    for (const MonoidElement& lambda : normal_box(spec, {3, 3, 5})) {
      if (lambda.is_zero()) continue;
      std::int64_t m = lambda.coords()[0], n = lambda.coords()[1];
      if ((m <= 1 && n <= 1) || std::max(m, n) >= 2)
        check_lambda(spec, lambda);
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  void (*run)(Tally&);
};

const Criterion kCriteria[] = {
    {1, "sphere-ladder", check_sphere_ladder},
    {2, "two-gen-reduction", check_two_gen_reduction},
    {3, "wedge-doubling", check_wedge_doubling},
    {4, "base-tables", check_base_tables},
    {5, "three-gen-reduction", check_three_gen_reduction},
    {6, "free-case", check_free_case},
    {7, "poincare-series", check_poincare_series},
    {8, "law-suites", check_law_suites},
    {9, "suspension-shift", check_suspension_shift},
    {10, "field-independence", check_field_independence},
};

CriterionResult run_criterion(const Criterion& criterion) {
  CriterionResult result;
  result.id = criterion.id;
  result.name = criterion.name;
  auto start = Clock::now();
  Tally tally;
  criterion.run(tally);
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  result.pass = tally.ok();
  result.detail = tally.ok()
                      ? std::to_string(tally.checked) + " checks"
                      : tally.witness;
  return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Criterion& c : kCriteria) out.push_back(c.name);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<CriterionResult> run_suite(const std::string& name) {
  std::vector<CriterionResult> results;
  if (name == "all") {
    for (const Criterion& c : kCriteria) results.push_back(run_criterion(c));
    return results;
  }
  for (const Criterion& c : kCriteria)
    if (name == c.name) {
      results.push_back(run_criterion(c));
      return results;
    }
  throw Error("unknown suite '" + name + "'");
}

}  // namespace frobex
