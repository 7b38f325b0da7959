#include "frobex/poincare.hpp"

#include <algorithm>

#include "frobex/transition.hpp"

namespace frobex {

MultigradedSeries::MultigradedSeries(MonoidSpec spec, SeriesTrunc trunc)
    : spec_(std::move(spec)), trunc_(std::move(trunc)) {
  if (trunc_.box.size() != spec_.arity())
    throw Error("truncation box arity mismatch");
}

bool MultigradedSeries::in_region(int i, const Coords& lambda) const {
  if (i < 0 || i > trunc_.i_max) return false;
  if (lambda.size() != trunc_.box.size()) return false;
  for (std::size_t t = 0; t < lambda.size(); ++t)
    if (lambda[t] < 0 || lambda[t] > trunc_.box[t]) return false;
  return true;
}

void MultigradedSeries::add_term(int i, const Coords& lambda, std::int64_t c) {
  if (c == 0 || !in_region(i, lambda)) return;
  Key key{i, lambda};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t MultigradedSeries::coefficient(int i, const Coords& lambda) const {
  auto it = terms_.find({i, lambda});
  return it == terms_.end() ? 0 : it->second;
}

Coords default_series_box(const MonoidSpec& spec, int i_max) {
  std::int64_t margin = 2;
  switch (spec.kind()) {
    case MonoidKind::three_gen: {
      if (spec.r() == 1) return {margin, margin, margin};
      std::int64_t steps = (i_max + 1) / 2;
      return {margin, margin, checked_add(checked_mul(spec.r(), steps), 2)};
    }
    case MonoidKind::two_gen:
      return {margin, checked_add(checked_mul(spec.q(), (i_max + 1) / 2), 2)};
    case MonoidKind::free_n:
      return Coords(spec.arity(), margin);
    case MonoidKind::numerical_semigroup:
      return {checked_add(
          checked_mul(checked_add(spec.p(), spec.q()), (i_max + 1) / 2), 2)};
  }
  throw Error("bad monoid kind");
}

namespace {

// Iterates all normal forms with coordinates within the inclusive box.
template <class Fn>
void for_each_normal_form(const MonoidSpec& spec, const Coords& box, Fn&& fn) {
  if (box.size() != spec.arity()) throw Error("box arity mismatch");
  if (spec.kind() == MonoidKind::numerical_semigroup) {
    for (std::int64_t v = 0; v <= box[0]; ++v)
      if (numsg_contains(spec.p(), spec.q(), v))
        fn(MonoidElement(spec, {v}));
    return;
  }
  Coords cur(box.size(), 0);
  while (true) {
    MonoidElement n = normalize(spec, cur);
    if (n.coords() == cur) fn(std::move(n));
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
}

}  // namespace

MultigradedSeries series_computed(const MonoidSpec& spec, int i_max,
                                  const Coords& box, SeriesMode mode,
                                  const FieldSpec& field) {
  MultigradedSeries out(spec, SeriesTrunc{i_max, box});
  for_each_normal_form(spec, box, [&](const MonoidElement& lambda) {
    LocalBettiVector betti;
    if (mode == SeriesMode::homology) {
      betti = local_betti(spec, lambda, field);
    } else if (lambda.is_zero()) {
      betti.set(0, 1);
    } else {
      betti = predicted_betti(spec, lambda).betti;
    }
    for (const auto& [degree, value] : betti.entries())
      if (degree <= i_max) out.add_term(degree, lambda.coords(), value);
  });
  return out;
}

MultigradedSeries series_closed_form(const MonoidSpec& spec, int i_max,
                                     const Coords& box) {
  if (spec.kind() != MonoidKind::three_gen)
    throw Error("closed form applies to three-generator presentations");
  MultigradedSeries out(spec, SeriesTrunc{i_max, box});
  std::int64_t r = spec.r();

  // Numerator subsets of {a, b, c} (for r = 1, of {a, b} with no
  // denominator): exponent sum with t-degree = subset size.
  std::size_t gens = r == 1 ? 2 : 3;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens); ++mask) {
    Coords v(3, 0);
    int degree = 0;
    for (std::size_t g = 0; g < gens; ++g)
      if (mask & (std::size_t{1} << g)) {
        v[g] += 1;
        ++degree;
      }
    if (r == 1) {
      MonoidElement key = normalize(spec, v);
      out.add_term(degree, key.coords(), 1);
      continue;
    }
    // Geometric factor 1 / (1 - t^2 z^{r c}).
    for (std::int64_t ell = 0; degree + 2 * ell <= i_max; ++ell) {
      Coords sum = v;
      sum[2] = checked_add(sum[2], checked_mul(ell, r));
      MonoidElement key = normalize(spec, sum);
      out.add_term(degree + static_cast<int>(2 * ell), key.coords(), 1);
    }
  }
  return out;
}

PushforwardResult pushforward(const MonoidSpec& target,
                              const MultigradedSeries& source) {
  const MonoidSpec& src = source.spec();
  if (src.kind() != target.kind() ||
      (src.kind() != MonoidKind::two_gen && src.kind() != MonoidKind::three_gen))
    throw Error("pushforward requires matching two- or three-generator specs");

  Coords image_box(source.trunc().box.size());
  image_box[0] = tau(src.p(), target.p(), source.trunc().box[0]);
  image_box[1] = tau(src.q(), target.q(), source.trunc().box[1]);
  if (src.kind() == MonoidKind::three_gen)
    image_box[2] = tau(src.r(), target.r(), source.trunc().box[2]);

  PushforwardResult result{
      MultigradedSeries(target, SeriesTrunc{source.trunc().i_max, image_box}),
      {}};
  std::map<MultigradedSeries::Key, int> contributors;
  for (const auto& [key, coeff] : source.terms()) {
    MonoidElement image =
        transition_map(src, target, MonoidElement(src, key.second));
    MultigradedSeries::Key tkey{key.first, image.coords()};
    if (++contributors[tkey] == 2) result.collisions.push_back(image.coords());
    result.series.add_term(key.first, image.coords(), coeff);
  }
  std::sort(result.collisions.begin(), result.collisions.end());
  result.collisions.erase(
      std::unique(result.collisions.begin(), result.collisions.end()),
      result.collisions.end());
  return result;
}

std::vector<SeriesDiffEntry> series_diff(const MultigradedSeries& lhs,
                                         const MultigradedSeries& rhs) {
  if (lhs.spec() != rhs.spec())
    throw Error("comparing series over different monoids");
  auto in_both = [&](const MultigradedSeries::Key& key) {
    return lhs.in_region(key.first, key.second) &&
           rhs.in_region(key.first, key.second);
  };
  std::vector<SeriesDiffEntry> out;
  std::map<MultigradedSeries::Key, char> keys;
  for (const auto& [key, c] : lhs.terms()) keys.emplace(key, 0);
  for (const auto& [key, c] : rhs.terms()) keys.emplace(key, 0);
  for (const auto& [key, unused] : keys) {
    if (!in_both(key)) continue;
    std::int64_t a = lhs.coefficient(key.first, key.second);
    std::int64_t b = rhs.coefficient(key.first, key.second);
    if (a != b) out.push_back({key.first, key.second, a, b});
  }
  return out;
}

}  // namespace frobex
