#include "frobex/interval.hpp"

#include <algorithm>
#include <set>

namespace frobex {

namespace {

bool dominates(const Coords& big, const Coords& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

// x <= y decided on cached representative lists.
bool leq_cached(const std::vector<Coords>& rx, const std::vector<Coords>& ry) {
  for (const Coords& b : ry)
    for (const Coords& s : rx)
      if (dominates(b, s)) return true;
  return false;
}

// All normal forms below some representative of lambda, collected by
// scanning the coordinate boxes spanned by each representative.  Every
// mu <= lambda has a representative dominated by a representative of
// lambda, so the union of those boxes is exhaustive.
std::vector<MonoidElement> candidate_elements(const MonoidSpec& spec,
                                              const MonoidElement& lambda) {
  std::set<Coords> seen;
  if (spec.kind() == MonoidKind::numerical_semigroup) {
    for (std::int64_t v = 0; v <= lambda.coords()[0]; ++v)
      if (numsg_contains(spec.p(), spec.q(), v)) seen.insert({v});
  } else {
    std::size_t arity = spec.arity();
    for (const Coords& corner : representations(lambda)) {
      Coords cur(arity, 0);
      while (true) {
        seen.insert(normalize(spec, cur).coords());
        std::size_t pos = 0;
        while (pos < arity) {
          if (cur[pos] < corner[pos]) {
            ++cur[pos];
            break;
          }
          cur[pos] = 0;
          ++pos;
        }
        if (pos == arity) break;
      }
    }
  }
  std::vector<MonoidElement> out;
  out.reserve(seen.size());
  for (const Coords& c : seen) out.emplace_back(spec, c);
  return out;
}

}  // namespace

IntervalPoset::IntervalPoset(MonoidSpec spec,
                             std::vector<MonoidElement> elements,
                             MonoidElement lower, MonoidElement upper)
    : spec_(std::move(spec)),
      elements_(std::move(elements)),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {
  std::size_t n = elements_.size();
  lt_.assign(n * n, 0);
  if (spec_.kind() == MonoidKind::numerical_semigroup) {
    // Representative domination does not decide divisibility here; use the
    // difference-membership order directly.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && leq(elements_[i], elements_[j])) lt_[i * n + j] = 1;
    return;
  }
  std::vector<std::vector<Coords>> reps(n);
  for (std::size_t i = 0; i < n; ++i) reps[i] = representations(elements_[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_cached(reps[i], reps[j])) lt_[i * n + j] = 1;
}

IntervalPoset::IntervalPoset(const IntervalPoset& parent,
                             const std::vector<std::size_t>& keep)
    : spec_(parent.spec_), lower_(parent.lower_), upper_(parent.upper_) {
  elements_.reserve(keep.size());
  for (std::size_t i : keep) elements_.push_back(parent.elements_[i]);
  std::size_t n = keep.size();
  lt_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lt_[i * n + j] = parent.lt_[keep[i] * parent.size() + keep[j]];
}

IntervalPoset IntervalPoset::restricted(
    const std::function<bool(const MonoidElement&)>& keep) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < size(); ++i)
    if (keep(elements_[i])) idx.push_back(i);
  return IntervalPoset(*this, idx);
}

IntervalPoset IntervalPoset::core() const {
  std::size_t n = size();
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < n; ++i) alive.push_back(i);

  auto reducible = [&](std::size_t x) {
    // Strict down-set has a maximum?
    std::vector<std::size_t> down, up;
    for (std::size_t y : alive) {
      if (lt_[y * n + x]) down.push_back(y);
      if (lt_[x * n + y]) up.push_back(y);
    }
    for (std::size_t m : down) {
      bool top = true;
      for (std::size_t y : down)
        if (y != m && !lt_[y * n + m]) { top = false; break; }
      if (top) return true;
    }
    for (std::size_t m : up) {
      bool bottom = true;
      for (std::size_t y : up)
        if (y != m && !lt_[m * n + y]) { bottom = false; break; }
      if (bottom) return true;
    }
    return false;
  };

  bool removed = true;
  while (removed && alive.size() > 1) {
    removed = false;
    for (std::size_t pos = 0; pos < alive.size(); ++pos) {
      if (reducible(alive[pos])) {
        alive.erase(alive.begin() + pos);
        removed = true;
        break;
      }
    }
  }
  return IntervalPoset(*this, alive);
}

bool IntervalPoset::strict_order_is_irreflexive() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (less(i, i)) return false;
  return true;
}

bool IntervalPoset::strict_order_is_transitive() const {
  std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (less(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (less(j, k) && !less(i, k)) return false;
  return true;
}

IntervalPoset open_interval(const MonoidSpec& spec,
                            const MonoidElement& lambda) {
  if (lambda.spec() != spec) throw Error("lambda does not belong to the spec");
  MonoidElement lo = zero(spec);
  std::vector<MonoidElement> members;
  for (MonoidElement& mu : candidate_elements(spec, lambda))
    if (!mu.is_zero() && !(mu == lambda) && leq(mu, lambda))
      members.push_back(std::move(mu));
  std::sort(members.begin(), members.end());
  return IntervalPoset(spec, std::move(members), lo, lambda);
}

IntervalPoset half_open_interval(const MonoidSpec& spec,
                                 const MonoidElement& mu,
                                 const MonoidElement& lambda) {
  if (mu.spec() != spec || lambda.spec() != spec)
    throw Error("endpoints do not belong to the spec");
  if (!lt(mu, lambda)) throw Error("half-open interval requires mu < lambda");
  std::vector<MonoidElement> members;
  for (MonoidElement& nu : candidate_elements(spec, lambda))
    if (!(nu == lambda) && leq(mu, nu) && leq(nu, lambda))
      members.push_back(std::move(nu));
  std::sort(members.begin(), members.end());
  return IntervalPoset(spec, std::move(members), mu, lambda);
}

IntervalPoset restrict_to(
    const IntervalPoset& poset,
    const std::function<bool(const MonoidElement&)>& keep) {
  return poset.restricted(keep);
}

}  // namespace frobex
