#include "frobex/transition.hpp"

#include <algorithm>

namespace frobex {

std::int64_t tau(std::int64_t p, std::int64_t q, std::int64_t n) {
  if (p < 1 || q < 1) throw Error("tau parameters must be >= 1");
  if (n < 0) throw Error("tau argument must be nonnegative");
  std::int64_t m = n / p, t = n % p;
  return checked_add(checked_mul(m, q), std::min(t, q - 1));
}

MonoidElement transition_map(const MonoidSpec& source, const MonoidSpec& target,
                             const MonoidElement& x) {
  if (x.spec() != source) throw Error("element does not belong to the source");
  if (source.kind() != target.kind() ||
      (source.kind() != MonoidKind::two_gen &&
       source.kind() != MonoidKind::three_gen))
    throw Error("transition maps require matching two- or three-generator specs");
  const Coords& c = x.coords();
  Coords out(c.size());
  out[0] = tau(source.p(), target.p(), c[0]);
  out[1] = tau(source.q(), target.q(), c[1]);
  if (source.kind() == MonoidKind::three_gen)
    out[2] = tau(source.r(), target.r(), c[2]);
  return normalize(target, out);
}

ClosureOp::ClosureOp(Kind k, MonoidSpec domain, std::optional<MonoidSpec> target)
    : kind_(k), domain_(std::move(domain)), target_(std::move(target)) {}

ClosureOp ClosureOp::composed_transition(MonoidSpec source, MonoidSpec target) {
  if (source.kind() != target.kind() ||
      (source.kind() != MonoidKind::two_gen &&
       source.kind() != MonoidKind::three_gen))
    throw Error("composed transition requires matching two- or three-generator specs");
  return ClosureOp(Kind::composed_transition, std::move(source),
                   std::move(target));
}

ClosureOp ClosureOp::clamp_112() {
  return ClosureOp(Kind::clamp_112, MonoidSpec::three_gen(1, 1, 2), {});
}
ClosureOp ClosureOp::clamp_122() {
  return ClosureOp(Kind::clamp_122, MonoidSpec::three_gen(1, 2, 2), {});
}
ClosureOp ClosureOp::clamp_222() {
  return ClosureOp(Kind::clamp_222, MonoidSpec::three_gen(2, 2, 2), {});
}
ClosureOp ClosureOp::free_clamp() {
  return ClosureOp(Kind::free_clamp, MonoidSpec::free_n(2), {});
}

MonoidElement ClosureOp::apply(const MonoidElement& x) const {
  if (x.spec() != domain_) throw Error("element outside the operator's domain");
  const Coords& c = x.coords();
  switch (kind_) {
    case Kind::composed_transition: {
      MonoidElement forward = transition_map(domain_, *target_, x);
      return transition_map(*target_, domain_, forward);
    }
    case Kind::clamp_112:
    case Kind::clamp_222:
      return normalize(domain_, {std::min(c[0], c[1] + 1),
                                 std::min(c[0] + 1, c[1]), c[2]});
    case Kind::clamp_122:
      return normalize(domain_, {std::min(c[0], c[1] / 2 + 1),
                                 std::min(2 * c[0] + 1, c[1]), c[2]});
    case Kind::free_clamp:
      return normalize(domain_, {std::min(c[0], std::int64_t{1}),
                                 std::min(c[1], std::int64_t{1})});
  }
  throw Error("bad closure operator kind");
}

std::string ClosureOp::name() const {
  switch (kind_) {
    case Kind::composed_transition:
      return "composedT(" + domain_.to_string() + "->" + target_->to_string() +
             ")";
    case Kind::clamp_112: return "clamp_112";
    case Kind::clamp_122: return "clamp_122";
    case Kind::clamp_222: return "clamp_222";
    case Kind::free_clamp: return "free_clamp";
  }
  return "?";
}

bool is_fixed(const MonoidElement& x, const ClosureOp& op) {
  return op.apply(x) == x;
}

namespace {

// All normal forms with coordinates within the inclusive box.
std::vector<MonoidElement> normal_forms_in_box(const MonoidSpec& spec,
                                               const Coords& box) {
  if (box.size() != spec.arity()) throw Error("box arity mismatch");
  std::vector<MonoidElement> out;
  Coords cur(box.size(), 0);
  while (true) {
    MonoidElement n = normalize(spec, cur);
    if (n.coords() == cur) out.emplace_back(std::move(n));
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

}  // namespace

ClosureCheck verify_closure(const ClosureOp& op, const Coords& box) {
  ClosureCheck check;
  auto fail = [&](const std::string& what) {
    if (check.pass) {
      check.pass = false;
      check.failure = what;
    }
  };

  std::vector<MonoidElement> elems = normal_forms_in_box(op.domain(), box);
  std::vector<MonoidElement> images;
  images.reserve(elems.size());
  for (const MonoidElement& x : elems) images.push_back(op.apply(x));

  for (std::size_t i = 0; i < elems.size() && check.pass; ++i) {
    const MonoidElement& x = elems[i];
    const MonoidElement& fx = images[i];
    if (!leq(fx, x))
      fail("not descending at " + x.to_string());
    else if (!(op.apply(fx) == fx))
      fail("not idempotent at " + x.to_string());
    else if (fx.is_zero() && !x.is_zero())
      fail("maps nonzero " + x.to_string() + " to zero");
  }

  // Order preservation, checked on all comparable pairs within the box.
  std::vector<std::vector<Coords>> reps(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    reps[i] = representations(elems[i]);
  auto dominated = [](const Coords& s, const Coords& b) {
    for (std::size_t t = 0; t < s.size(); ++t)
      if (b[t] < s[t]) return false;
    return true;
  };
  for (std::size_t i = 0; i < elems.size() && check.pass; ++i)
    for (std::size_t j = 0; j < elems.size() && check.pass; ++j) {
      if (i == j) continue;
      bool le = false;
      for (const Coords& b : reps[j]) {
        for (const Coords& s : reps[i])
          if (dominated(s, b)) { le = true; break; }
        if (le) break;
      }
      if (le && !leq(images[i], images[j]))
        fail("not order-preserving on " + elems[i].to_string() + " <= " +
             elems[j].to_string());
    }
  return check;
}

std::string Prediction::label() const {
  switch (type) {
    case Type::point: return "point";
    case Type::sphere: return "S^" + std::to_string(dim);
    case Type::wedge_of_spheres: {
      std::string s = "S^" + std::to_string(dim);
      std::string out = s;
      for (int i = 1; i < multiplicity; ++i) out += " v " + s;
      return out;
    }
  }
  return "?";
}

namespace {

Prediction make_point() { return Prediction{}; }

Prediction make_sphere(std::int64_t dim) {
  Prediction p;
  p.type = Prediction::Type::sphere;
  p.dim = static_cast<int>(dim);
  p.betti.set(static_cast<int>(dim) + 2, 1);
  return p;
}

Prediction make_wedge(std::int64_t dim, int multiplicity) {
  Prediction p;
  p.type = Prediction::Type::wedge_of_spheres;
  p.dim = static_cast<int>(dim);
  p.multiplicity = multiplicity;
  p.betti.set(static_cast<int>(dim) + 2, multiplicity);
  return p;
}

// Interval (0, n) in N.
Prediction natural_table(std::int64_t n) {
  return n == 1 ? make_sphere(-1) : make_point();
}

// Interval (0, (m,n)) in N^2.
Prediction free_pair_table(std::int64_t m, std::int64_t n) {
  if ((m == 1 && n == 0) || (m == 0 && n == 1)) return make_sphere(-1);
  if (m == 1 && n == 1) return make_sphere(0);
  return make_point();
}

Prediction base_table_112(const Coords& c) {
  std::int64_t m = c[0], n = c[1], k = c[2];
  if (m == 0 && n == 0)
    return k == 1 ? make_sphere(-1) : make_wedge(k - 2, 2);
  if ((m == 1 && n == 0) || (m == 0 && n == 1)) return make_sphere(k - 1);
  return make_point();
}

Prediction base_table_general(const Coords& c) {
  // three:1,2,2 and three:2,2,2 share this shape.
  if (c[0] <= 1 && c[1] <= 1) return make_sphere(c[0] + c[1] + c[2] - 2);
  return make_point();
}

}  // namespace

Prediction predicted_betti(const MonoidSpec& spec, const MonoidElement& lambda) {
  if (lambda.spec() != spec) throw Error("lambda does not belong to the spec");
  if (lambda.is_zero())
    throw Error("prediction is defined for nonzero lambda only");
  const Coords& c = lambda.coords();

  switch (spec.kind()) {
    case MonoidKind::free_n: {
      if (spec.dim() == 1) return natural_table(c[0]);
      if (spec.dim() == 2) return free_pair_table(c[0], c[1]);
      throw Error("no closed-form prediction for free monoids of dim > 2");
    }
    case MonoidKind::numerical_semigroup: {
      NumsgIso iso(spec.p(), spec.q());
      MonoidElement inside = iso.from_integer(c[0]);
      return predicted_betti(iso.quotient_spec(), inside);
    }
    case MonoidKind::two_gen: {
      std::int64_t p = spec.p(), q = spec.q();
      if (p == 1 || q == 1) {
        // The monoid is isomorphic to N via m*q + n*p.
        return natural_table(checked_add(checked_mul(c[0], q),
                                         checked_mul(c[1], p)));
      }
      MonoidSpec base = MonoidSpec::two_gen(2, 2);
      MonoidElement image = transition_map(spec, base, lambda);
      MonoidElement back = transition_map(base, spec, image);
      if (!(back == lambda)) return make_point();
      return make_sphere(image.coords()[0] + image.coords()[1] - 2);
    }
    case MonoidKind::three_gen: {
      std::int64_t p = spec.p(), q = spec.q(), r = spec.r();
      if (r == 1) {
        // c = p*a + q*b; every element rewrites into the free pair (a, b).
        std::int64_t m = checked_add(c[0], checked_mul(c[2], p));
        std::int64_t n = checked_add(c[1], checked_mul(c[2], q));
        return free_pair_table(m, n);
      }
      bool swapped = p > q;
      MonoidSpec source =
          swapped ? MonoidSpec::three_gen(q, p, r) : spec;
      MonoidElement x =
          swapped ? normalize(source, {c[1], c[0], c[2]}) : lambda;
      std::int64_t s = std::min<std::int64_t>(2, source.p());
      std::int64_t t = std::min<std::int64_t>(2, source.q());
      MonoidSpec base = MonoidSpec::three_gen(s, t, 2);
      MonoidElement image = transition_map(source, base, x);
      MonoidElement back = transition_map(base, source, image);
      if (!(back == x)) return make_point();
      if (s == 1 && t == 1) return base_table_112(image.coords());
      return base_table_general(image.coords());
    }
  }
  throw Error("bad monoid kind");
}

}  // namespace frobex
