#include "frobex/monoid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace frobex {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw Error("invalid integer: '" + std::string(s) + "'");
  return value;
}

std::vector<std::int64_t> parse_int_list(std::string_view s) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string_view piece = (comma == std::string_view::npos)
                                 ? s.substr(start)
                                 : s.substr(start, comma - start);
    out.push_back(parse_int(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

MonoidSpec::MonoidSpec(MonoidKind k, std::int64_t a, std::int64_t b,
                       std::int64_t c)
    : kind_(k), a_(a), b_(b), c_(c) {}

MonoidSpec MonoidSpec::free_n(std::int64_t dim) {
  if (dim < 1) throw Error("free monoid dimension must be >= 1");
  return MonoidSpec(MonoidKind::free_n, dim, 0, 0);
}

MonoidSpec MonoidSpec::two_gen(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error("two-generator parameters must be >= 1");
  return MonoidSpec(MonoidKind::two_gen, p, q, 0);
}

MonoidSpec MonoidSpec::three_gen(std::int64_t p, std::int64_t q,
                                 std::int64_t r) {
  if (p < 1 || q < 1 || r < 1)
    throw Error("three-generator parameters must be >= 1");
  return MonoidSpec(MonoidKind::three_gen, p, q, r);
}

MonoidSpec MonoidSpec::numerical_semigroup(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error("numerical semigroup generators must be >= 1");
  if (std::gcd(p, q) != 1)
    throw Error("numerical semigroup generators must be coprime");
  return MonoidSpec(MonoidKind::numerical_semigroup, p, q, 0);
}

std::int64_t MonoidSpec::p() const {
  if (kind_ == MonoidKind::free_n) throw Error("free monoid has no parameter p");
  return a_;
}

std::int64_t MonoidSpec::q() const {
  if (kind_ == MonoidKind::free_n) throw Error("free monoid has no parameter q");
  return b_;
}

std::int64_t MonoidSpec::r() const {
  if (kind_ != MonoidKind::three_gen)
    throw Error("parameter r only exists for three-generator monoids");
  return c_;
}

std::int64_t MonoidSpec::dim() const {
  if (kind_ != MonoidKind::free_n)
    throw Error("dim only exists for free monoids");
  return a_;
}

std::size_t MonoidSpec::arity() const {
  switch (kind_) {
    case MonoidKind::free_n: return static_cast<std::size_t>(a_);
    case MonoidKind::two_gen: return 2;
    case MonoidKind::three_gen: return 3;
    case MonoidKind::numerical_semigroup: return 1;
  }
  throw Error("bad monoid kind");
}

std::size_t MonoidSpec::generator_count() const {
  return kind_ == MonoidKind::numerical_semigroup ? 2 : arity();
}

MonoidSpec MonoidSpec::parse(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error("invalid monoid spec '" + std::string(text) +
                "' (expected kind:params)");
  std::string_view kind = text.substr(0, colon);
  std::vector<std::int64_t> params = parse_int_list(text.substr(colon + 1));
  if (kind == "free") {
    if (params.size() != 1) throw Error("free takes one parameter");
    return free_n(params[0]);
  }
  if (kind == "two") {
    if (params.size() != 2) throw Error("two takes two parameters");
    return two_gen(params[0], params[1]);
  }
  if (kind == "three") {
    if (params.size() != 3) throw Error("three takes three parameters");
    return three_gen(params[0], params[1], params[2]);
  }
  if (kind == "numsg") {
    if (params.size() != 2) throw Error("numsg takes two parameters");
    return numerical_semigroup(params[0], params[1]);
  }
  throw Error("unknown monoid kind '" + std::string(kind) + "'");
}

std::string MonoidSpec::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case MonoidKind::free_n: os << "free:" << a_; break;
    case MonoidKind::two_gen: os << "two:" << a_ << ',' << b_; break;
    case MonoidKind::three_gen:
      os << "three:" << a_ << ',' << b_ << ',' << c_;
      break;
    case MonoidKind::numerical_semigroup:
      os << "numsg:" << a_ << ',' << b_;
      break;
  }
  return os.str();
}

MonoidElement::MonoidElement(MonoidSpec spec, Coords normal_coords)
    : spec_(std::move(spec)), coords_(std::move(normal_coords)) {}

bool MonoidElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::int64_t v) { return v == 0; });
}

bool MonoidElement::operator==(const MonoidElement& o) const {
  if (spec_ != o.spec_) throw Error("comparing elements of different monoids");
  return coords_ == o.coords_;
}

bool MonoidElement::operator<(const MonoidElement& o) const {
  if (spec_ != o.spec_) throw Error("comparing elements of different monoids");
  return coords_ < o.coords_;
}

std::string MonoidElement::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  return os.str();
}

MonoidElement zero(const MonoidSpec& spec) {
  return MonoidElement(spec, Coords(spec.arity(), 0));
}

MonoidElement generator(const MonoidSpec& spec, std::size_t index) {
  if (index >= spec.generator_count())
    throw Error("generator index out of range");
  if (spec.kind() == MonoidKind::numerical_semigroup)
    return MonoidElement(spec, {index == 0 ? spec.p() : spec.q()});
  Coords c(spec.arity(), 0);
  c[index] = 1;
  return normalize(spec, c);
}

MonoidElement normalize(const MonoidSpec& spec, const Coords& raw) {
  if (raw.size() != spec.arity())
    throw Error("coordinate tuple has arity " + std::to_string(raw.size()) +
                ", expected " + std::to_string(spec.arity()));
  for (std::int64_t v : raw)
    if (v < 0) throw Error("coordinates must be nonnegative");

  Coords c = raw;
  switch (spec.kind()) {
    case MonoidKind::free_n:
      break;
    case MonoidKind::two_gen: {
      // (m, n) -> (m - p, n + q) while m >= p; terminates with m <= p - 1.
      std::int64_t steps = c[0] / spec.p();
      c[0] -= steps * spec.p();
      c[1] = checked_add(c[1], checked_mul(steps, spec.q()));
      break;
    }
    case MonoidKind::three_gen: {
      // (m, n, k) -> (m - p, n - q, k + r) while m >= p and n >= q.
      std::int64_t steps = std::min(c[0] / spec.p(), c[1] / spec.q());
      c[0] -= steps * spec.p();
      c[1] -= steps * spec.q();
      c[2] = checked_add(c[2], checked_mul(steps, spec.r()));
      break;
    }
    case MonoidKind::numerical_semigroup:
      if (!numsg_contains(spec.p(), spec.q(), c[0]))
        throw Error(std::to_string(c[0]) + " is not in numsg:" +
                    std::to_string(spec.p()) + "," + std::to_string(spec.q()));
      break;
  }
  return MonoidElement(spec, std::move(c));
}

MonoidElement parse_element(const MonoidSpec& spec, std::string_view text) {
  return normalize(spec, parse_int_list(text));
}

MonoidElement add(const MonoidElement& x, const MonoidElement& y) {
  if (x.spec() != y.spec()) throw Error("adding elements of different monoids");
  Coords c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(x.coords()[i], y.coords()[i]);
  if (x.spec().kind() == MonoidKind::numerical_semigroup)
    return MonoidElement(x.spec(), std::move(c));  // sums stay members
  return normalize(x.spec(), c);
}

MonoidElement scale(std::int64_t n, const MonoidElement& x) {
  if (n < 0) throw Error("scale factor must be nonnegative");
  Coords c(x.coords().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_mul(n, x.coords()[i]);
  if (x.spec().kind() == MonoidKind::numerical_semigroup)
    return MonoidElement(x.spec(), std::move(c));
  return normalize(x.spec(), c);
}

std::vector<Coords> representations(const MonoidElement& x) {
  const MonoidSpec& spec = x.spec();
  const Coords& c = x.coords();
  std::vector<Coords> out;
  switch (spec.kind()) {
    case MonoidKind::free_n:
    case MonoidKind::numerical_semigroup:
      out.push_back(c);
      break;
    case MonoidKind::two_gen: {
      // Normal form has the least first coordinate; walking (m, n) ->
      // (m + p, n - q) enumerates the whole class.
      std::int64_t steps = c[1] / spec.q();
      for (std::int64_t s = 0; s <= steps; ++s)
        out.push_back({checked_add(c[0], checked_mul(s, spec.p())),
                       c[1] - s * spec.q()});
      break;
    }
    case MonoidKind::three_gen: {
      std::int64_t steps = c[2] / spec.r();
      for (std::int64_t s = 0; s <= steps; ++s)
        out.push_back({checked_add(c[0], checked_mul(s, spec.p())),
                       checked_add(c[1], checked_mul(s, spec.q())),
                       c[2] - s * spec.r()});
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool dominates(const Coords& big, const Coords& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

}  // namespace

bool leq(const MonoidElement& x, const MonoidElement& y) {
  if (x.spec() != y.spec())
    throw Error("ordering elements of different monoids");
  if (x.spec().kind() == MonoidKind::numerical_semigroup) {
    std::int64_t d = checked_sub(y.coords()[0], x.coords()[0]);
    return d >= 0 && numsg_contains(x.spec().p(), x.spec().q(), d);
  }
  // x <= y iff some representative of y dominates some representative of x.
  for (const Coords& ry : representations(y))
    for (const Coords& rx : representations(x))
      if (dominates(ry, rx)) return true;
  return false;
}

bool lt(const MonoidElement& x, const MonoidElement& y) {
  return !(x == y) && leq(x, y);
}

std::optional<MonoidElement> subtract(const MonoidElement& y,
                                      const MonoidElement& x) {
  if (x.spec() != y.spec())
    throw Error("subtracting elements of different monoids");
  if (x.spec().kind() == MonoidKind::numerical_semigroup) {
    std::int64_t d = checked_sub(y.coords()[0], x.coords()[0]);
    if (d < 0 || !numsg_contains(x.spec().p(), x.spec().q(), d))
      return std::nullopt;
    return MonoidElement(x.spec(), {d});
  }
  for (const Coords& ry : representations(y))
    for (const Coords& rx : representations(x))
      if (dominates(ry, rx)) {
        Coords d(ry.size());
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = ry[i] - rx[i];
        return normalize(x.spec(), d);
      }
  return std::nullopt;
}

bool numsg_contains(std::int64_t p, std::int64_t q, std::int64_t value) {
  if (value < 0) return false;
  std::int64_t g = std::gcd(p, q);
  if (g > 1) {
    if (value % g != 0) return false;
    p /= g;
    q /= g;
    value /= g;
  }
  if (p > q) std::swap(p, q);
  if (p == 1) return true;
  // Coprime case: everything at or beyond (p-1)(q-1) is a member, and below
  // that bound the cofactor of q is < p.
  if (value >= checked_mul(p - 1, q - 1)) return true;
  for (std::int64_t n = 0; n * q <= value; ++n)
    if ((value - n * q) % p == 0) return true;
  return false;
}

RecognizedMonoid recognize_submonoid(const std::array<std::int64_t, 2>& u,
                                     const std::array<std::int64_t, 2>& v,
                                     const std::array<std::int64_t, 2>& w) {
  auto det = [](const std::array<std::int64_t, 2>& x,
                const std::array<std::int64_t, 2>& y) {
    return checked_sub(checked_mul(x[0], y[1]), checked_mul(x[1], y[0]));
  };
  std::array<std::array<std::int64_t, 2>, 3> vec = {u, v, w};
  std::int64_t duv = det(u, v), duw = det(u, w), dvw = det(v, w);
  if (duv == 0 || duw == 0 || dvw == 0)
    throw Error("input vectors must be pairwise linearly independent");

  // Kernel vector of the 2x3 matrix [u v w]: alpha*u + beta*v + gamma*w = 0.
  std::array<std::int64_t, 3> k = {dvw, -duw, duv};
  std::int64_t g = std::gcd(std::gcd(std::abs(k[0]), std::abs(k[1])),
                            std::abs(k[2]));
  for (auto& x : k) x /= g;

  int negatives = 0;
  for (auto x : k) negatives += (x < 0);
  if (negatives == 0 || negatives == 3)
    throw Error("vectors admit no relation p*u' + q*v' = r*w' over N");
  if (negatives == 2)
    for (auto& x : k) x = -x;

  int neg = 0;
  while (k[neg] >= 0) ++neg;
  // Positive coefficients keep their input order; the negative one moves to
  // the third slot: the lexicographically smallest valid permutation.
  RecognizedMonoid out;
  int slot = 0;
  for (int i = 0; i < 3; ++i)
    if (i != neg) out.permutation[slot++] = i;
  out.permutation[2] = neg;
  out.p = k[out.permutation[0]];
  out.q = k[out.permutation[1]];
  out.r = -k[neg];

  for (int comp = 0; comp < 2; ++comp) {
    std::int64_t lhs =
        checked_add(checked_mul(out.p, vec[out.permutation[0]][comp]),
                    checked_mul(out.q, vec[out.permutation[1]][comp]));
    std::int64_t rhs = checked_mul(out.r, vec[out.permutation[2]][comp]);
    if (lhs != rhs) throw Error("internal: recognized relation fails to hold");
  }
  return out;
}

NumsgIso::NumsgIso(std::int64_t p, std::int64_t q)
    : quotient_(MonoidSpec::two_gen(p, q)),
      semigroup_(MonoidSpec::numerical_semigroup(p, q)) {}

std::int64_t NumsgIso::to_integer(const MonoidElement& x) const {
  if (x.spec() != quotient_) throw Error("element not in the quotient monoid");
  // a -> q, b -> p; constant across the rewrite class.
  return checked_add(checked_mul(x.coords()[0], quotient_.q()),
                     checked_mul(x.coords()[1], quotient_.p()));
}

MonoidElement NumsgIso::from_integer(std::int64_t value) const {
  if (value < 0) throw Error("negative integer is not a semigroup member");
  std::int64_t p = quotient_.p(), q = quotient_.q();
  // Normal forms have m <= p - 1, and value = m*q + n*p.
  for (std::int64_t m = 0; m < p && checked_mul(m, q) <= value; ++m) {
    std::int64_t rest = value - m * q;
    if (rest % p == 0)
      return MonoidElement(quotient_, {m, rest / p});
  }
  throw Error(std::to_string(value) + " is not in numsg:" + std::to_string(p) +
              "," + std::to_string(q));
}

}  // namespace frobex
