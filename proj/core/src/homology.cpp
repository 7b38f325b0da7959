#include "frobex/homology.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobex {

FieldSpec FieldSpec::gf(std::int64_t prime) {
  if (prime < 2) throw Error("field characteristic must be a prime >= 2");
  for (std::int64_t d = 2; d * d <= prime; ++d)
    if (prime % d == 0)
      throw Error(std::to_string(prime) + " is not prime");
  return FieldSpec(Kind::gf, prime);
}

FieldSpec FieldSpec::rational() { return FieldSpec(Kind::rational, 0); }

std::int64_t FieldSpec::prime() const {
  if (kind_ != Kind::gf) throw Error("rational field has no characteristic");
  return prime_;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "gf2") return gf(2);
  if (text == "rational") return rational();
  if (text.starts_with("gf:")) {
    std::string_view num = text.substr(3);
    std::int64_t p = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
    if (ec != std::errc{} || ptr != num.data() + num.size())
      throw Error("invalid field spec '" + std::string(text) + "'");
    return gf(p);
  }
  throw Error("invalid field spec '" + std::string(text) +
              "' (expected gf2, gf:p, or rational)");
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::rational) return "rational";
  if (prime_ == 2) return "gf2";
  return "gf:" + std::to_string(prime_);
}

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c) {
  std::vector<BoundaryMatrix> out;
  if (!c.has_vertices()) return out;

  BoundaryMatrix aug;
  aug.rows = 1;
  aug.cols = static_cast<std::int64_t>(c.face_count(0));
  for (std::int64_t j = 0; j < aug.cols; ++j)
    aug.entries.push_back({0, static_cast<std::int32_t>(j), 1});
  out.push_back(std::move(aug));

  std::vector<std::int32_t> sub;
  for (std::size_t d = 1; d < c.faces.size(); ++d) {
    BoundaryMatrix m;
    m.rows = static_cast<std::int64_t>(c.face_count(d - 1));
    m.cols = static_cast<std::int64_t>(c.face_count(d));
    m.entries.reserve(static_cast<std::size_t>(m.cols) * (d + 1));
    sub.assign(d, 0);
    for (std::size_t j = 0; j < c.face_count(d); ++j) {
      auto big = c.face(d, j);
      for (std::size_t omit = 0; omit <= d; ++omit) {
        std::size_t w = 0;
        for (std::size_t t = 0; t <= d; ++t)
          if (t != omit) sub[w++] = big[t];
        std::int64_t idx = face_index(c, d - 1, sub);
        if (idx < 0) throw Error("internal: boundary face missing");
        m.entries.push_back({static_cast<std::int32_t>(idx),
                             static_cast<std::int32_t>(j),
                             static_cast<std::int8_t>(omit % 2 ? -1 : 1)});
      }
    }
    std::sort(m.entries.begin(), m.entries.end(),
              [](const BoundaryMatrix::Entry& a, const BoundaryMatrix::Entry& b) {
                return std::tie(a.col, a.row) < std::tie(b.col, b.row);
              });
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

struct Gf2 {
  using Elem = std::uint8_t;
  static Elem from_int(std::int64_t v) { return static_cast<Elem>(v & 1); }
  static bool is_zero(Elem a) { return a == 0; }
  static Elem add(Elem a, Elem b) { return a ^ b; }
  static Elem mul(Elem a, Elem b) { return a & b; }
  static Elem neg(Elem a) { return a; }
  static Elem inv(Elem) { return 1; }
};

struct Gfp {
  std::int64_t p;
  using Elem = std::int64_t;
  Elem from_int(std::int64_t v) const { return ((v % p) + p) % p; }
  static bool is_zero(Elem a) { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<__int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    // Extended Euclid; a is nonzero mod the prime p.
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    return from_int(t);
  }
};

struct RationalField {
  using Elem = boost::multiprecision::cpp_rational;
  static Elem from_int(std::int64_t v) { return Elem(v); }
  static bool is_zero(const Elem& a) { return a == 0; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static Elem inv(const Elem& a) { return 1 / a; }
};

// Column-by-column reduction keyed on lowest nonzero row.  Each finished
// pivot column is scaled so its low entry is 1.
template <class F>
std::int64_t sparse_rank(const BoundaryMatrix& m, const F& field) {
  using Elem = typename F::Elem;
  using Col = std::vector<std::pair<std::int32_t, Elem>>;  // ascending rows
  std::unordered_map<std::int32_t, Col> pivot_by_low;
  pivot_by_low.reserve(256);
  std::int64_t rank = 0;

  auto axpy = [&](const Col& x, const Col& pivot, const Elem& scale) {
    // x + scale * pivot, dropping zeros.
    Col out;
    out.reserve(x.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < x.size() && x[i].first < pivot[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || pivot[j].first < x[i].first) {
        Elem v = field.mul(scale, pivot[j].second);
        if (!F::is_zero(v)) out.emplace_back(pivot[j].first, std::move(v));
        ++j;
      } else {
        Elem v = field.add(x[i].second, field.mul(scale, pivot[j].second));
        if (!F::is_zero(v)) out.emplace_back(x[i].first, std::move(v));
        ++i, ++j;
      }
    }
    return out;
  };

  std::size_t pos = 0;
  while (pos < m.entries.size()) {
    std::int32_t col = m.entries[pos].col;
    Col current;
    while (pos < m.entries.size() && m.entries[pos].col == col) {
      Elem v = field.from_int(m.entries[pos].coeff);
      if (!F::is_zero(v)) current.emplace_back(m.entries[pos].row, std::move(v));
      ++pos;
    }
    while (!current.empty()) {
      std::int32_t low = current.back().first;
      auto it = pivot_by_low.find(low);
      if (it == pivot_by_low.end()) {
        Elem scale = field.inv(current.back().second);
        for (auto& [row, v] : current) v = field.mul(scale, v);
        pivot_by_low.emplace(low, std::move(current));
        ++rank;
        break;
      }
      current = axpy(current, it->second, field.neg(current.back().second));
    }
  }
  return rank;
}

// Dense GF(2) elimination on 64-bit words; used when both sides are small.
std::int64_t dense_rank_gf2(const BoundaryMatrix& m) {
  std::size_t rows = static_cast<std::size_t>(m.rows);
  std::size_t cols = static_cast<std::size_t>(m.cols);
  std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (const auto& e : m.entries)
    bits[static_cast<std::size_t>(e.row) * words + e.col / 64] ^=
        std::uint64_t{1} << (e.col % 64);

  std::int64_t rank = 0;
  std::size_t row_cursor = 0;
  for (std::size_t col = 0; col < cols && row_cursor < rows; ++col) {
    std::size_t word = col / 64;
    std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = row_cursor;
    while (pivot < rows && !(bits[pivot * words + word] & mask)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row_cursor)
      for (std::size_t w = 0; w < words; ++w)
        std::swap(bits[pivot * words + w], bits[row_cursor * words + w]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != row_cursor && (bits[r * words + word] & mask))
        for (std::size_t w = 0; w < words; ++w)
          bits[r * words + w] ^= bits[row_cursor * words + w];
    ++row_cursor;
    ++rank;
  }
  return rank;
}

}  // namespace

std::int64_t matrix_rank(const BoundaryMatrix& m, const FieldSpec& field) {
  if (m.entries.empty()) return 0;
  if (field.kind() == FieldSpec::Kind::rational)
    return sparse_rank(m, RationalField{});
  if (field.prime() == 2) {
    if (m.rows <= 10'000 && m.cols <= 10'000) return dense_rank_gf2(m);
    return sparse_rank(m, Gf2{});
  }
  return sparse_rank(m, Gfp{field.prime()});
}

std::int64_t BettiVector::at(int degree) const {
  auto it = betti_.find(degree);
  return it == betti_.end() ? 0 : it->second;
}

void BettiVector::set(int degree, std::int64_t value) {
  if (value == 0)
    betti_.erase(degree);
  else
    betti_[degree] = value;
}

std::int64_t BettiVector::alternating_sum() const {
  std::int64_t sum = 0;
  for (const auto& [deg, val] : betti_) {
    int parity = ((deg % 2) + 2) % 2;
    sum += parity == 0 ? val : -val;
  }
  return sum;
}

BettiVector BettiVector::shifted(int amount) const {
  BettiVector out;
  for (const auto& [deg, val] : betti_) out.set(deg + amount, val);
  return out;
}

std::string BettiVector::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, val] : betti_) {
    if (!first) os << ", ";
    first = false;
    os << deg << ": " << val;
  }
  os << '}';
  return os.str();
}

BettiVector reduced_betti(const SimplicialComplex& c, const FieldSpec& field) {
  BettiVector out;
  if (!c.has_vertices()) {
    out.set(-1, 1);
    return out;
  }
  std::vector<BoundaryMatrix> mats = boundary_matrices(c);
  std::size_t top = mats.size() - 1;  // matrices 0..top, top = max dim
  std::vector<std::int64_t> rank(top + 2, 0);
  for (std::size_t d = 0; d <= top; ++d) rank[d] = matrix_rank(mats[d], field);

  out.set(-1, 1 - rank[0]);
  for (std::size_t d = 0; d <= top; ++d) {
    std::int64_t faces_d = static_cast<std::int64_t>(c.face_count(d));
    out.set(static_cast<int>(d), faces_d - rank[d] - rank[d + 1]);
  }
  return out;
}

LocalBettiVector local_from_reduced(const BettiVector& reduced) {
  return reduced.shifted(2);
}

LocalBettiVector local_betti(const MonoidSpec& spec,
                             const MonoidElement& lambda,
                             const FieldSpec& field, bool use_core) {
  LocalBettiVector out;
  if (lambda.is_zero()) {
    out.set(0, 1);
    return out;
  }
  IntervalPoset poset = open_interval(spec, lambda);
  if (use_core) poset = poset.core();
  return local_from_reduced(reduced_betti(order_complex(poset), field));
}

}  // namespace frobex
