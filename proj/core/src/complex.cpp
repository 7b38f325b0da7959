#include "frobex/complex.hpp"

#include <algorithm>
#include <numeric>

namespace frobex {

std::vector<std::int64_t> chain_counts(const IntervalPoset& poset) {
  std::size_t n = poset.size();
  // ending_at[v] = number of chains of the current length ending at v.
  std::vector<std::int64_t> ending_at(n, 1), counts;
  while (true) {
    std::int64_t total = std::accumulate(ending_at.begin(), ending_at.end(),
                                         std::int64_t{0});
    if (total == 0) break;
    counts.push_back(total);
    std::vector<std::int64_t> next(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (poset.less(i, j)) acc = checked_add(acc, ending_at[i]);
      next[j] = acc;
    }
    ending_at = std::move(next);
  }
  return counts;
}

SimplicialComplex order_complex(const IntervalPoset& poset,
                                std::size_t max_faces) {
  std::size_t n = poset.size();
  std::vector<std::int64_t> counts = chain_counts(poset);
  std::int64_t total = std::accumulate(counts.begin(), counts.end(),
                                       std::int64_t{0});
  if (total > static_cast<std::int64_t>(max_faces))
    throw Error("order complex would have " + std::to_string(total) +
                " faces, exceeding the cap of " + std::to_string(max_faces));

  SimplicialComplex complex;
  complex.vertex_count = static_cast<std::int32_t>(n);
  complex.faces.resize(counts.size());
  for (std::size_t d = 0; d < counts.size(); ++d)
    complex.faces[d].reserve(static_cast<std::size_t>(counts[d]) * (d + 1));

  // Ascending successor lists; vertices are poset indices, and i < j in the
  // poset order implies nothing about index order, so chains are emitted in
  // poset-order but recorded as ascending index tuples.  Elements are
  // lex-sorted and the divisibility order refines neither direction in
  // general; however order_complex faces must be ascending tuples.  A chain
  // in the poset visits indices in strictly increasing *order* position;
  // sort each emitted tuple.
  std::vector<std::vector<std::int32_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (poset.less(i, j)) succ[i].push_back(static_cast<std::int32_t>(j));

  std::vector<std::int32_t> chain;
  auto extend = [&](auto&& self, std::int32_t last) -> void {
    std::vector<std::int32_t> sorted(chain);
    std::sort(sorted.begin(), sorted.end());
    auto& bucket = complex.faces[chain.size() - 1];
    bucket.insert(bucket.end(), sorted.begin(), sorted.end());
    for (std::int32_t nxt : succ[static_cast<std::size_t>(last)]) {
      chain.push_back(nxt);
      self(self, nxt);
      chain.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    chain.push_back(static_cast<std::int32_t>(v));
    extend(extend, static_cast<std::int32_t>(v));
    chain.pop_back();
  }

  for (std::size_t d = 0; d < complex.faces.size(); ++d) {
    // Sort the flat face list lexicographically, tuple by tuple.
    std::size_t stride = d + 1;
    std::vector<std::size_t> order(complex.faces[d].size() / stride);
    std::iota(order.begin(), order.end(), 0);
    const auto& flat = complex.faces[d];
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(
          flat.begin() + a * stride, flat.begin() + (a + 1) * stride,
          flat.begin() + b * stride, flat.begin() + (b + 1) * stride);
    });
    std::vector<std::int32_t> sorted;
    sorted.reserve(flat.size());
    for (std::size_t idx : order)
      sorted.insert(sorted.end(), flat.begin() + idx * stride,
                    flat.begin() + (idx + 1) * stride);
    complex.faces[d] = std::move(sorted);
  }
  return complex;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::int64_t> f;
  for (std::size_t d = 0; d < complex.faces.size(); ++d)
    f.push_back(static_cast<std::int64_t>(complex.face_count(d)));
  return f;
}

std::int64_t reduced_euler(const SimplicialComplex& complex) {
  std::int64_t chi = -1;
  for (std::size_t d = 0; d < complex.faces.size(); ++d) {
    std::int64_t fd = static_cast<std::int64_t>(complex.face_count(d));
    chi += (d % 2 == 0) ? fd : -fd;
  }
  return chi;
}

std::int64_t face_index(const SimplicialComplex& complex, std::size_t d,
                        std::span<const std::int32_t> verts) {
  if (d >= complex.faces.size()) return -1;
  const auto& flat = complex.faces[d];
  std::size_t stride = d + 1;
  std::size_t count = flat.size() / stride;
  std::size_t lo = 0, hi = count;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto begin = flat.begin() + mid * stride;
    if (std::lexicographical_compare(begin, begin + stride, verts.begin(),
                                     verts.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count &&
      std::equal(flat.begin() + lo * stride, flat.begin() + (lo + 1) * stride,
                 verts.begin()))
    return static_cast<std::int64_t>(lo);
  return -1;
}

std::vector<std::vector<std::int32_t>> facets(
    const SimplicialComplex& complex) {
  std::vector<std::vector<std::int32_t>> out(complex.faces.size());
  for (std::size_t d = 0; d < complex.faces.size(); ++d) {
    std::size_t stride = d + 1;
    std::vector<char> covered(complex.face_count(d), 0);
    if (d + 1 < complex.faces.size()) {
      std::size_t upper = complex.face_count(d + 1);
      std::vector<std::int32_t> sub(stride);
      for (std::size_t j = 0; j < upper; ++j) {
        auto big = complex.face(d + 1, j);
        for (std::size_t omit = 0; omit < big.size(); ++omit) {
          std::size_t w = 0;
          for (std::size_t t = 0; t < big.size(); ++t)
            if (t != omit) sub[w++] = big[t];
          std::int64_t idx = face_index(complex, d, sub);
          if (idx >= 0) covered[static_cast<std::size_t>(idx)] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < covered.size(); ++i)
      if (!covered[i]) {
        auto f = complex.face(d, i);
        out[d].insert(out[d].end(), f.begin(), f.end());
      }
  }
  return out;
}

bool is_downward_closed(const SimplicialComplex& complex) {
  std::vector<std::int32_t> sub;
  for (std::size_t d = 1; d < complex.faces.size(); ++d) {
    std::size_t stride = d + 1;
    sub.assign(stride - 1, 0);
    for (std::size_t j = 0; j < complex.face_count(d); ++j) {
      auto big = complex.face(d, j);
      for (std::size_t omit = 0; omit < stride; ++omit) {
        std::size_t w = 0;
        for (std::size_t t = 0; t < stride; ++t)
          if (t != omit) sub[w++] = big[t];
        if (face_index(complex, d - 1, sub) < 0) return false;
      }
    }
  }
  return true;
}

}  // namespace frobex
