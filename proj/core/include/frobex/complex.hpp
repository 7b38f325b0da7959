#pragma once

// Order complexes of finite posets: faces are the chains, stored per
// dimension in flat lexicographically sorted arrays.

#include <cstdint>
#include <span>
#include <vector>

#include "frobex/interval.hpp"

namespace frobex {

struct SimplicialComplex {
  std::int32_t vertex_count = 0;
  // faces[d] holds the d-faces as ascending (d+1)-tuples of vertex ids,
  // flattened with stride d+1 and sorted lexicographically.
  std::vector<std::vector<std::int32_t>> faces;

  std::size_t face_count(std::size_t d) const {
    return d < faces.size() ? faces[d].size() / (d + 1) : 0;
  }
  int max_dim() const { return static_cast<int>(faces.size()) - 1; }
  bool has_vertices() const { return !faces.empty() && !faces[0].empty(); }
  std::span<const std::int32_t> face(std::size_t d, std::size_t index) const {
    return {faces[d].data() + index * (d + 1), d + 1};
  }
};

// Materializes all chains of the poset.  Throws if the total face count
// would exceed max_faces (guard against runaway enumeration).
SimplicialComplex order_complex(const IntervalPoset& poset,
                                std::size_t max_faces = 50'000'000);

// Chain counts per dimension without materializing faces.
std::vector<std::int64_t> chain_counts(const IntervalPoset& poset);

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex);

// Sum over d of (-1)^d f_d, minus 1; the empty complex gives -1.
std::int64_t reduced_euler(const SimplicialComplex& complex);

// Faces contained in no larger face, flattened per dimension like faces.
std::vector<std::vector<std::int32_t>> facets(const SimplicialComplex& complex);

// Index of the given ascending tuple within complex.faces[d], or -1.
std::int64_t face_index(const SimplicialComplex& complex, std::size_t d,
                        std::span<const std::int32_t> verts);

// Every subface of every face is present (true for all order complexes).
bool is_downward_closed(const SimplicialComplex& complex);

}  // namespace frobex
