#pragma once

// Finite subposets of a monoid under divisibility: the open interval
// (0, lambda), half-open intervals [mu, lambda), induced restrictions, and
// an exact homotopy-preserving core (iterated removal of reducible
// points, i.e. elements whose strict down-set has a maximum or whose
// strict up-set has a minimum).

#include <cstdint>
#include <functional>
#include <vector>

#include "frobex/monoid.hpp"

namespace frobex {

class IntervalPoset {
 public:
  // elements must be distinct normal forms, sorted lexicographically;
  // the strict order is computed on construction.
  IntervalPoset(MonoidSpec spec, std::vector<MonoidElement> elements,
                MonoidElement lower, MonoidElement upper);

  std::size_t size() const { return elements_.size(); }
  const std::vector<MonoidElement>& elements() const { return elements_; }
  const MonoidElement& element(std::size_t i) const { return elements_[i]; }

  // Strict order x < y between stored elements.
  bool less(std::size_t i, std::size_t j) const {
    return lt_[i * elements_.size() + j] != 0;
  }

  const MonoidSpec& spec() const { return spec_; }
  const MonoidElement& lower() const { return lower_; }
  const MonoidElement& upper() const { return upper_; }

  // Induced subposet on the elements satisfying keep.
  IntervalPoset restricted(
      const std::function<bool(const MonoidElement&)>& keep) const;

  // Deterministic dismantling: repeatedly delete the lowest-indexed
  // reducible point.  The result carries the same reduced homology as
  // the original order complex.
  IntervalPoset core() const;

  // Validation helpers (the constructor guarantees both; tests recheck).
  bool strict_order_is_irreflexive() const;
  bool strict_order_is_transitive() const;

 private:
  IntervalPoset(const IntervalPoset& parent,
                const std::vector<std::size_t>& keep_indices);

  MonoidSpec spec_;
  std::vector<MonoidElement> elements_;
  std::vector<std::uint8_t> lt_;  // row-major size() x size()
  MonoidElement lower_, upper_;
};

// Open interval (0, lambda): every mu with 0 < mu < lambda.
IntervalPoset open_interval(const MonoidSpec& spec,
                            const MonoidElement& lambda);

// Half-open interval [mu, lambda): nu with mu <= nu < lambda.
// Requires mu < lambda.
IntervalPoset half_open_interval(const MonoidSpec& spec,
                                 const MonoidElement& mu,
                                 const MonoidElement& lambda);

IntervalPoset restrict_to(
    const IntervalPoset& poset,
    const std::function<bool(const MonoidElement&)>& keep);

}  // namespace frobex
