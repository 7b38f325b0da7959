#pragma once

// Transition functions between parameter choices, the induced monoid maps,
// closure operators on divisibility posets, and closed-form predictions of
// local Betti vectors obtained by reducing to small base presentations.

#include <cstdint>
#include <optional>
#include <string>

#include "frobex/homology.hpp"
#include "frobex/monoid.hpp"

namespace frobex {

// tau_{p -> q}(m*p + t) = m*q + min(t, q - 1) for 0 <= t < p.
std::int64_t tau(std::int64_t p, std::int64_t q, std::int64_t n);

// Coordinatewise tau on normal forms, then renormalized in the target.
// Source and target must both be two-generator or both three-generator.
MonoidElement transition_map(const MonoidSpec& source, const MonoidSpec& target,
                             const MonoidElement& x);

class ClosureOp {
 public:
  enum class Kind {
    composed_transition,  // map to target and back
    clamp_112,            // (m,n,k) -> (min(m,n+1), min(m+1,n), k) on three:1,1,2
    clamp_122,            // (m,n,k) -> (min(m,n/2+1), min(2m+1,n), k) on three:1,2,2
    clamp_222,            // same formula as clamp_112, on three:2,2,2
    free_clamp            // (m,n) -> (min(m,1), min(n,1)) on free:2
  };

  static ClosureOp composed_transition(MonoidSpec source, MonoidSpec target);
  static ClosureOp clamp_112();
  static ClosureOp clamp_122();
  static ClosureOp clamp_222();
  static ClosureOp free_clamp();

  Kind kind() const { return kind_; }
  const MonoidSpec& domain() const { return domain_; }
  MonoidElement apply(const MonoidElement& x) const;
  std::string name() const;

 private:
  ClosureOp(Kind k, MonoidSpec domain, std::optional<MonoidSpec> target);
  Kind kind_;
  MonoidSpec domain_;
  std::optional<MonoidSpec> target_;
};

bool is_fixed(const MonoidElement& x, const ClosureOp& op);

// Exhaustive check of the closure-operator laws on all normal forms within
// the coordinate box (inclusive bounds): descending (op(x) <= x),
// idempotent, order-preserving, and op(x) = 0 only for x = 0.
struct ClosureCheck {
  bool pass = true;
  std::string failure;  // first violated law and witness
};
ClosureCheck verify_closure(const ClosureOp& op, const Coords& box);

// Known homotopy type of an open interval (0, lambda).
struct Prediction {
  enum class Type { sphere, wedge_of_spheres, point };
  Type type = Type::point;
  int dim = 0;        // sphere dimension, >= -1
  int multiplicity = 1;
  LocalBettiVector betti;
  std::string label() const;  // "S^3", "S^2 v S^2", "point"
};

// Closed-form local Betti vector for lambda != 0, routed through the
// transition reduction to a base presentation.  Throws for free monoids of
// dimension > 2.
Prediction predicted_betti(const MonoidSpec& spec, const MonoidElement& lambda);

}  // namespace frobex
