#pragma once

#include "hyparr/finitefield.hpp"

namespace hyparr {

// A/H in the canonical chart of H, a multi-arrangement in d-1 coordinates
// with labels inherited from A. Agrees with (A+H)/H whether or not H is a
// member. Throws InputError for a degenerate hyperplane.
Arrangement restrict_to(const Arrangement& a, const Vec<Rational>& normal,
                        const Rational& offset);

struct RestrictionStratum {
  int index = 0;  // adjoint lattice element
  int dim = 0;
  std::vector<int> labels;
  Vec<Rational> rep;  // (alpha, a)
  Degenerate degenerate = Degenerate::None;
  InvariantBundle bundle;  // of A/H, ambient dimension d-1; zero when degenerate
  bool constancy_ok = true;  // second representative gives the same class
  int class_id = 0;
};

struct RestrictionReport {
  SemiLattice adj_lattice;
  std::vector<RestrictionStratum> strata;  // dim ascending, then flat key
  int num_classes = 0;
  bool all_constant = true;
};

// Restriction class of every stratum of the induced adjoint; within-stratum
// constancy is checked against a second, independently drawn representative
// (invariant bundle equality and lattice isomorphism).
RestrictionReport classify_restrictions(const Arrangement& a);

// Componentwise monotonicity of (w+, W, r) of A/H under stratum inclusion,
// exhaustively over comparable pairs; empty iff the law holds.
std::vector<MonotonicityViolation> verify_restriction_monotonicity(const Arrangement& a);

}  // namespace hyparr
