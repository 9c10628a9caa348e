#pragma once

#include <random>

#include "hyparr/adjoint.hpp"
#include "hyparr/invariants.hpp"
#include "hyparr/poset.hpp"

namespace hyparr {

// A + H_{alpha,a} with set semantics: an existing member is returned
// unchanged, a zero normal only sets the degenerate flag (ambient space for
// a = 0, empty hyperplane otherwise).
Arrangement extend(const Arrangement& a, const Vec<Rational>& normal, const Rational& offset);

// One stratum of the classification: a flat X of L(tilde A) together with a
// deterministic representative point, the extension it induces and that
// extension's invariant profile.
struct Stratum {
  int index = 0;  // element index in the adjoint lattice
  int dim = 0;
  std::vector<int> labels;  // tilde labels whose hyperplanes contain X
  Vec<Rational> rep;        // representative (alpha, a)
  Degenerate degenerate = Degenerate::None;
  bool duplicate = false;  // representative reproduces a member of A
  InvariantBundle bundle;
  int class_id = 0;  // 1-based, in order of first appearance
};

struct ClassificationReport {
  AdjointData adj;
  SemiLattice adj_lattice;
  std::vector<Stratum> strata;  // dim ascending, then canonical flat key
  int num_classes = 0;
};

// Deterministic representatives of M(arr/X): up to `count` chart points with
// integer coordinates, enumerated by max-norm shells, each avoiding every
// member of arr that does not contain X. A 0-dimensional flat carries exactly
// one point, so at most one representative exists there.
std::vector<Vec<Rational>> representative_points(const Arrangement& arr,
                                                 const SemiLatticeT<Rational>& lat, int x,
                                                 int count);

// First representative from representative_points.
Vec<Rational> representative_point(const Arrangement& arr, const SemiLatticeT<Rational>& lat,
                                   int x);

// Seeded variant drawing random rational chart coordinates; never returns the
// deterministic representative's duplicates by accident (callers dedupe).
Vec<Rational> random_point_in_stratum(const Arrangement& arr, const SemiLatticeT<Rational>& lat,
                                      int x, std::mt19937_64& rng);

// Index in `lat` of the stratum containing the point (normal, offset).
int stratum_of(const AdjointData& adj, const SemiLattice& lat, const Vec<Rational>& normal,
               const Rational& offset);

ClassificationReport classify_extensions(const Arrangement& a);

struct StratumCheck {
  std::string family;  // "tilde", "sigma", "sigma-affine" or "bar"
  int stratum = 0;
  int reps = 0;
  bool bundles_equal = true;
  bool posets_isomorphic = true;
};

struct ClassificationVerification {
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<StratumCheck> checks;
  bool ok = true;
};

// Draws `trials` representatives per stratum (deterministic plus seeded
// random), extends by each, and checks that the resulting lattices are
// pairwise isomorphic with identical invariant bundles. For linear inputs the
// sigma strata (linear and affine extensions) are verified as well; bar
// strata are verified for every essential input.
ClassificationVerification verify_classification(const Arrangement& a, int trials,
                                                 std::uint64_t seed);

struct MonotonicityViolation {
  std::string family;
  int sub = 0;    // stratum whose flat is contained in the other
  int super_ = 0;
  std::string detail;
};

// Exhaustive check over comparable stratum pairs of the induced adjoint (and
// of sigma / bar for the linear / essential variants) that the invariant
// profile is componentwise monotone under stratum inclusion.
std::vector<MonotonicityViolation> verify_monotonicity(const Arrangement& a);

// Non-essential law: extending by alpha outside the span of the normals
// produces L(A) x C2. Throws InputError if alpha lies in the span.
bool c2_product_check(const Arrangement& a, const Vec<Rational>& normal, const Rational& offset);

// "" when a <= b componentwise, otherwise the first offending field.
std::string bundle_leq_detail(const InvariantBundle& a, const InvariantBundle& b);

}  // namespace hyparr
