#pragma once

#include "hyparr/invariants.hpp"

namespace hyparr {

// Affine circuits of an arrangement (multi-arrangements included): label sets
// with nonempty intersection whose normals form a minimal linearly dependent
// set. Masks are hyperplane positions, circuits are sorted label values.
struct CircuitCatalog {
  std::vector<std::vector<int>> circuits;
  std::vector<std::uint64_t> masks;
};

// Size of a maximal affinely independent subset of the given labels, where a
// subset is affinely independent iff its intersection is nonempty and its
// normals are linearly independent. Coincides with d - dim(intersection)
// whenever the whole set has nonempty intersection.
int rank_of_labels(const Arrangement& a, const std::vector<int>& labels);

// Enumeration by increasing cardinality with superset pruning, capped at
// d + 2 elements (circuits never exceed d + 1).
CircuitCatalog affine_circuits(const Arrangement& a);

// order: the full precedence list of labels, most significant first. Broken
// circuit: a circuit minus its precedence-minimal element.
std::vector<std::uint64_t> broken_circuit_masks(const Arrangement& a, const CircuitCatalog& cat,
                                                const std::vector<int>& order);

// All k-subsets with nonempty intersection containing no broken circuit.
std::vector<std::vector<int>> nbc_sets(const Arrangement& a, int k, const std::vector<int>& order);

std::size_t nbc_count(const Arrangement& a, int k, const std::vector<int>& order);

// c_ij(A) = sum over flats X of dimension i of #NBC_j(A/X), computed with the
// inherited labels and the induced precedence on each restriction.
std::vector<std::vector<BigInt>> cij_via_nbc(const Arrangement& a, const std::vector<int>& order);

// The arrangement's own label sequence, the default precedence.
std::vector<int> natural_order(const Arrangement& a);

}  // namespace hyparr
