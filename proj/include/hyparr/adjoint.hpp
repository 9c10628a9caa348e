#pragma once

#include "hyparr/lattice.hpp"

namespace hyparr {

struct HyperplaneProvenance {
  char kind;             // 'u': from a line of L1(A deg 0), 'v': from a vertex of A
  Vec<Rational> source;  // the primitive direction, or the vertex
};

// Everything derived from an essential arrangement on the way to its induced
// adjoint: the linearization A0 = {H_alpha}, the vertex set L0(A), the line
// directions of L1(A0), the adjoint sigma(A0), the induced adjoint in d+1
// coordinates split into its u-part and v-part, and bar(A) = {H_v} u sigma.
struct AdjointData {
  Arrangement lin;                           // linearization, duplicates merged
  std::vector<std::vector<int>> lin_sources; // labels of A behind each member
  std::vector<Vec<Rational>> vertices;       // sorted lexicographically
  std::vector<Vec<Rational>> lines;          // primitive directions, sorted
  Arrangement tilde;                         // induced adjoint, central in d+1
  std::vector<HyperplaneProvenance> provenance;  // parallel to tilde
  std::vector<int> part1;                    // tilde labels of u-kind members
  std::vector<int> part0;                    // tilde labels of v-kind members
  Arrangement sigma;                         // adjoint of the linearization
  Arrangement bar;                           // {H_v : v != 0} u sigma, merged
};

Arrangement linearize(const Arrangement& a, std::vector<std::vector<int>>* sources);

// 0-flats of L(A) and primitive directions of the 1-flats of L(lin A).
// Throws InputError unless A is essential.
void vertices_and_lines(const Arrangement& a, std::vector<Vec<Rational>>& vertices,
                        std::vector<Vec<Rational>>& lines);

AdjointData induced_adjoint(const Arrangement& a);

inline SemiLattice adjoint_lattice(const AdjointData& adj) {
  return build_semilattice<Rational>(adj.tilde);
}

}  // namespace hyparr
