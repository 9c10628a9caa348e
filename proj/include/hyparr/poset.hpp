#pragma once

#include <vector>

#include "hyparr/lattice.hpp"

namespace hyparr {

// Finite poset as a reflexive-transitive relation matrix; used for abstract
// isomorphism checks where only order structure may be consulted.
struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> leq;

  static Poset discrete(int n);
};

template <class F>
Poset poset_of(const SemiLatticeT<F>& lat) {
  Poset p;
  p.n = lat.size();
  p.leq.assign(p.n, std::vector<bool>(p.n, false));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) p.leq[i][j] = lat.leq(i, j);
  return p;
}

// Direct product with the two-element chain 0 < 1.
Poset product_with_chain2(const Poset& p);

// Backtracking isomorphism test. Candidate maps are pruned by iterated
// relation-profile fingerprints before the search.
bool poset_isomorphic(const Poset& p, const Poset& q);

}  // namespace hyparr
