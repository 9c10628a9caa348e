#include <doctest.h>

#include "corpus.hpp"
#include "hyparr/poset.hpp"

using namespace hyparr;
using namespace hyparr::tests;

namespace {

Poset chain(int n) {
  Poset p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

Poset relabel(const Poset& p, const std::vector<int>& perm) {
  Poset q;
  q.n = p.n;
  q.leq.assign(p.n, std::vector<bool>(p.n, false));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) q.leq[perm[i]][perm[j]] = p.leq[i][j];
  return q;
}

}  // namespace

TEST_CASE("poset_of mirrors the lattice order") {
  SemiLattice lat = build_semilattice<Rational>(example21());
  Poset p = poset_of<Rational>(lat);
  CHECK(p.n == 6);
  int comparable = 0;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      CHECK(p.leq[i][j] == lat.leq(i, j));
      if (p.leq[i][j]) comparable++;
    }
  // 6 reflexive + 5 from the bottom + 1+1+2 line-vertex pairs
  CHECK(comparable == 15);
}

TEST_CASE("product with the two-element chain") {
  Poset c3 = chain(3);
  Poset prod = product_with_chain2(c3);
  CHECK(prod.n == 6);
  int pairs = 0;
  for (int i = 0; i < prod.n; ++i)
    for (int j = 0; j < prod.n; ++j)
      if (prod.leq[i][j]) pairs++;
  // grid order on 3x2: sum over pairs of (#above) = 6+4+2+3+2+1
  CHECK(pairs == 18);
  CHECK_FALSE(poset_isomorphic(prod, chain(6)));
}

TEST_CASE("coordinate lattice times chain is the next coordinate lattice") {
  SemiLattice b2 = build_semilattice<Rational>(boolean_arr(2));
  SemiLattice b3 = build_semilattice<Rational>(boolean_arr(3));
  CHECK(poset_isomorphic(product_with_chain2(poset_of<Rational>(b2)), poset_of<Rational>(b3)));
  SemiLattice b1 = build_semilattice<Rational>(boolean_arr(1));
  CHECK(poset_isomorphic(product_with_chain2(poset_of<Rational>(b1)), poset_of<Rational>(b2)));
  CHECK_FALSE(poset_isomorphic(poset_of<Rational>(b2), poset_of<Rational>(b3)));
}

TEST_CASE("isomorphism distinguishes same-size posets") {
  SemiLattice pencil = build_semilattice<Rational>(pencil3());
  // 5 elements: bottom, three lines, one common vertex
  CHECK(poset_of<Rational>(pencil).n == 5);
  CHECK_FALSE(poset_isomorphic(poset_of<Rational>(pencil), chain(5)));

  SemiLattice two = build_semilattice<Rational>(make_arr(2, {{1, 0, 0}, {1, 0, 1}}));
  SemiLattice other = build_semilattice<Rational>(make_arr(2, {{1, 0, 0}, {0, 1, 0}}));
  // both have 3 and 4 elements respectively, so sizes already differ
  CHECK(poset_of<Rational>(two).n == 3);
  CHECK(poset_of<Rational>(other).n == 4);
  CHECK_FALSE(poset_isomorphic(poset_of<Rational>(two), poset_of<Rational>(other)));
}

TEST_CASE("isomorphism is invariant under relabeling") {
  SemiLattice lat = build_semilattice<Rational>(example21());
  Poset p = poset_of<Rational>(lat);
  CHECK(poset_isomorphic(p, relabel(p, {3, 0, 5, 1, 4, 2})));
  SemiLattice g5 = build_semilattice<Rational>(
      make_arr(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, -1, 0}}));
  Poset q = poset_of<Rational>(g5);
  std::vector<int> perm(q.n);
  for (int i = 0; i < q.n; ++i) perm[i] = (7 * i + 3) % q.n;
  CHECK(poset_isomorphic(q, relabel(q, perm)));
}
