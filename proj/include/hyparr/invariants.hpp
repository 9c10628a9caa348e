#pragma once

#include "hyparr/lattice.hpp"

namespace hyparr {

// Numerical profile of an arrangement. Sizes are fixed by the ambient
// dimension d: vectors have d+1 entries indexed by 0..d, grids are
// (d+1)x(d+1). For a degenerate arrangement containing the ambient space
// everything is zero by convention.
struct InvariantBundle {
  int d = 0;
  IntPoly chi;
  BiPoly whitney;
  std::vector<std::vector<BigInt>> cij;     // c_ij for 0<=j<=i<=d, else 0
  std::vector<BigInt> wplus;                // unsigned Whitney numbers, first kind
  std::vector<BigInt> W;                    // flats counted by codimension
  std::vector<BigInt> faces;                // f_k, faces of dimension k
  BigInt regions = 0;                       // r = f_d = (-1)^d chi(-1)
  std::vector<std::vector<BigInt>> doubly;  // signed w_ij, indexed by codim pairs

  friend bool operator==(const InvariantBundle& a, const InvariantBundle& b) {
    return a.d == b.d && a.chi == b.chi && a.whitney == b.whitney && a.cij == b.cij &&
           a.wplus == b.wplus && a.W == b.W && a.faces == b.faces && a.regions == b.regions &&
           a.doubly == b.doubly;
  }
  friend bool operator!=(const InvariantBundle& a, const InvariantBundle& b) { return !(a == b); }
};

// Componentwise order on the unsigned profile (c_ij, w+, W, f, r); the signed
// fields chi/whitney/doubly are excluded on purpose.
bool bundle_leq(const InvariantBundle& a, const InvariantBundle& b);

// Whitney polynomial by its defining double sum over comparable flat pairs.
template <class F>
BiPoly whitney_poly(const SemiLatticeT<F>& lat, Degenerate degenerate) {
  BiPoly w(lat.ambient);
  if (degenerate == Degenerate::AmbientMember) return w;
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j)
      if (lat.leq(i, j)) w.at(lat.ambient - lat.dim_of(i), lat.dim_of(j)) += lat.mobius(i, j);
  return w;
}

template <class F>
BiPoly whitney_poly(const ArrangementT<F>& a) {
  return whitney_poly<F>(build_semilattice<F>(a), a.degenerate);
}

// Independent route: w(A;s,t) = sum over flats X of chi(A/X,t) s^{d-dim X},
// with each chi computed from the lattice of the restriction arrangement.
template <class F>
BiPoly whitney_poly_via_restrictions(const ArrangementT<F>& a) {
  BiPoly w(a.dim);
  if (a.degenerate == Degenerate::AmbientMember) return w;
  SemiLatticeT<F> lat = build_semilattice<F>(a);
  for (int i = 0; i < lat.size(); ++i) {
    IntPoly chi = char_poly<F>(restriction<F>(a, lat.flats[i]));
    for (int t = 0; t <= chi.degree(); ++t)
      w.at(a.dim - lat.dim_of(i), t) += chi.coeffs[t];
  }
  return w;
}

template <class F>
InvariantBundle compute_invariants(const ArrangementT<F>& a) {
  const int d = a.dim;
  InvariantBundle b;
  b.d = d;
  b.cij.assign(d + 1, std::vector<BigInt>(d + 1, BigInt(0)));
  b.wplus.assign(d + 1, BigInt(0));
  b.W.assign(d + 1, BigInt(0));
  b.faces.assign(d + 1, BigInt(0));
  b.doubly.assign(d + 1, std::vector<BigInt>(d + 1, BigInt(0)));
  b.whitney = BiPoly(d);
  if (a.degenerate == Degenerate::AmbientMember) return b;

  SemiLatticeT<F> lat = build_semilattice<F>(a);
  b.chi = char_poly<F>(lat, a.degenerate);
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j)
      if (lat.leq(i, j)) {
        b.whitney.at(d - lat.dim_of(i), lat.dim_of(j)) += lat.mobius(i, j);
        b.doubly[d - lat.dim_of(i)][d - lat.dim_of(j)] += lat.mobius(i, j);
      }
  // w(A;s,t) = sum_{j<=i} (-1)^j c_ij s^{d-i} t^{i-j}
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= i; ++j) {
      BigInt c = b.whitney.at(d - i, i - j);
      b.cij[i][j] = (j % 2 == 0) ? c : -c;
    }
  for (int k = 0; k <= d; ++k) b.wplus[k] = b.cij[d][k];
  for (int i = 0; i < lat.size(); ++i) b.W[d - lat.dim_of(i)] += 1;
  // f_k via Zaslavsky applied to each restriction: an independent route that
  // the c_ij row sums must reproduce.
  for (int i = 0; i < lat.size(); ++i) {
    int k = lat.dim_of(i);
    IntPoly chi = char_poly<F>(restriction<F>(a, lat.flats[i]));
    BigInt v = chi.eval(BigInt(-1));
    b.faces[k] += (k % 2 == 0) ? v : -v;
  }
  for (int i = 0; i <= d; ++i) {
    BigInt row = 0;
    for (int j = 0; j <= i; ++j) row += b.cij[i][j];
    if (row != b.faces[i])
      throw std::logic_error("invariant violation: face count vs c_ij row sum");
  }
  b.regions = b.faces[d];
  BigInt chi_m1 = b.chi.eval(BigInt(-1));
  if (d % 2 == 1) chi_m1 = -chi_m1;
  if (b.regions != chi_m1) throw std::logic_error("invariant violation: regions vs chi(-1)");
  return b;
}

}  // namespace hyparr
