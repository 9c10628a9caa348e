#pragma once

#include "hyparr/extension.hpp"

namespace hyparr {

struct PrimeArrangement {
  long long p = 0;
  ArrangementT<Fp> arr;
};

// Reduction mod p of the primitive integer data of each hyperplane (rational
// offsets are cleared first; scaling by a nonzero constant preserves the
// hyperplane). Throws BadPrime when a normal vanishes mod p or two members
// collide mod p, InputError when p is not prime.
PrimeArrangement reduce_mod_p(const Arrangement& a, long long p);

// #(F_p^d minus the union of the hyperplanes), by enumeration with early
// exit; at most 10^7 points are enumerated.
long long count_complement(const PrimeArrangement& ap);

// Certificate core: reduction mod p reproduces the (label set, dim) family of
// L(A) exactly. Sufficient for the counting oracle on its own; good_prime
// additionally certifies the adjoint and the stratum extensions.
bool reduction_preserves_lattice(const Arrangement& a, long long p);

struct GoodPrimeCertificate {
  long long p = 0;
  std::vector<long long> rejected;  // smaller candidates and why they failed
  std::vector<std::string> reasons;
  int strata_checked = 0;
};

// Smallest prime >= floor whose reduction preserves the intersection lattices
// of A, of the induced adjoint, and of a one-element extension by a
// representative of each stratum, all via the natural label correspondence
// (label-set families and flat dimensions must agree exactly). Several
// candidate representatives are tried per stratum; any one certifies it.
std::pair<long long, GoodPrimeCertificate> good_prime(const Arrangement& a, long long floor);

struct ConvolutionReport {
  IntPoly lhs;
  IntPoly rhs;
  bool equal = false;
};

// Exact polynomial identity sum_X chi(tilde/X,t) chi(X,t) = t^d (t-1) chi(A,t),
// with chi(X,t) the characteristic polynomial of A extended by the stratum
// representative. Degenerate inputs (ambient member) give 0 = 0.
ConvolutionReport verify_convolution(const Arrangement& a);

struct SpotStratum {
  int index = 0;           // adjoint lattice element
  long long points = 0;    // #M(tilde_p / X), counted in F_p^{d+1}
  long long sum = 0;       // total extension complement size over the stratum
  long long rep_count = 0; // extension complement size sampled at one point
};

struct SpotCheckReport {
  long long p = 0;
  long long m_count = 0;      // #M(A_p)
  long long lhs_points = 0;   // per-point double count over F_p^{d+1}
  long long lhs_product = 0;  // stratified product form (essential inputs)
  long long rhs = 0;          // p^d (p-1) #M(A_p)
  bool essential = false;
  bool equal = false;
  std::vector<SpotStratum> strata;  // essential inputs only
};

// Evaluates the convolution identity at t = p by counting: complements of the
// adjoint strata in F_p^{d+1}, extension complements in F_p^d. For essential
// inputs both the per-point sum and the sampled product form must match the
// right-hand side; otherwise only the per-point sum applies.
SpotCheckReport ff_convolution_spot_check(const Arrangement& a, long long p);

}  // namespace hyparr
