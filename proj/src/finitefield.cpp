#include "hyparr/finitefield.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hyparr {

namespace {

constexpr long long kPointBudget = 10000000;

// (normal, offset) as a primitive integer row; the canonical form already has
// an integer normal, so only the offset's denominator needs clearing.
std::pair<std::vector<BigInt>, BigInt> primitive_row(const Hyperplane<Rational>& h) {
  BigInt den = h.offset.get_den();
  std::vector<BigInt> n;
  n.reserve(h.normal.size());
  BigInt content = 0;
  for (const auto& x : h.normal) {
    n.push_back(BigInt(x.get_num()) * den);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.back().get_mpz_t());
  }
  BigInt off = h.offset.get_num();
  mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), off.get_mpz_t());
  if (sgn(content) != 0) {
    for (auto& x : n) x /= content;
    off /= content;
  }
  return {std::move(n), std::move(off)};
}

long long residue(const BigInt& x, long long p) {
  BigInt r = x % static_cast<long>(p);
  long long v = r.get_si();
  return v < 0 ? v + p : v;
}

long long pow_checked(long long base, int exp, long long cap) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// (label set, dim) family of the semilattice; reductions at good primes must
// reproduce it exactly.
template <class F>
std::vector<std::pair<std::vector<int>, int>> lattice_signature(const SemiLatticeT<F>& lat) {
  std::vector<std::pair<std::vector<int>, int>> sig;
  sig.reserve(lat.size());
  for (int i = 0; i < lat.size(); ++i) sig.emplace_back(lat.labels[i], lat.dim_of(i));
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

bool reduction_preserves_lattice(const Arrangement& a, long long p) {
  PrimeArrangement ap = reduce_mod_p(a, p);
  return lattice_signature<Rational>(build_semilattice<Rational>(a)) ==
         lattice_signature<Fp>(build_semilattice<Fp>(ap.arr));
}

PrimeArrangement reduce_mod_p(const Arrangement& a, long long p) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  if (a.multi) throw InputError("reduce_mod_p requires a simple arrangement");
  PrimeArrangement out;
  out.p = p;
  out.arr.dim = a.dim;
  out.arr.degenerate = a.degenerate;
  out.arr.like = Fp(0, p);
  for (int i = 0; i < a.size(); ++i) {
    auto [n, off] = primitive_row(a.hyperplanes[i]);
    Vec<Fp> normal;
    normal.reserve(n.size());
    bool zero = true;
    for (const auto& x : n) {
      normal.emplace_back(residue(x, p), p);
      if (normal.back().v != 0) zero = false;
    }
    if (zero)
      throw BadPrime(p, "normal of hyperplane " + std::to_string(a.labels[i]) + " vanishes");
    Hyperplane<Fp> h = make_hyperplane<Fp>(std::move(normal), Fp(residue(off, p), p));
    for (int j = 0; j < out.arr.size(); ++j)
      if (out.arr.hyperplanes[j] == h)
        throw BadPrime(p, "hyperplanes " + std::to_string(a.labels[j]) + " and " +
                              std::to_string(a.labels[i]) + " collide");
    out.arr.hyperplanes.push_back(std::move(h));
    out.arr.labels.push_back(a.labels[i]);
  }
  return out;
}

long long count_complement(const PrimeArrangement& ap) {
  const long long p = ap.p;
  const int d = ap.arr.dim;
  if (pow_checked(p, d, kPointBudget) > kPointBudget)
    throw BudgetExceeded("p^d exceeds the point enumeration budget");
  const int m = ap.arr.size();
  std::vector<std::vector<long long>> normals(m, std::vector<long long>(d));
  std::vector<long long> offsets(m);
  for (int h = 0; h < m; ++h) {
    for (int k = 0; k < d; ++k) normals[h][k] = ap.arr.hyperplanes[h].normal[k].v;
    offsets[h] = ap.arr.hyperplanes[h].offset.v;
  }
  long long count = 0;
  std::vector<long long> partial(m, 0);
  // depth-first over coordinates, carrying partial dot products
  std::function<void(int, const std::vector<long long>&)> walk =
      [&](int depth, const std::vector<long long>& dots) {
        if (depth == d) {
          for (int h = 0; h < m; ++h)
            if (dots[h] % p == offsets[h]) return;
          ++count;
          return;
        }
        std::vector<long long> next(m);
        for (long long v = 0; v < p; ++v) {
          for (int h = 0; h < m; ++h) next[h] = (dots[h] + normals[h][depth] * v) % p;
          walk(depth + 1, next);
        }
      };
  walk(0, partial);
  return count;
}

std::pair<long long, GoodPrimeCertificate> good_prime(const Arrangement& a, long long floor) {
  if (!is_essential(a)) throw InputError("good_prime requires an essential arrangement");
  if (floor < 2) floor = 2;
  AdjointData adj = induced_adjoint(a);
  SemiLattice lat = adjoint_lattice(adj);
  // Any representative certifies its stratum, so several candidates are kept
  // per stratum: a prime ruled out by one representative's incidental
  // coincidences mod p can still be certified through another. Candidates
  // that normalize to the same hyperplane are dropped.
  constexpr int kCandidates = 6;
  std::vector<std::vector<Arrangement>> extensions(lat.size());
  using Sig = std::vector<std::pair<std::vector<int>, int>>;
  std::vector<std::vector<Sig>> qsigs(lat.size());  // lazy, parallel to extensions
  for (int x = 0; x < lat.size(); ++x) {
    for (const auto& rep : representative_points(adj.tilde, lat, x, kCandidates)) {
      Vec<Rational> alpha(rep.begin(), rep.end() - 1);
      Arrangement ext = extend(a, alpha, rep.back());
      bool fresh = true;
      for (const auto& prev : extensions[x])
        if (prev.hyperplanes == ext.hyperplanes && prev.degenerate == ext.degenerate) {
          fresh = false;
          break;
        }
      if (fresh) extensions[x].push_back(std::move(ext));
    }
  }

  GoodPrimeCertificate cert;
  for (long long p = floor;; ++p) {
    if (!is_prime(p)) continue;
    if (p > 100000) throw BudgetExceeded("no good prime found below 100000");
    try {
      if (!reduction_preserves_lattice(a, p)) throw BadPrime(p, "lattice of A changes");
      if (!reduction_preserves_lattice(adj.tilde, p))
        throw BadPrime(p, "lattice of the induced adjoint changes");
      for (std::size_t x = 0; x < extensions.size(); ++x) {
        bool ok = false;
        for (std::size_t t = 0; t < extensions[x].size() && !ok; ++t) {
          if (qsigs[x].size() <= t)
            qsigs[x].push_back(
                lattice_signature<Rational>(build_semilattice<Rational>(extensions[x][t])));
          try {
            ok = qsigs[x][t] ==
                 lattice_signature<Fp>(build_semilattice<Fp>(reduce_mod_p(extensions[x][t], p).arr));
          } catch (const BadPrime&) {
            // this candidate's row degenerates mod p; the next may not
          }
        }
        if (!ok)
          throw BadPrime(p, "lattice of extension for stratum " + std::to_string(x) + " changes");
      }
    } catch (const BadPrime& bad) {
      cert.rejected.push_back(p);
      cert.reasons.push_back(bad.what());
      continue;
    }
    cert.p = p;
    cert.strata_checked = static_cast<int>(extensions.size());
    return {p, cert};
  }
}

ConvolutionReport verify_convolution(const Arrangement& a) {
  ConvolutionReport rep;
  if (a.degenerate == Degenerate::AmbientMember) {
    rep.equal = true;
    return rep;
  }
  if (!is_essential(a)) throw InputError("verify_convolution requires an essential arrangement");
  AdjointData adj = induced_adjoint(a);
  SemiLattice lat = adjoint_lattice(adj);
  IntPoly lhs;
  for (int x = 0; x < lat.size(); ++x) {
    IntPoly chi_res = char_poly<Rational>(restriction<Rational>(adj.tilde, lat.flats[x]));
    Vec<Rational> p = representative_point(adj.tilde, lat, x);
    Vec<Rational> alpha(p.begin(), p.end() - 1);
    IntPoly chi_ext = char_poly<Rational>(extend(a, alpha, p.back()));
    lhs = lhs + chi_res * chi_ext;
  }
  IntPoly t_minus_1;
  t_minus_1.coeffs = {BigInt(-1), BigInt(1)};
  rep.lhs = lhs;
  rep.rhs = IntPoly::monomial(a.dim, BigInt(1)) * t_minus_1 * char_poly<Rational>(a);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

SpotCheckReport ff_convolution_spot_check(const Arrangement& a, long long p) {
  SpotCheckReport rep;
  rep.p = p;
  const int d = a.dim;
  if (pow_checked(p, d + 1, kPointBudget) > kPointBudget)
    throw BudgetExceeded("p^(d+1) exceeds the point enumeration budget");
  PrimeArrangement ap = reduce_mod_p(a, p);

  // complement points of A_p, flattened row-major
  std::vector<long long> pts;
  {
    const int m = ap.arr.size();
    std::vector<long long> x(d, 0);
    for (;;) {
      bool on = false;
      for (int h = 0; h < m && !on; ++h) {
        long long dotv = 0;
        for (int k = 0; k < d; ++k) dotv += ap.arr.hyperplanes[h].normal[k].v * x[k];
        on = (dotv % p) == ap.arr.hyperplanes[h].offset.v;
      }
      if (!on) pts.insert(pts.end(), x.begin(), x.end());
      int k = d - 1;
      while (k >= 0 && ++x[k] == p) x[k--] = 0;
      if (k < 0) break;
    }
  }
  const long long mcount = static_cast<long long>(pts.size()) / std::max(1, d);
  rep.m_count = mcount;
  long long pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  rep.rhs = pd * (p - 1) * mcount;
  rep.essential = is_essential(a);

  if (pd > 2000000000LL / std::max<long long>(mcount, 1))
    throw BudgetExceeded("spot check work estimate too large");

  // stratum bookkeeping (essential inputs)
  SemiLattice lat;
  std::vector<std::vector<long long>> tnormals;  // tilde_p rows, last column = a-coefficient
  std::map<std::uint64_t, int> mask_to_elem;
  std::vector<long long> tally, sums, repcnt;
  AdjointData adj;
  if (rep.essential) {
    adj = induced_adjoint(a);
    PrimeArrangement tp = reduce_mod_p(adj.tilde, p);
    lat = adjoint_lattice(adj);
    for (int h = 0; h < tp.arr.size(); ++h) {
      std::vector<long long> row(d + 1);
      for (int k = 0; k <= d; ++k) row[k] = tp.arr.hyperplanes[h].normal[k].v;
      tnormals.push_back(std::move(row));
    }
    for (int i = 0; i < lat.size(); ++i) mask_to_elem[lat.masks[i]] = i;
    tally.assign(lat.size(), 0);
    sums.assign(lat.size(), 0);
    repcnt.assign(lat.size(), 0);
  }

  // enumerate alpha in F_p^d; bucket M by the value of alpha.x
  long long lhs = 0;
  std::vector<long long> alpha(d, 0), cnt(p, 0), tdot(tnormals.size(), 0);
  for (;;) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::size_t i = 0; i < pts.size(); i += d) {
      long long dotv = 0;
      for (int k = 0; k < d; ++k) dotv += alpha[k] * pts[i + k];
      ++cnt[dotv % p];
    }
    for (std::size_t h = 0; h < tnormals.size(); ++h) {
      long long dotv = 0;
      for (int k = 0; k < d; ++k) dotv += tnormals[h][k] * alpha[k];
      tdot[h] = dotv % p;
    }
    for (long long av = 0; av < p; ++av) {
      long long ext = mcount - cnt[av];
      lhs += ext;
      if (rep.essential) {
        std::uint64_t mask = 0;
        for (std::size_t h = 0; h < tnormals.size(); ++h)
          if ((tdot[h] + tnormals[h][d] * av) % p == 0) mask |= std::uint64_t{1} << h;
        auto it = mask_to_elem.find(mask);
        if (it == mask_to_elem.end())
          throw BadPrime(p, "stratum label set not present in the adjoint lattice");
        int elem = it->second;
        if (tally[elem] == 0) repcnt[elem] = ext;  // sampled stratum count
        ++tally[elem];
        sums[elem] += ext;
      }
    }
    int k = d - 1;
    while (k >= 0 && ++alpha[k] == p) alpha[k--] = 0;
    if (k < 0) break;
  }
  rep.lhs_points = lhs;

  if (rep.essential) {
    // Product form: stratum size times the extension count sampled at one
    // point of the stratum. Equality with the per-point sum certifies that
    // the count is constant on every nonempty stratum.
    for (int x = 0; x < lat.size(); ++x) {
      rep.lhs_product += tally[x] * repcnt[x];
      rep.strata.push_back({x, tally[x], sums[x], repcnt[x]});
    }
    rep.equal = rep.lhs_points == rep.rhs && rep.lhs_product == rep.rhs;
  } else {
    rep.equal = rep.lhs_points == rep.rhs;
  }
  return rep;
}

}  // namespace hyparr
