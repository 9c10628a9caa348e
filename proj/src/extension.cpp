#include "hyparr/extension.hpp"

#include <algorithm>
#include <functional>

namespace hyparr {

namespace {

bool vec_zero(const Vec<Rational>& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Arrangement extend(const Arrangement& a, const Vec<Rational>& normal, const Rational& offset) {
  if (a.multi) throw InputError("extend requires a simple arrangement");
  if (static_cast<int>(normal.size()) != a.dim) throw InputError("extend: normal has wrong length");
  Hyperplane<Rational> h = make_hyperplane<Rational>(normal, offset);
  Arrangement e = a;
  if (h.degenerate()) {
    if (sgn(h.offset) == 0)
      e.degenerate = Degenerate::AmbientMember;
    else if (e.degenerate == Degenerate::None)
      e.degenerate = Degenerate::EmptyHyperplane;
    return e;
  }
  for (const auto& g : e.hyperplanes)
    if (g == h) return e;
  e.hyperplanes.push_back(std::move(h));
  e.labels.push_back(e.size());
  return e;
}

std::vector<Vec<Rational>> representative_points(const Arrangement& arr,
                                                 const SemiLatticeT<Rational>& lat, int x,
                                                 int count) {
  const Flat<Rational>& f = lat.flats[x];
  // Minimal flats carry a single point, which avoids every non-containing
  // member by minimality; no other point of the flat exists.
  if (f.dim == 0) return {f.point};
  std::vector<int> forbidden;
  for (int h = 0; h < arr.size(); ++h)
    if (!(lat.masks[x] & (std::uint64_t{1} << h))) forbidden.push_back(h);
  // Smallest max-norm integer chart points that avoid every forbidden member,
  // shells enumerated lexicographically. Small coordinates keep small primes
  // usable by the finite-field certificates. A shell of radius > m/2 always
  // contains such a point, so the cap is never reached for valid input.
  std::vector<Vec<Rational>> out;
  for (long radius = 0; radius <= 64; ++radius) {
    std::vector<long> idx(f.dim, -radius);
    while (true) {
      bool on_shell = radius == 0;
      for (long v : idx)
        if (v == radius || v == -radius) on_shell = true;
      if (on_shell) {
        Vec<Rational> t(f.dim);
        for (int j = 0; j < f.dim; ++j) t[j] = Rational(idx[j]);
        Vec<Rational> p = from_chart<Rational>(f, t);
        bool ok = true;
        for (int h : forbidden)
          if (point_on_hyperplane<Rational>(p, arr.hyperplanes[h].normal,
                                            arr.hyperplanes[h].offset)) {
            ok = false;
            break;
          }
        if (ok) {
          out.push_back(std::move(p));
          if (static_cast<int>(out.size()) >= count) return out;
        }
      }
      int j = f.dim - 1;
      while (j >= 0 && idx[j] == radius) idx[j--] = -radius;
      if (j < 0) break;
      ++idx[j];
    }
  }
  if (!out.empty()) return out;
  throw std::logic_error("representative search exhausted");
}

Vec<Rational> representative_point(const Arrangement& arr, const SemiLatticeT<Rational>& lat,
                                   int x) {
  return representative_points(arr, lat, x, 1).front();
}

Vec<Rational> random_point_in_stratum(const Arrangement& arr, const SemiLatticeT<Rational>& lat,
                                      int x, std::mt19937_64& rng) {
  const Flat<Rational>& f = lat.flats[x];
  if (f.dim == 0) return f.point;
  std::vector<int> forbidden;
  for (int h = 0; h < arr.size(); ++h)
    if (!(lat.masks[x] & (std::uint64_t{1} << h))) forbidden.push_back(h);
  for (int attempt = 0; attempt < 5000; ++attempt) {
    Vec<Rational> t(f.dim);
    for (int j = 0; j < f.dim; ++j) {
      t[j] = Rational(rand_range(rng, -12, 12), rand_range(rng, 1, 4));
      t[j].canonicalize();
    }
    Vec<Rational> p = from_chart<Rational>(f, t);
    bool ok = true;
    for (int h : forbidden)
      if (point_on_hyperplane<Rational>(p, arr.hyperplanes[h].normal, arr.hyperplanes[h].offset)) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  throw std::logic_error("random representative search exhausted");
}

int stratum_of(const AdjointData& adj, const SemiLattice& lat, const Vec<Rational>& normal,
               const Rational& offset) {
  Vec<Rational> p = normal;
  p.push_back(offset);
  Flat<Rational> f = locate<Rational>(adj.tilde, p);
  int idx = lat.index_of(f.key);
  if (idx < 0) throw std::logic_error("located flat missing from adjoint lattice");
  return idx;
}

ClassificationReport classify_extensions(const Arrangement& a) {
  if (a.multi) throw InputError("classification requires a simple arrangement");
  if (!is_essential(a)) throw InputError("classification requires an essential arrangement");
  ClassificationReport r;
  r.adj = induced_adjoint(a);
  r.adj_lattice = build_semilattice<Rational>(r.adj.tilde);
  const SemiLattice& lat = r.adj_lattice;

  std::vector<int> order(lat.size());
  for (int i = 0; i < lat.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (lat.dim_of(x) != lat.dim_of(y)) return lat.dim_of(x) < lat.dim_of(y);
    return lat.flats[x].key < lat.flats[y].key;
  });

  std::vector<InvariantBundle> classes;
  for (int idx : order) {
    Stratum s;
    s.index = idx;
    s.dim = lat.dim_of(idx);
    s.labels = lat.labels[idx];
    s.rep = representative_point(r.adj.tilde, lat, idx);
    Vec<Rational> alpha(s.rep.begin(), s.rep.end() - 1);
    Rational off = s.rep.back();
    Arrangement e = extend(a, alpha, off);
    if (vec_zero(alpha))
      s.degenerate = sgn(off) == 0 ? Degenerate::AmbientMember : Degenerate::EmptyHyperplane;
    s.duplicate = s.degenerate == Degenerate::None && e.size() == a.size();
    s.bundle = compute_invariants<Rational>(e);
    s.class_id = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (classes[c] == s.bundle) {
        s.class_id = static_cast<int>(c) + 1;
        break;
      }
    if (s.class_id == 0) {
      classes.push_back(s.bundle);
      s.class_id = static_cast<int>(classes.size());
    }
    r.strata.push_back(std::move(s));
  }
  r.num_classes = static_cast<int>(classes.size());
  return r;
}

namespace {

using ExtMaker = std::function<Arrangement(const Vec<Rational>&)>;

void verify_family(const Arrangement& base, const Arrangement& fam, const std::string& name,
                   int trials, std::mt19937_64& rng, ClassificationVerification& out) {
  SemiLattice lat = build_semilattice<Rational>(fam);
  ExtMaker make;
  if (name == "tilde") {
    make = [&base](const Vec<Rational>& p) {
      Vec<Rational> alpha(p.begin(), p.end() - 1);
      return extend(base, alpha, p.back());
    };
  } else if (name == "sigma-affine") {
    make = [&base, &rng](const Vec<Rational>& p) {
      Rational off(rand_range(rng, 1, 4) * (rng() % 2 == 0 ? 1 : -1));
      return extend(base, p, off);
    };
  } else {
    make = [&base](const Vec<Rational>& p) { return extend(base, p, Rational(0)); };
  }

  for (int x = 0; x < lat.size(); ++x) {
    std::vector<Vec<Rational>> reps{representative_point(fam, lat, x)};
    for (int attempt = 0; attempt < 40 * trials && static_cast<int>(reps.size()) < trials;
         ++attempt) {
      Vec<Rational> p = random_point_in_stratum(fam, lat, x, rng);
      if (std::find(reps.begin(), reps.end(), p) == reps.end()) reps.push_back(std::move(p));
    }
    StratumCheck chk;
    chk.family = name;
    chk.stratum = x;
    chk.reps = static_cast<int>(reps.size());
    std::vector<InvariantBundle> bundles;
    std::vector<Poset> posets;
    for (const auto& p : reps) {
      Arrangement e = make(p);
      bundles.push_back(compute_invariants<Rational>(e));
      posets.push_back(poset_of<Rational>(build_semilattice<Rational>(e)));
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        if (!(bundles[i] == bundles[j])) chk.bundles_equal = false;
        if (!poset_isomorphic(posets[i], posets[j])) chk.posets_isomorphic = false;
      }
    out.ok = out.ok && chk.bundles_equal && chk.posets_isomorphic;
    out.checks.push_back(std::move(chk));
  }
}

}  // namespace

ClassificationVerification verify_classification(const Arrangement& a, int trials,
                                                 std::uint64_t seed) {
  if (!is_essential(a)) throw InputError("verification requires an essential arrangement");
  if (trials < 1) trials = 1;
  ClassificationVerification out;
  out.trials = trials;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  AdjointData adj = induced_adjoint(a);
  verify_family(a, adj.tilde, "tilde", trials, rng, out);
  if (is_linear(a)) {
    verify_family(a, adj.sigma, "sigma", trials, rng, out);
    verify_family(a, adj.sigma, "sigma-affine", trials, rng, out);
  }
  verify_family(a, adj.bar, "bar", trials, rng, out);
  return out;
}

std::string bundle_leq_detail(const InvariantBundle& a, const InvariantBundle& b) {
  if (a.d != b.d) return "dimension mismatch";
  for (int i = 0; i <= a.d; ++i)
    for (int j = 0; j <= a.d; ++j)
      if (a.cij[i][j] > b.cij[i][j])
        return "c[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  for (int k = 0; k <= a.d; ++k) {
    if (a.wplus[k] > b.wplus[k]) return "w+[" + std::to_string(k) + "]";
    if (a.W[k] > b.W[k]) return "W[" + std::to_string(k) + "]";
    if (a.faces[k] > b.faces[k]) return "f[" + std::to_string(k) + "]";
  }
  if (a.regions > b.regions) return "r";
  return "";
}

namespace {

// bundles[i] is the profile attached to lattice element i; reports every
// comparable pair X_i subseteq X_j whose profiles fail the componentwise order.
void check_pairs(const SemiLatticeT<Rational>& lat, const std::vector<InvariantBundle>& bundles,
                 const std::string& family, std::vector<MonotonicityViolation>& out) {
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j) {
      if (i == j || !lat.leq(j, i)) continue;  // leq(j,i): X_i subseteq X_j
      std::string detail = bundle_leq_detail(bundles[i], bundles[j]);
      if (!detail.empty()) out.push_back({family, i, j, detail});
    }
}

}  // namespace

std::vector<MonotonicityViolation> verify_monotonicity(const Arrangement& a) {
  std::vector<MonotonicityViolation> out;
  ClassificationReport rep = classify_extensions(a);
  std::vector<InvariantBundle> tilde_bundles(rep.adj_lattice.size());
  for (const auto& s : rep.strata) tilde_bundles[s.index] = s.bundle;
  check_pairs(rep.adj_lattice, tilde_bundles, "tilde", out);

  if (is_linear(a)) {
    SemiLattice slat = build_semilattice<Rational>(rep.adj.sigma);
    std::vector<InvariantBundle> lin(slat.size()), aff(slat.size());
    for (int x = 0; x < slat.size(); ++x) {
      Vec<Rational> p = representative_point(rep.adj.sigma, slat, x);
      lin[x] = compute_invariants<Rational>(extend(a, p, Rational(0)));
      aff[x] = compute_invariants<Rational>(extend(a, p, Rational(1)));
      std::string detail = bundle_leq_detail(lin[x], aff[x]);
      if (!detail.empty()) out.push_back({"sigma-mixed", x, x, detail});
    }
    check_pairs(slat, lin, "sigma", out);
    check_pairs(slat, aff, "sigma-affine", out);
  }

  SemiLattice blat = build_semilattice<Rational>(rep.adj.bar);
  std::vector<InvariantBundle> barb(blat.size());
  for (int x = 0; x < blat.size(); ++x) {
    Vec<Rational> p = representative_point(rep.adj.bar, blat, x);
    barb[x] = compute_invariants<Rational>(extend(a, p, Rational(0)));
  }
  check_pairs(blat, barb, "bar", out);
  return out;
}

bool c2_product_check(const Arrangement& a, const Vec<Rational>& normal, const Rational& offset) {
  Mat<Rational> rows = normal_matrix<Rational>(a);
  int base_rank = rank_of_rows<Rational>(rows);
  rows.push_back(normal);
  if (rank_of_rows<Rational>(rows) != base_rank + 1)
    throw InputError("c2_product_check requires a normal outside the span of A's normals");
  Arrangement e = extend(a, normal, offset);
  Poset lhs = poset_of<Rational>(build_semilattice<Rational>(e));
  Poset rhs = product_with_chain2(poset_of<Rational>(build_semilattice<Rational>(a)));
  return poset_isomorphic(lhs, rhs);
}

}  // namespace hyparr
