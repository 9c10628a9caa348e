#include "hyparr/restriction.hpp"

#include <algorithm>

namespace hyparr {

Arrangement restrict_to(const Arrangement& a, const Vec<Rational>& normal,
                        const Rational& offset) {
  if ((int)normal.size() != a.dim)
    throw InputError("restrict_to: normal has wrong length");
  bool zero = true;
  for (const auto& x : normal)
    if (!FieldOps<Rational>::is_zero(x)) zero = false;
  if (zero) throw InputError("restrict_to: degenerate hyperplane");
  Mat<Rational> rows(1, normal);
  Vec<Rational> rhs(1, offset);
  auto fl = flat_from_rows<Rational>(a.dim, rows, rhs, a.like);
  // a single nondegenerate row is always consistent
  return restriction<Rational>(a, *fl);
}

namespace {

InvariantBundle zero_restriction_bundle(int d) {
  InvariantBundle b;
  b.d = d - 1;
  b.cij.assign(d, std::vector<BigInt>(d, BigInt(0)));
  b.wplus.assign(d, BigInt(0));
  b.W.assign(d, BigInt(0));
  b.faces.assign(d, BigInt(0));
  b.doubly.assign(d, std::vector<BigInt>(d, BigInt(0)));
  b.whitney = BiPoly(d - 1);
  return b;
}

}  // namespace

RestrictionReport classify_restrictions(const Arrangement& a) {
  if (!is_essential(a))
    throw InputError("classify_restrictions requires an essential arrangement");
  AdjointData adj = induced_adjoint(a);
  RestrictionReport rep;
  rep.adj_lattice = adjoint_lattice(adj);
  const SemiLattice& lat = rep.adj_lattice;

  struct Key {
    int dim;
    std::string key;
    int idx;
  };
  std::vector<Key> order;
  for (int i = 0; i < (int)lat.flats.size(); ++i)
    order.push_back({lat.flats[i].dim, lat.flats[i].key, i});
  std::sort(order.begin(), order.end(), [](const Key& x, const Key& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.key < y.key;
  });

  std::vector<InvariantBundle> seen;
  for (const auto& k : order) {
    RestrictionStratum st;
    st.index = k.idx;
    st.dim = k.dim;
    st.labels = lat.labels[k.idx];
    st.rep = representative_point(adj.tilde, lat, k.idx);
    bool alpha_zero = true;
    for (int i = 0; i < a.dim; ++i)
      if (!FieldOps<Rational>::is_zero(st.rep[i])) alpha_zero = false;
    if (alpha_zero) {
      st.degenerate = FieldOps<Rational>::is_zero(st.rep[a.dim])
                          ? Degenerate::AmbientMember
                          : Degenerate::EmptyHyperplane;
      st.bundle = zero_restriction_bundle(a.dim);
      st.constancy_ok = true;
    } else {
      Vec<Rational> n(st.rep.begin(), st.rep.begin() + a.dim);
      Arrangement r1 = restrict_to(a, n, st.rep[a.dim]);
      st.bundle = compute_invariants<Rational>(r1);
      std::mt19937_64 rng(0xC0FFEEull + static_cast<std::uint64_t>(k.idx));
      Vec<Rational> p2 = random_point_in_stratum(adj.tilde, lat, k.idx, rng);
      st.constancy_ok = true;
      if (p2 != st.rep) {
        bool az2 = true;
        for (int i = 0; i < a.dim; ++i)
          if (!FieldOps<Rational>::is_zero(p2[i])) az2 = false;
        if (az2) {
          st.constancy_ok = false;  // cannot happen off the degenerate strata
        } else {
          Vec<Rational> n2(p2.begin(), p2.begin() + a.dim);
          Arrangement r2 = restrict_to(a, n2, p2[a.dim]);
          InvariantBundle b2 = compute_invariants<Rational>(r2);
          st.constancy_ok =
              st.bundle == b2 &&
              poset_isomorphic(poset_of<Rational>(build_semilattice<Rational>(r1)),
                               poset_of<Rational>(build_semilattice<Rational>(r2)));
        }
      }
    }
    if (!st.constancy_ok) rep.all_constant = false;
    st.class_id = 0;
    for (int c = 0; c < (int)seen.size(); ++c)
      if (seen[c] == st.bundle) {
        st.class_id = c + 1;
        break;
      }
    if (st.class_id == 0) {
      seen.push_back(st.bundle);
      st.class_id = (int)seen.size();
    }
    rep.strata.push_back(std::move(st));
  }
  rep.num_classes = (int)seen.size();
  return rep;
}

namespace {

// For restrictions only w+, W and r are monotone componentwise; the other
// bundle fields are not asserted for A/H.
std::string restriction_leq_detail(const InvariantBundle& a, const InvariantBundle& b) {
  if (a.d != b.d) return "dimension mismatch";
  for (int k = 0; k <= a.d; ++k) {
    if (a.wplus[k] > b.wplus[k]) return "w+[" + std::to_string(k) + "]";
    if (a.W[k] > b.W[k]) return "W[" + std::to_string(k) + "]";
  }
  if (a.regions > b.regions) return "r";
  return "";
}

}  // namespace

std::vector<MonotonicityViolation> verify_restriction_monotonicity(const Arrangement& a) {
  RestrictionReport rep = classify_restrictions(a);
  const SemiLattice& lat = rep.adj_lattice;
  // bundle per lattice element, in lattice index order
  std::vector<const InvariantBundle*> by_idx(lat.flats.size(), nullptr);
  for (const auto& st : rep.strata) by_idx[st.index] = &st.bundle;
  std::vector<MonotonicityViolation> out;
  int n = (int)lat.flats.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // leq(j, i) means flat(i) subset flat(j): stratum i included in closure of j
      if (!lat.leq(j, i)) continue;
      std::string field = restriction_leq_detail(*by_idx[i], *by_idx[j]);
      if (!field.empty()) out.push_back({"restriction", i, j, field});
    }
  return out;
}

}  // namespace hyparr
