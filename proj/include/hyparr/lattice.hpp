#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

#include "hyparr/arrangement.hpp"
#include "hyparr/poly.hpp"

namespace hyparr {

// Intersection semi-lattice of an arrangement, ordered by reverse inclusion.
// Element 0 is the ambient space. Elements are sorted by (codim, canonical
// key), so the layout is deterministic for a given hyperplane list.
// masks[i] holds the *positions* (not labels) of the hyperplanes containing
// flat i; the order relation is exactly mask containment.
template <class F>
struct SemiLatticeT {
  int ambient = 0;
  std::vector<Flat<F>> flats;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<int>> labels;  // label values per element, sorted

  int size() const { return static_cast<int>(flats.size()); }
  // X_i <= X_j in L(A), i.e. X_j is contained in X_i as a set
  bool leq(int i, int j) const { return (masks[i] & ~masks[j]) == 0; }
  int dim_of(int i) const { return flats[i].dim; }

  int index_of(const std::string& key) const {
    for (int i = 0; i < size(); ++i)
      if (flats[i].key == key) return i;
    return -1;
  }

  // Mobius function mu(X_i, X_j); requires i <= j.
  const BigInt& mobius(int i, int j) const {
    if (!leq(i, j)) throw std::invalid_argument("mobius: elements not comparable");
    if (mu_.empty()) {
      mu_.assign(size(), std::map<int, BigInt>());
    }
    auto it = mu_[i].find(j);
    if (it != mu_[i].end()) return it->second;
    BigInt v = 0;
    if (i == j) {
      v = 1;
    } else {
      for (int k = 0; k < size(); ++k)
        if (k != j && leq(i, k) && leq(k, j)) v -= mobius(i, k);
    }
    return mu_[i].emplace(j, std::move(v)).first->second;
  }

 private:
  mutable std::vector<std::map<int, BigInt>> mu_;
};

using SemiLattice = SemiLatticeT<Rational>;

// Worklist saturation: starting from the ambient space, intersect every flat
// with every hyperplane not already containing it. Every nonempty
// intersection of members arises this way because partial intersections of a
// nonempty intersection are themselves nonempty.
template <class F>
SemiLatticeT<F> build_semilattice(const ArrangementT<F>& a) {
  if (a.size() > 63) throw InputError("too many hyperplanes for mask width");
  SemiLatticeT<F> lat;
  lat.ambient = a.dim;

  std::map<std::string, int> index;
  auto add = [&](const Flat<F>& f) -> int {
    auto it = index.find(f.key);
    if (it != index.end()) return it->second;
    int id = lat.size();
    lat.flats.push_back(f);
    std::uint64_t mask = 0;
    for (int h = 0; h < a.size(); ++h)
      if (flat_on_hyperplane<F>(f, a.hyperplanes[h].normal, a.hyperplanes[h].offset))
        mask |= std::uint64_t{1} << h;
    lat.masks.push_back(mask);
    index.emplace(f.key, id);
    return id;
  };

  add(ambient_flat<F>(a.dim, a.like));
  for (std::size_t next = 0; next < lat.flats.size(); ++next) {
    Flat<F> f = lat.flats[next];  // copy: vector may reallocate below
    std::uint64_t mask = lat.masks[next];
    for (int h = 0; h < a.size(); ++h) {
      if (mask & (std::uint64_t{1} << h)) continue;
      MeetResult<F> m = intersect<F>(f, a.hyperplanes[h].normal, a.hyperplanes[h].offset);
      if (m.kind == Meet::Proper) add(m.flat);
    }
  }

  std::vector<int> order(lat.size());
  for (int i = 0; i < lat.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (lat.flats[x].dim != lat.flats[y].dim) return lat.flats[x].dim > lat.flats[y].dim;
    return lat.flats[x].key < lat.flats[y].key;
  });
  SemiLatticeT<F> out;
  out.ambient = lat.ambient;
  for (int idx : order) {
    out.flats.push_back(std::move(lat.flats[idx]));
    out.masks.push_back(lat.masks[idx]);
    std::vector<int> lbls;
    for (int h = 0; h < a.size(); ++h)
      if (out.masks.back() & (std::uint64_t{1} << h)) lbls.push_back(a.labels[h]);
    std::sort(lbls.begin(), lbls.end());
    out.labels.push_back(std::move(lbls));
  }
  return out;
}

// chi(A,t) = sum over flats of mu(V,X) t^{dim X}; identically zero when the
// ambient space is a member.
template <class F>
IntPoly char_poly(const SemiLatticeT<F>& lat, Degenerate degenerate) {
  if (degenerate == Degenerate::AmbientMember) return IntPoly::zero();
  IntPoly chi;
  chi.coeffs.assign(lat.ambient + 1, BigInt(0));
  for (int i = 0; i < lat.size(); ++i) chi.coeffs[lat.dim_of(i)] += lat.mobius(0, i);
  chi.trim();
  return chi;
}

template <class F>
IntPoly char_poly(const ArrangementT<F>& a) {
  return char_poly<F>(build_semilattice<F>(a), a.degenerate);
}

// Sub-arrangement of the hyperplanes containing the flat X, labels kept.
template <class F>
ArrangementT<F> localization(const ArrangementT<F>& a, const Flat<F>& x) {
  std::vector<Hyperplane<F>> hs;
  std::vector<int> lbls;
  for (int h = 0; h < a.size(); ++h)
    if (flat_on_hyperplane<F>(x, a.hyperplanes[h].normal, a.hyperplanes[h].offset)) {
      hs.push_back(a.hyperplanes[h]);
      lbls.push_back(a.labels[h]);
    }
  ArrangementT<F> out = make_multi<F>(a.dim, std::move(hs), std::move(lbls), a.like);
  out.multi = a.multi;
  return out;
}

// Restriction A/X: the traces H cap X of hyperplanes neither containing X nor
// missing it, written in the canonical chart of X. A multi-arrangement:
// distinct hyperplanes may leave identical traces, labels are inherited.
template <class F>
ArrangementT<F> restriction(const ArrangementT<F>& a, const Flat<F>& x) {
  std::vector<Hyperplane<F>> hs;
  std::vector<int> lbls;
  for (int h = 0; h < a.size(); ++h) {
    auto [n, c] = to_chart<F>(x, a.hyperplanes[h].normal, a.hyperplanes[h].offset);
    bool zero = true;
    for (const auto& v : n)
      if (!FieldOps<F>::is_zero(v)) {
        zero = false;
        break;
      }
    if (zero) continue;  // contains X (localized away) or empty trace
    hs.push_back(make_hyperplane<F>(std::move(n), std::move(c)));
    lbls.push_back(a.labels[h]);
  }
  return make_multi<F>(x.dim, std::move(hs), std::move(lbls), a.like);
}

// Minimal flat of L(A) containing the point x.
template <class F>
Flat<F> locate(const ArrangementT<F>& a, const Vec<F>& x) {
  if (static_cast<int>(x.size()) != a.dim) throw InputError("locate: point has wrong length");
  Mat<F> rows;
  Vec<F> rhs;
  for (const auto& h : a.hyperplanes)
    if (point_on_hyperplane<F>(x, h.normal, h.offset)) {
      rows.push_back(h.normal);
      rhs.push_back(h.offset);
    }
  auto f = flat_from_rows<F>(a.dim, rows, rhs, a.like);
  return *f;  // consistent by construction: x solves every row
}

template <class F>
struct Essentialization {
  ArrangementT<F> ess;  // arrangement in dim(O) coordinates
  Mat<F> basis;         // rows spanning O = span of the normals, in RREF
};

// Restriction to O = span of normals. L(A) and L(A/O) are isomorphic and
// chi(A,t) = t^{d-dim O} chi(A/O,t).
template <class F>
Essentialization<F> essentialize(const ArrangementT<F>& a) {
  Mat<F> normals = normal_matrix<F>(a);
  Essentialization<F> out;
  if (normals.empty()) {
    out.ess = a;
    out.ess.dim = 0;
    out.ess.hyperplanes.clear();
    out.ess.labels.clear();
    return out;
  }
  Vec<F> rhs(normals.size(), FieldOps<F>::zero(a.like));
  RrefResult<F> sys = rref<F>(normals, rhs);
  out.basis = sys.R;
  int k = sys.rank;
  std::vector<Hyperplane<F>> hs;
  for (const auto& h : a.hyperplanes) {
    Vec<F> n;
    n.reserve(k);
    for (int j = 0; j < k; ++j) n.push_back(dot<F>(sys.R[j], h.normal));
    hs.push_back(make_hyperplane<F>(std::move(n), h.offset));
  }
  out.ess.dim = k;
  out.ess.hyperplanes = std::move(hs);
  out.ess.labels = a.labels;
  out.ess.degenerate = a.degenerate;
  out.ess.multi = a.multi;
  out.ess.like = a.like;
  return out;
}

}  // namespace hyparr
