#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyparr/linalg.hpp"

namespace hyparr {

// Affine flat in F^ambient stored as a canonical RREF system R x = c together
// with the derived chart: `point` is the particular solution with free
// variables 0 and `basis` the canonical null-space columns (one per free
// variable, entry 1 at that variable). Two flats are equal iff keys are equal.
template <class F>
struct Flat {
  int ambient = 0;
  int dim = 0;
  Mat<F> R;
  Vec<F> c;
  std::vector<int> pivots;
  Vec<F> point;
  Mat<F> basis;  // `dim` many columns, each of length `ambient`
  std::string key;

  friend bool operator==(const Flat& a, const Flat& b) { return a.key == b.key; }
};

template <class F>
Flat<F> flat_from_rref(int ambient, const RrefResult<F>& sys, const F& like) {
  Flat<F> f;
  f.ambient = ambient;
  f.R = sys.R;
  f.c = sys.c;
  f.pivots = sys.pivots;
  f.dim = ambient - sys.rank;
  f.point.assign(ambient, FieldOps<F>::zero(like));
  for (int i = 0; i < sys.rank; ++i) f.point[f.pivots[i]] = f.c[i];
  std::vector<bool> is_pivot(ambient, false);
  for (int p : f.pivots) is_pivot[p] = true;
  for (int j = 0; j < ambient; ++j) {
    if (is_pivot[j]) continue;
    Vec<F> b(ambient, FieldOps<F>::zero(like));
    b[j] = FieldOps<F>::one(like);
    for (int i = 0; i < sys.rank; ++i) b[f.pivots[i]] = -f.R[i][j];
    f.basis.push_back(std::move(b));
  }
  std::string k = "d" + std::to_string(f.dim) + ";";
  for (int i = 0; i < sys.rank; ++i) {
    for (const auto& x : f.R[i]) k += FieldOps<F>::to_text(x) + ",";
    k += "=" + FieldOps<F>::to_text(f.c[i]) + ";";
  }
  f.key = std::move(k);
  return f;
}

template <class F>
Flat<F> ambient_flat(int ambient, const F& like) {
  return flat_from_rref<F>(ambient, RrefResult<F>{}, like);
}

// Flat cut out by a stack of affine equations; nullopt when inconsistent.
template <class F>
std::optional<Flat<F>> flat_from_rows(int ambient, const Mat<F>& rows, const Vec<F>& rhs,
                                      const F& like) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ambient)
      throw std::invalid_argument("flat_from_rows: row size mismatch");
  RrefResult<F> sys = rref<F>(rows, rhs);
  if (!sys.consistent) return std::nullopt;
  return flat_from_rref<F>(ambient, sys, like);
}

enum class Meet { Empty, Unchanged, Proper };

template <class F>
struct MeetResult {
  Meet kind;
  Flat<F> flat;  // meaningful only when kind == Proper
};

// Intersects a flat with the affine hyperplane normal.x = offset. A zero
// normal encodes a degenerate hyperplane: offset 0 is the ambient space
// (Unchanged), nonzero offset the empty set (Empty). Proper intersection
// drops the dimension by exactly one.
template <class F>
MeetResult<F> intersect(const Flat<F>& f, const Vec<F>& normal, const F& offset) {
  if (static_cast<int>(normal.size()) != f.ambient)
    throw std::invalid_argument("intersect: dimension mismatch");
  bool zero = true;
  for (const auto& x : normal)
    if (!FieldOps<F>::is_zero(x)) {
      zero = false;
      break;
    }
  if (zero) {
    if (FieldOps<F>::is_zero(offset)) return {Meet::Unchanged, {}};
    return {Meet::Empty, {}};
  }
  Mat<F> rows = f.R;
  Vec<F> rhs = f.c;
  rows.push_back(normal);
  rhs.push_back(offset);
  RrefResult<F> sys = rref<F>(rows, rhs);
  if (!sys.consistent) return {Meet::Empty, {}};
  if (sys.rank == static_cast<int>(f.R.size())) return {Meet::Unchanged, {}};
  return {Meet::Proper, flat_from_rref<F>(f.ambient, sys, offset)};
}

template <class F>
bool flat_on_hyperplane(const Flat<F>& f, const Vec<F>& normal, const F& offset) {
  if (dot<F>(normal, f.point) != offset) return false;
  for (const auto& b : f.basis)
    if (!FieldOps<F>::is_zero(dot<F>(normal, b))) return false;
  return true;
}

template <class F>
bool point_on_hyperplane(const Vec<F>& x, const Vec<F>& normal, const F& offset) {
  return dot<F>(normal, x) == offset;
}

template <class F>
bool flat_contains_point(const Flat<F>& f, const Vec<F>& x) {
  for (std::size_t i = 0; i < f.R.size(); ++i)
    if (dot<F>(f.R[i], x) != f.c[i]) return false;
  return true;
}

// inner subseteq outer, both flats of the same ambient space
template <class F>
bool flat_subset(const Flat<F>& inner, const Flat<F>& outer) {
  for (std::size_t i = 0; i < outer.R.size(); ++i) {
    if (dot<F>(outer.R[i], inner.point) != outer.c[i]) return false;
    for (const auto& b : inner.basis)
      if (!FieldOps<F>::is_zero(dot<F>(outer.R[i], b))) return false;
  }
  return true;
}

// Coordinates of the hyperplane normal.x = offset in the chart of `f`
// (x = point + basis * t): returns (B^T normal, offset - normal.point).
template <class F>
std::pair<Vec<F>, F> to_chart(const Flat<F>& f, const Vec<F>& normal, const F& offset) {
  Vec<F> n;
  n.reserve(f.basis.size());
  for (const auto& b : f.basis) n.push_back(dot<F>(normal, b));
  return {std::move(n), offset - dot<F>(normal, f.point)};
}

template <class F>
Vec<F> from_chart(const Flat<F>& f, const Vec<F>& t) {
  if (t.size() != f.basis.size()) throw std::invalid_argument("from_chart: size mismatch");
  Vec<F> x = f.point;
  for (std::size_t j = 0; j < t.size(); ++j)
    for (int i = 0; i < f.ambient; ++i) x[i] = x[i] + f.basis[j][i] * t[j];
  return x;
}

}  // namespace hyparr
