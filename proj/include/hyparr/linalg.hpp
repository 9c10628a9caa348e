#pragma once

#include <vector>

#include "hyparr/field.hpp"

namespace hyparr {

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  if (a.empty()) throw std::invalid_argument("dot: empty vectors");
  F acc = FieldOps<F>::zero(a[0]);
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

template <class F>
struct RrefResult {
  Mat<F> R;               // reduced nonzero rows, pivot entries 1
  Vec<F> c;               // right-hand side per row of R
  std::vector<int> pivots;  // pivot column of each row, strictly increasing
  int rank = 0;
  bool consistent = true;  // false iff a row reduced to 0 = nonzero
};

// Deterministic Gauss-Jordan over an exact field: columns left to right,
// first nonzero entry below the frontier as pivot, eliminate above and below.
template <class F>
RrefResult<F> rref(Mat<F> m, Vec<F> rhs) {
  const std::size_t nrows = m.size();
  if (rhs.size() != nrows) throw std::invalid_argument("rref: rhs size mismatch");
  std::size_t ncols = 0;
  for (const auto& row : m) {
    if (ncols == 0) ncols = row.size();
    if (row.size() != ncols) throw std::invalid_argument("rref: ragged matrix");
  }
  RrefResult<F> out;
  if (nrows == 0) return out;

  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
    std::size_t piv = r;
    while (piv < nrows && FieldOps<F>::is_zero(m[piv][col])) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[r]);
    std::swap(rhs[piv], rhs[r]);
    F inv = FieldOps<F>::one(m[r][col]) / m[r][col];
    for (auto& x : m[r]) x = x * inv;
    rhs[r] = rhs[r] * inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || FieldOps<F>::is_zero(m[i][col])) continue;
      F f = m[i][col];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] = m[i][j] - f * m[r][j];
      rhs[i] = rhs[i] - f * rhs[r];
    }
    out.pivots.push_back(static_cast<int>(col));
    ++r;
  }
  out.rank = static_cast<int>(r);
  for (std::size_t i = r; i < nrows; ++i)
    if (!FieldOps<F>::is_zero(rhs[i])) out.consistent = false;
  out.R.assign(m.begin(), m.begin() + r);
  out.c.assign(rhs.begin(), rhs.begin() + r);
  return out;
}

template <class F>
int rank_of_rows(const Mat<F>& rows) {
  if (rows.empty()) return 0;
  Vec<F> rhs(rows.size(), FieldOps<F>::zero(rows[0][0]));
  return rref<F>(rows, rhs).rank;
}

}  // namespace hyparr
