#include "hyparr/nbc.hpp"

#include <algorithm>
#include <functional>

namespace hyparr {

namespace {

std::vector<int> positions_of(const Arrangement& a, const std::vector<int>& labels) {
  std::vector<int> pos;
  pos.reserve(labels.size());
  for (int lbl : labels) pos.push_back(a.position_of_label(lbl));
  std::sort(pos.begin(), pos.end());
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
    throw InputError("repeated label in subset");
  return pos;
}

bool subset_central(const Arrangement& a, const std::vector<int>& pos) {
  Mat<Rational> rows;
  Vec<Rational> rhs;
  for (int p : pos) {
    rows.push_back(a.hyperplanes[p].normal);
    rhs.push_back(a.hyperplanes[p].offset);
  }
  return rref<Rational>(rows, rhs).consistent;
}

int normal_rank(const Arrangement& a, const std::vector<int>& pos) {
  Mat<Rational> rows;
  for (int p : pos) rows.push_back(a.hyperplanes[p].normal);
  return rank_of_rows<Rational>(rows);
}

// increasing-cardinality combination walk over 0..n-1
void for_each_subset_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

int rank_of_labels(const Arrangement& a, const std::vector<int>& labels) {
  std::vector<int> pos = positions_of(a, labels);
  const int n = static_cast<int>(pos.size());
  if (n == 0) return 0;
  Mat<Rational> rows;
  Vec<Rational> rhs;
  for (int p : pos) {
    rows.push_back(a.hyperplanes[p].normal);
    rhs.push_back(a.hyperplanes[p].offset);
  }
  RrefResult<Rational> full = rref<Rational>(rows, rhs);
  if (full.consistent) return full.rank;
  int best = 0;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) sub.push_back(pos[i]);
    if (normal_rank(a, sub) == size && subset_central(a, sub)) best = size;
  }
  return best;
}

CircuitCatalog affine_circuits(const Arrangement& a) {
  CircuitCatalog cat;
  const int m = a.size();
  const int cap = std::min(m, a.dim + 2);
  for (int k = 2; k <= cap; ++k) {
    for_each_subset_of_size(m, k, [&](const std::vector<int>& pos) {
      std::uint64_t mask = 0;
      for (int p : pos) mask |= std::uint64_t{1} << p;
      for (std::uint64_t known : cat.masks)
        if ((known & ~mask) == 0) return;  // contains a smaller circuit
      if (normal_rank(a, pos) != k - 1) return;
      if (!subset_central(a, pos)) return;
      std::vector<int> lbls;
      for (int p : pos) lbls.push_back(a.labels[p]);
      std::sort(lbls.begin(), lbls.end());
      cat.circuits.push_back(std::move(lbls));
      cat.masks.push_back(mask);
    });
  }
  return cat;
}

std::vector<std::uint64_t> broken_circuit_masks(const Arrangement& a, const CircuitCatalog& cat,
                                                const std::vector<int>& order) {
  std::vector<std::uint64_t> out;
  out.reserve(cat.masks.size());
  for (std::uint64_t mask : cat.masks) {
    int drop = -1;
    for (int lbl : order) {
      int pos;
      try {
        pos = a.position_of_label(lbl);
      } catch (const InputError&) {
        throw InputError("order mentions unknown label " + std::to_string(lbl));
      }
      if (mask & (std::uint64_t{1} << pos)) {
        drop = pos;
        break;
      }
    }
    if (drop < 0) throw InputError("order does not cover all labels");
    out.push_back(mask & ~(std::uint64_t{1} << drop));
  }
  return out;
}

std::vector<std::vector<int>> nbc_sets(const Arrangement& a, int k, const std::vector<int>& order) {
  if (k < 0) throw InputError("nbc_sets: negative k");
  std::vector<std::uint64_t> broken = broken_circuit_masks(a, affine_circuits(a), order);
  std::vector<std::vector<int>> out;
  const int m = a.size();
  if (k > m) return out;
  for_each_subset_of_size(m, k, [&](const std::vector<int>& pos) {
    std::uint64_t mask = 0;
    for (int p : pos) mask |= std::uint64_t{1} << p;
    for (std::uint64_t bc : broken)
      if ((bc & ~mask) == 0) return;
    if (!subset_central(a, pos)) return;
    std::vector<int> lbls;
    for (int p : pos) lbls.push_back(a.labels[p]);
    std::sort(lbls.begin(), lbls.end());
    out.push_back(std::move(lbls));
  });
  return out;
}

std::size_t nbc_count(const Arrangement& a, int k, const std::vector<int>& order) {
  return nbc_sets(a, k, order).size();
}

std::vector<std::vector<BigInt>> cij_via_nbc(const Arrangement& a, const std::vector<int>& order) {
  const int d = a.dim;
  std::vector<std::vector<BigInt>> grid(d + 1, std::vector<BigInt>(d + 1, BigInt(0)));
  SemiLattice lat = build_semilattice<Rational>(a);
  for (int x = 0; x < lat.size(); ++x) {
    Arrangement res = restriction<Rational>(a, lat.flats[x]);
    std::vector<int> induced;
    for (int lbl : order)
      if (std::find(res.labels.begin(), res.labels.end(), lbl) != res.labels.end())
        induced.push_back(lbl);
    int i = lat.dim_of(x);
    for (int j = 0; j <= i; ++j) grid[i][j] += BigInt(nbc_count(res, j, induced));
  }
  return grid;
}

std::vector<int> natural_order(const Arrangement& a) { return a.labels; }

}  // namespace hyparr
