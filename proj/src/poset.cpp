#include "hyparr/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hyparr {

Poset Poset::discrete(int n) {
  Poset p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  return p;
}

Poset product_with_chain2(const Poset& p) {
  Poset q;
  q.n = 2 * p.n;
  q.leq.assign(q.n, std::vector<bool>(q.n, false));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.leq[i][j]) {
        q.leq[2 * i][2 * j] = true;
        q.leq[2 * i][2 * j + 1] = true;
        q.leq[2 * i + 1][2 * j + 1] = true;
      }
  return q;
}

namespace {

// Iterated refinement of element colors by the multiset of (relation, color)
// profiles against all other elements. Stable after at most n rounds.
std::vector<int> color_classes(const Poset& p) {
  std::vector<int> color(p.n, 0);
  for (int round = 0; round < p.n; ++round) {
    std::map<std::vector<int>, int> table;
    std::vector<int> next(p.n);
    for (int i = 0; i < p.n; ++i) {
      std::vector<int> sig;
      sig.push_back(color[i]);
      std::vector<int> profile;
      for (int j = 0; j < p.n; ++j) {
        if (j == i) continue;
        int rel = (p.leq[i][j] ? 1 : 0) | (p.leq[j][i] ? 2 : 0);
        profile.push_back(rel * (p.n + 1) + color[j]);
      }
      std::sort(profile.begin(), profile.end());
      sig.insert(sig.end(), profile.begin(), profile.end());
      auto it = table.find(sig);
      if (it == table.end()) it = table.emplace(sig, static_cast<int>(table.size())).first;
      next[i] = it->second;
    }
    if (next == color) break;
    color = next;
  }
  return color;
}

bool extend_match(const Poset& p, const Poset& q, const std::vector<int>& order, std::size_t k,
                  std::vector<int>& map, std::vector<bool>& used,
                  const std::vector<std::vector<int>>& candidates) {
  if (k == order.size()) return true;
  int i = order[k];
  for (int j : candidates[i]) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t t = 0; t < k && ok; ++t) {
      int a = order[t];
      ok = (p.leq[i][a] == q.leq[j][map[a]]) && (p.leq[a][i] == q.leq[map[a]][j]);
    }
    if (!ok) continue;
    map[i] = j;
    used[j] = true;
    if (extend_match(p, q, order, k + 1, map, used, candidates)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const Poset& p, const Poset& q) {
  if (p.n != q.n) return false;
  if (p.n == 0) return true;

  // Color both posets jointly so class ids are comparable.
  Poset joint;
  joint.n = p.n + q.n;
  joint.leq.assign(joint.n, std::vector<bool>(joint.n, false));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) joint.leq[i][j] = p.leq[i][j];
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) joint.leq[p.n + i][p.n + j] = q.leq[i][j];
  std::vector<int> color = color_classes(joint);

  std::map<int, int> count_p, count_q;
  for (int i = 0; i < p.n; ++i) ++count_p[color[i]];
  for (int j = 0; j < q.n; ++j) ++count_q[color[p.n + j]];
  if (count_p != count_q) return false;

  std::vector<std::vector<int>> candidates(p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < q.n; ++j)
      if (color[i] == color[p.n + j]) candidates[i].push_back(j);

  std::vector<int> order(p.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (candidates[a].size() != candidates[b].size())
      return candidates[a].size() < candidates[b].size();
    return a < b;
  });

  std::vector<int> map(p.n, -1);
  std::vector<bool> used(q.n, false);
  return extend_match(p, q, order, 0, map, used, candidates);
}

}  // namespace hyparr
