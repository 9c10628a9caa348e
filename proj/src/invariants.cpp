#include "hyparr/invariants.hpp"

namespace hyparr {

bool bundle_leq(const InvariantBundle& a, const InvariantBundle& b) {
  if (a.d != b.d) return false;
  for (int i = 0; i <= a.d; ++i)
    for (int j = 0; j <= a.d; ++j)
      if (a.cij[i][j] > b.cij[i][j]) return false;
  for (int k = 0; k <= a.d; ++k)
    if (a.wplus[k] > b.wplus[k] || a.W[k] > b.W[k] || a.faces[k] > b.faces[k]) return false;
  return a.regions <= b.regions;
}

}  // namespace hyparr
