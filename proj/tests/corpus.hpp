#pragma once

#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr::tests {

struct CorpusEntry {
  std::string name;
  Arrangement arr;
};

// Integer-friendly constructor: rows of (normal..., offset).
Arrangement make_arr(int dim, const std::vector<std::vector<int>>& rows);

Arrangement example21();  // x1=0, x1=1, x2=0
Arrangement boolean_arr(int d);
Arrangement pencil3();  // x=0, y=0, x-y=0

// Fixed suite: the named small arrangements plus seeded random ones with
// d <= 3, m <= 7. Deterministic across runs.
const std::vector<CorpusEntry>& corpus();

}  // namespace hyparr::tests
