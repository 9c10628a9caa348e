#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyparr/field.hpp"

namespace hyparr {

// One command per process. `verify_what` is only read by the verify command,
// the restrict/render extras only by theirs.
struct RunConfig {
  std::string command;      // invariants | lattice | nbc | adjoint | classify |
                            // classify-restrictions | restrict | ff-count |
                            // verify | render
  std::string verify_what;  // classification | monotonicity | convolution | nbc
  std::string input;
  std::string output;  // empty: artifact returned in out_text only
  int trials = 3;
  std::uint64_t seed = 1;
  long long prime = 0;      // 0: pick the smallest certified good prime
  std::string order;        // comma-separated label precedence, e.g. "3,1,2"
  std::string window = "-2,-2,2,2";
  std::string normal;  // comma-separated rationals, restrict only
  std::string offset = "0";
};

struct RunResult {
  int code = 0;  // 0 ok, 1 verification failure, 2 input error, 3 budget, 4 internal
  std::string out_text;
  std::string err_text;
};

RunResult run(const RunConfig& cfg);

int main_cli(int argc, char** argv);

}  // namespace hyparr
