#pragma once

#include <json.hpp>

#include "hyparr/extension.hpp"
#include "hyparr/finitefield.hpp"
#include "hyparr/nbc.hpp"
#include "hyparr/restriction.hpp"

namespace hyparr {

using Json = nlohmann::ordered_json;

// An input file is either rational ("field": "Q", the default) or modular
// ("field": {"p": N}); only one of the two members is populated.
struct LoadedArrangement {
  bool modular = false;
  Arrangement rational;
  ArrangementT<Fp> fp;
  long long p = 0;
};

LoadedArrangement load_arrangement_text(const std::string& text);
LoadedArrangement load_arrangement_file(const std::string& path);

// Canonical save format; load(save(A)) reproduces A exactly.
std::string save_arrangement(const Arrangement& a);

// Hasse diagram as a DOT digraph, edges from lower to upper covers.
template <class F>
std::string poset_dot(const SemiLatticeT<F>& lat);

std::string bigint_text(const BigInt& n);
std::string poly_ascending_text(const IntPoly& p);

Json arrangement_json(const Arrangement& a);
Json bundle_json(const InvariantBundle& b);
template <class F>
Json lattice_json(const SemiLatticeT<F>& lat);
Json nbc_json(const Arrangement& a, const std::vector<int>& order);
Json adjoint_json(const AdjointData& adj);
Json classification_json(const ClassificationReport& rep);
Json restriction_report_json(const RestrictionReport& rep);
Json classification_verification_json(const ClassificationVerification& v);
Json monotonicity_json(const std::vector<MonotonicityViolation>& violations);
Json convolution_json(const ConvolutionReport& rep);
Json spot_check_json(const SpotCheckReport& rep);

}  // namespace hyparr
