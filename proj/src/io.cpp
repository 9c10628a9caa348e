#include "hyparr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hyparr {

namespace {

std::string where(const std::string& ctx) { return ctx.empty() ? "" : ctx + ": "; }

Rational json_rational(const Json& v, const std::string& ctx) {
  if (v.is_number_integer())
    return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where(ctx) + e.what());
    }
  }
  throw InputError(where(ctx) + "expected an integer or a rational string");
}

Fp json_fp(const Json& v, long long p, const std::string& ctx) {
  Rational q = json_rational(v, ctx);
  long long num = static_cast<long long>(mpz_fdiv_ui(q.get_num().get_mpz_t(), p));
  long long den = static_cast<long long>(mpz_fdiv_ui(q.get_den().get_mpz_t(), p));
  if (den == 0) throw InputError(where(ctx) + "denominator divisible by the modulus");
  return Fp(num, p) / Fp(den, p);
}

}  // namespace

LoadedArrangement load_arrangement_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) throw InputError("top level: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("dim: expected an integer");
  int dim = j["dim"].get<int>();
  long long p = 0;
  if (j.contains("field")) {
    const Json& f = j["field"];
    if (f.is_string()) {
      if (f.get<std::string>() != "Q") throw InputError("field: expected \"Q\" or {\"p\": prime}");
    } else if (f.is_object() && f.contains("p") && f["p"].is_number_integer()) {
      p = f["p"].get<long long>();
      if (!is_prime(p)) throw InputError("field.p: not a prime");
    } else {
      throw InputError("field: expected \"Q\" or {\"p\": prime}");
    }
  }
  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array())
    throw InputError("hyperplanes: expected an array");

  LoadedArrangement out;
  if (p == 0) {
    std::vector<std::pair<Vec<Rational>, Rational>> rows;
    for (std::size_t i = 0; i < j["hyperplanes"].size(); ++i) {
      const Json& h = j["hyperplanes"][i];
      std::string ctx = "hyperplanes[" + std::to_string(i) + "]";
      if (!h.is_object() || !h.contains("normal") || !h["normal"].is_array() ||
          !h.contains("offset"))
        throw InputError(ctx + ": expected {\"normal\": [..], \"offset\": ..}");
      Vec<Rational> n;
      for (std::size_t k = 0; k < h["normal"].size(); ++k)
        n.push_back(json_rational(h["normal"][k], ctx + ".normal[" + std::to_string(k) + "]"));
      rows.emplace_back(std::move(n), json_rational(h["offset"], ctx + ".offset"));
    }
    out.rational = make_arrangement<Rational>(dim, rows, Rational(0));
  } else {
    out.modular = true;
    out.p = p;
    std::vector<std::pair<Vec<Fp>, Fp>> rows;
    for (std::size_t i = 0; i < j["hyperplanes"].size(); ++i) {
      const Json& h = j["hyperplanes"][i];
      std::string ctx = "hyperplanes[" + std::to_string(i) + "]";
      if (!h.is_object() || !h.contains("normal") || !h["normal"].is_array() ||
          !h.contains("offset"))
        throw InputError(ctx + ": expected {\"normal\": [..], \"offset\": ..}");
      Vec<Fp> n;
      for (std::size_t k = 0; k < h["normal"].size(); ++k)
        n.push_back(json_fp(h["normal"][k], p, ctx + ".normal[" + std::to_string(k) + "]"));
      rows.emplace_back(std::move(n), json_fp(h["offset"], p, ctx + ".offset"));
    }
    out.fp = make_arrangement<Fp>(dim, rows, Fp(0, p));
  }
  return out;
}

LoadedArrangement load_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_arrangement_text(buf.str());
}

std::string save_arrangement(const Arrangement& a) {
  Json j;
  j["dim"] = a.dim;
  j["field"] = "Q";
  j["hyperplanes"] = Json::array();
  for (const auto& h : a.hyperplanes) {
    Json row;
    row["normal"] = Json::array();
    for (const auto& x : h.normal) row["normal"].push_back(FieldOps<Rational>::to_text(x));
    row["offset"] = FieldOps<Rational>::to_text(h.offset);
    j["hyperplanes"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

template <class F>
std::string poset_dot(const SemiLatticeT<F>& lat) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int i = 0; i < lat.size(); ++i) {
    out << "  n" << i << " [label=\"dim=" << lat.dim_of(i) << "; labels={";
    for (std::size_t k = 0; k < lat.labels[i].size(); ++k) {
      if (k) out << ",";
      out << lat.labels[i][k];
    }
    out << "}\"];\n";
  }
  for (int i = 0; i < lat.size(); ++i)
    for (int j = 0; j < lat.size(); ++j) {
      if (i == j || !lat.leq(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < lat.size() && cover; ++k)
        if (k != i && k != j && lat.leq(i, k) && lat.leq(k, j)) cover = false;
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

template std::string poset_dot<Rational>(const SemiLatticeT<Rational>&);
template std::string poset_dot<Fp>(const SemiLatticeT<Fp>&);

std::string bigint_text(const BigInt& n) { return n.get_str(); }

std::string poly_ascending_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p.coeffs[k];
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || k == 0) out << a.get_str();
    if (k == 1) out << "t";
    if (k >= 2) out << "t^" << k;
  }
  return out.str();
}

namespace {

Json bigints_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(bigint_text(x));
  return a;
}

Json grid_json(const std::vector<std::vector<BigInt>>& g) {
  Json a = Json::array();
  for (const auto& row : g) a.push_back(bigints_json(row));
  return a;
}

Json vec_json(const Vec<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(FieldOps<Rational>::to_text(x));
  return a;
}

const char* degenerate_text(Degenerate d) {
  switch (d) {
    case Degenerate::AmbientMember:
      return "ambient";
    case Degenerate::EmptyHyperplane:
      return "empty";
    default:
      return "none";
  }
}

Json whitney_grid_json(const BiPoly& w) {
  Json a = Json::array();
  for (const auto& row : w.coeff) a.push_back(bigints_json(row));
  return a;
}

}  // namespace

Json arrangement_json(const Arrangement& a) {
  Json j;
  j["dim"] = a.dim;
  j["labels"] = a.labels;
  j["hyperplanes"] = Json::array();
  for (const auto& h : a.hyperplanes) {
    Json row;
    row["normal"] = vec_json(h.normal);
    row["offset"] = FieldOps<Rational>::to_text(h.offset);
    j["hyperplanes"].push_back(std::move(row));
  }
  if (a.degenerate != Degenerate::None) j["degenerate"] = degenerate_text(a.degenerate);
  if (a.multi) j["multi"] = true;
  return j;
}

Json bundle_json(const InvariantBundle& b) {
  Json j;
  j["d"] = b.d;
  j["chi"] = poly_to_text(b.chi);
  j["chi_coeffs"] = bigints_json(b.chi.coeffs);
  j["whitney"] = whitney_grid_json(b.whitney);
  j["whitney_text"] = bipoly_to_text(b.whitney);
  j["c"] = grid_json(b.cij);
  j["wPlus"] = bigints_json(b.wplus);
  j["W"] = bigints_json(b.W);
  j["faces"] = bigints_json(b.faces);
  j["r"] = bigint_text(b.regions);
  j["doubly"] = grid_json(b.doubly);
  return j;
}

template <class F>
Json lattice_json(const SemiLatticeT<F>& lat) {
  Json j;
  j["size"] = lat.size();
  j["flats"] = Json::array();
  for (int i = 0; i < lat.size(); ++i) {
    Json f;
    f["index"] = i;
    f["dim"] = lat.dim_of(i);
    f["labels"] = lat.labels[i];
    Json point = Json::array();
    for (const auto& x : lat.flats[i].point) point.push_back(FieldOps<F>::to_text(x));
    f["point"] = std::move(point);
    Json basis = Json::array();
    for (const auto& b : lat.flats[i].basis) {
      Json row = Json::array();
      for (const auto& x : b) row.push_back(FieldOps<F>::to_text(x));
      basis.push_back(std::move(row));
    }
    f["basis"] = std::move(basis);
    f["mobius"] = bigint_text(lat.mobius(0, i));
    j["flats"].push_back(std::move(f));
  }
  return j;
}

template Json lattice_json<Rational>(const SemiLatticeT<Rational>&);
template Json lattice_json<Fp>(const SemiLatticeT<Fp>&);

Json nbc_json(const Arrangement& a, const std::vector<int>& order) {
  Json j;
  j["order"] = order;
  CircuitCatalog cat = affine_circuits(a);
  Json cs = Json::array();
  for (const auto& c : cat.circuits) cs.push_back(c);
  j["circuits"] = std::move(cs);
  Json bs = Json::array();
  for (std::uint64_t mask : broken_circuit_masks(a, cat, order)) {
    std::vector<int> lbls;
    for (int h = 0; h < a.size(); ++h)
      if (mask & (std::uint64_t{1} << h)) lbls.push_back(a.labels[h]);
    std::sort(lbls.begin(), lbls.end());
    bs.push_back(std::move(lbls));
  }
  j["broken_circuits"] = std::move(bs);
  Json sets = Json::array();
  Json counts = Json::array();
  for (int k = 0; k <= a.dim; ++k) {
    Json level = Json::array();
    for (const auto& s : nbc_sets(a, k, order)) level.push_back(s);
    counts.push_back(level.size());
    sets.push_back(std::move(level));
  }
  j["nbc"] = std::move(sets);
  j["counts"] = std::move(counts);
  j["c_grid"] = grid_json(cij_via_nbc(a, order));
  return j;
}

Json adjoint_json(const AdjointData& adj) {
  Json j;
  j["linearization"] = arrangement_json(adj.lin);
  Json vs = Json::array();
  for (const auto& v : adj.vertices) vs.push_back(vec_json(v));
  j["vertices"] = std::move(vs);
  Json ls = Json::array();
  for (const auto& u : adj.lines) ls.push_back(vec_json(u));
  j["lines"] = std::move(ls);
  j["tilde"] = arrangement_json(adj.tilde);
  Json prov = Json::array();
  for (const auto& pr : adj.provenance) {
    Json e;
    e["kind"] = std::string(1, pr.kind);
    e["source"] = vec_json(pr.source);
    prov.push_back(std::move(e));
  }
  j["provenance"] = std::move(prov);
  j["part0"] = adj.part0;
  j["part1"] = adj.part1;
  j["sigma"] = arrangement_json(adj.sigma);
  j["bar"] = arrangement_json(adj.bar);
  return j;
}

Json classification_json(const ClassificationReport& rep) {
  Json j;
  j["dim"] = rep.adj.tilde.dim - 1;
  j["num_strata"] = static_cast<int>(rep.strata.size());
  j["num_classes"] = rep.num_classes;
  j["s2_column_source"] = "defining double sum over flat pairs";
  j["strata"] = Json::array();
  for (const auto& st : rep.strata) {
    Json s;
    s["index"] = st.index;
    s["dim"] = st.dim;
    s["labels"] = st.labels;
    s["representative"] = vec_json(st.rep);
    s["degenerate"] = degenerate_text(st.degenerate);
    s["duplicate"] = st.duplicate;
    s["class_id"] = st.class_id;
    s["chi"] = poly_to_text(st.bundle.chi);
    s["whitney"] = whitney_grid_json(st.bundle.whitney);
    s["whitney_text"] = bipoly_to_text(st.bundle.whitney);
    s["wPlus"] = bigints_json(st.bundle.wplus);
    s["W"] = bigints_json(st.bundle.W);
    s["faces"] = bigints_json(st.bundle.faces);
    s["r"] = bigint_text(st.bundle.regions);
    j["strata"].push_back(std::move(s));
  }
  return j;
}

Json restriction_report_json(const RestrictionReport& rep) {
  Json j;
  j["num_strata"] = static_cast<int>(rep.strata.size());
  j["num_classes"] = rep.num_classes;
  j["all_constant"] = rep.all_constant;
  j["strata"] = Json::array();
  for (const auto& st : rep.strata) {
    Json s;
    s["index"] = st.index;
    s["dim"] = st.dim;
    s["labels"] = st.labels;
    s["representative"] = vec_json(st.rep);
    s["degenerate"] = degenerate_text(st.degenerate);
    s["constant"] = st.constancy_ok;
    s["class_id"] = st.class_id;
    s["chi"] = poly_to_text(st.bundle.chi);
    BigInt flats = 0;
    for (const auto& w : st.bundle.W) flats += w;
    s["lattice_size"] = bigint_text(flats);
    s["wPlus"] = bigints_json(st.bundle.wplus);
    s["W"] = bigints_json(st.bundle.W);
    s["r"] = bigint_text(st.bundle.regions);
    j["strata"].push_back(std::move(s));
  }
  return j;
}

Json classification_verification_json(const ClassificationVerification& v) {
  Json j;
  j["trials"] = v.trials;
  j["seed"] = v.seed;
  j["ok"] = v.ok;
  j["checks"] = Json::array();
  for (const auto& c : v.checks) {
    Json e;
    e["family"] = c.family;
    e["stratum"] = c.stratum;
    e["reps"] = c.reps;
    e["bundles_equal"] = c.bundles_equal;
    e["posets_isomorphic"] = c.posets_isomorphic;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

Json monotonicity_json(const std::vector<MonotonicityViolation>& violations) {
  Json j;
  j["ok"] = violations.empty();
  j["violations"] = Json::array();
  for (const auto& v : violations) {
    Json e;
    e["family"] = v.family;
    e["sub"] = v.sub;
    e["super"] = v.super_;
    e["detail"] = v.detail;
    j["violations"].push_back(std::move(e));
  }
  return j;
}

Json convolution_json(const ConvolutionReport& rep) {
  Json j;
  j["lhs"] = poly_ascending_text(rep.lhs);
  j["rhs"] = poly_ascending_text(rep.rhs);
  j["equal"] = rep.equal;
  return j;
}

Json spot_check_json(const SpotCheckReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["complement_count"] = rep.m_count;
  j["lhs_points"] = rep.lhs_points;
  if (rep.essential) j["lhs_product"] = rep.lhs_product;
  j["rhs"] = rep.rhs;
  j["essential"] = rep.essential;
  j["equal"] = rep.equal;
  j["strata"] = Json::array();
  for (const auto& s : rep.strata) {
    Json e;
    e["index"] = s.index;
    e["points"] = s.points;
    e["sum"] = s.sum;
    e["rep_count"] = s.rep_count;
    j["strata"].push_back(std::move(e));
  }
  return j;
}

}  // namespace hyparr
