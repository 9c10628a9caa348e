#include "hyparr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <random>

#include "hyparr/io.hpp"
#include "hyparr/render.hpp"

namespace hyparr {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<int> parse_order(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& p : split_commas(text)) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(p, &pos);
      if (pos != p.size()) throw std::invalid_argument(p);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("order: expected a comma-separated label list, got \"" + text + "\"");
    }
  }
  return out;
}

Vec<Rational> parse_vector(const std::string& text, const std::string& what) {
  Vec<Rational> out;
  for (const auto& p : split_commas(text)) {
    try {
      out.push_back(parse_rational(p));
    } catch (const InputError&) {
      throw InputError(what + ": expected comma-separated rationals, got \"" + text + "\"");
    }
  }
  return out;
}

RenderWindow parse_window(const std::string& text) {
  Vec<Rational> v = parse_vector(text, "window");
  if (v.size() != 4) throw InputError("window: expected x0,y0,x1,y1");
  return RenderWindow{v[0], v[1], v[2], v[3]};
}

const Arrangement& need_rational(const LoadedArrangement& in, const std::string& cmd) {
  if (in.modular) throw InputError(cmd + " requires a rational (field \"Q\") input");
  return in.rational;
}

std::vector<int> order_or_natural(const Arrangement& a, const std::string& text) {
  std::vector<int> order = parse_order(text);
  if (order.empty()) return natural_order(a);
  return order;
}

long long pick_prime(const Arrangement& a, long long prime) {
  if (prime != 0) {
    if (!is_prime(prime)) throw InputError("prime: " + std::to_string(prime) + " is not prime");
    return prime;
  }
  return good_prime(a, 2).first;
}

// Deterministic shuffle; std::shuffle is not pinned across library versions.
template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

struct Artifact {
  int code = 0;
  std::string text;
};

Artifact dispatch(const RunConfig& cfg) {
  LoadedArrangement in = load_arrangement_file(cfg.input);
  Json j;

  if (cfg.command == "invariants") {
    InvariantBundle b =
        in.modular ? compute_invariants<Fp>(in.fp) : compute_invariants<Rational>(in.rational);
    return {0, bundle_json(b).dump(2) + "\n"};
  }

  if (cfg.command == "lattice") {
    bool dot = cfg.output.size() >= 4 && cfg.output.rfind(".dot") == cfg.output.size() - 4;
    if (in.modular) {
      SemiLatticeT<Fp> lat = build_semilattice<Fp>(in.fp);
      if (dot) return {0, poset_dot<Fp>(lat)};
      j = lattice_json<Fp>(lat);
      j["dot"] = poset_dot<Fp>(lat);
    } else {
      SemiLattice lat = build_semilattice<Rational>(in.rational);
      if (dot) return {0, poset_dot<Rational>(lat)};
      j = lattice_json<Rational>(lat);
      j["dot"] = poset_dot<Rational>(lat);
    }
    return {0, j.dump(2) + "\n"};
  }

  if (cfg.command == "nbc") {
    const Arrangement& a = need_rational(in, cfg.command);
    j = nbc_json(a, order_or_natural(a, cfg.order));
    return {0, j.dump(2) + "\n"};
  }

  if (cfg.command == "adjoint") {
    const Arrangement& a = need_rational(in, cfg.command);
    j = adjoint_json(induced_adjoint(a));
    return {0, j.dump(2) + "\n"};
  }

  if (cfg.command == "classify") {
    const Arrangement& a = need_rational(in, cfg.command);
    j = classification_json(classify_extensions(a));
    return {0, j.dump(2) + "\n"};
  }

  if (cfg.command == "classify-restrictions") {
    const Arrangement& a = need_rational(in, cfg.command);
    RestrictionReport rep = classify_restrictions(a);
    j = restriction_report_json(rep);
    return {rep.all_constant ? 0 : 1, j.dump(2) + "\n"};
  }

  if (cfg.command == "restrict") {
    const Arrangement& a = need_rational(in, cfg.command);
    Vec<Rational> n = parse_vector(cfg.normal, "normal");
    Arrangement r = restrict_to(a, n, parse_rational(cfg.offset));
    j = arrangement_json(r);
    j["chi"] = poly_to_text(char_poly<Rational>(r));
    return {0, j.dump(2) + "\n"};
  }

  if (cfg.command == "ff-count") {
    const Arrangement& a = need_rational(in, cfg.command);
    long long p = pick_prime(a, cfg.prime);
    PrimeArrangement ap = reduce_mod_p(a, p);
    long long count = count_complement(ap);
    IntPoly chi = char_poly<Rational>(a);
    BigInt at_p = chi.eval(BigInt(static_cast<long>(p)));
    bool match = BigInt(static_cast<long>(count)) == at_p;
    j["p"] = p;
    j["count"] = count;
    j["chi"] = poly_ascending_text(chi);
    j["chi_at_p"] = bigint_text(at_p);
    j["match"] = match;
    return {match ? 0 : 1, j.dump(2) + "\n"};
  }

  if (cfg.command == "render") {
    const Arrangement& a = need_rational(in, cfg.command);
    return {0, render_svg(a, parse_window(cfg.window))};
  }

  if (cfg.command == "verify") {
    const Arrangement& a = need_rational(in, cfg.command);
    if (cfg.verify_what == "classification") {
      ClassificationVerification v = verify_classification(a, cfg.trials, cfg.seed);
      j = classification_verification_json(v);
      return {v.ok ? 0 : 1, j.dump(2) + "\n"};
    }
    if (cfg.verify_what == "monotonicity") {
      auto ext = verify_monotonicity(a);
      auto res = verify_restriction_monotonicity(a);
      j["extensions"] = monotonicity_json(ext);
      j["restrictions"] = monotonicity_json(res);
      bool ok = ext.empty() && res.empty();
      j["ok"] = ok;
      return {ok ? 0 : 1, j.dump(2) + "\n"};
    }
    if (cfg.verify_what == "convolution") {
      ConvolutionReport rep = verify_convolution(a);
      j = convolution_json(rep);
      long long p = pick_prime(a, cfg.prime);
      SpotCheckReport spot = ff_convolution_spot_check(a, p);
      j["spot"] = spot_check_json(spot);
      bool ok = rep.equal && spot.equal;
      j["ok"] = ok;
      return {ok ? 0 : 1, j.dump(2) + "\n"};
    }
    if (cfg.verify_what == "nbc") {
      InvariantBundle b = compute_invariants<Rational>(a);
      std::vector<std::vector<int>> orders;
      orders.push_back(natural_order(a));
      std::mt19937_64 rng(cfg.seed);
      for (int t = 0; t < std::max(1, cfg.trials); ++t) {
        std::vector<int> o = natural_order(a);
        shuffle_vec(o, rng);
        orders.push_back(std::move(o));
      }
      bool ok = true;
      j["checks"] = Json::array();
      for (const auto& o : orders) {
        Json e;
        e["order"] = o;
        Json counts = Json::array();
        bool counts_ok = true;
        for (int k = 0; k <= a.dim; ++k) {
          std::size_t n = nbc_count(a, k, o);
          counts.push_back(n);
          if (BigInt(static_cast<long>(n)) != b.wplus[k]) counts_ok = false;
        }
        e["counts"] = std::move(counts);
        bool grid_ok = cij_via_nbc(a, o) == b.cij;
        e["counts_match_wplus"] = counts_ok;
        e["grid_matches_whitney"] = grid_ok;
        ok = ok && counts_ok && grid_ok;
        j["checks"].push_back(std::move(e));
      }
      j["ok"] = ok;
      return {ok ? 0 : 1, j.dump(2) + "\n"};
    }
    throw InputError("verify: unknown target \"" + cfg.verify_what + "\"");
  }

  throw InputError("unknown command \"" + cfg.command + "\"");
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult res;
  try {
    Artifact art = dispatch(cfg);
    res.code = art.code;
    res.out_text = std::move(art.text);
    if (!cfg.output.empty()) {
      std::ofstream out(cfg.output, std::ios::binary);
      if (!out) throw InputError("cannot write " + cfg.output);
      out << res.out_text;
    }
  } catch (const InputError& e) {
    res.code = 2;
    res.err_text = std::string("error: ") + e.what() + "\n";
  } catch (const BadPrime& e) {
    res.code = 2;
    res.err_text = std::string("error: ") + e.what() + "\n";
  } catch (const BudgetExceeded& e) {
    res.code = 3;
    res.err_text = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.code = 4;
    res.err_text = std::string("internal error: ") + e.what() + "\n";
  }
  return res;
}

int main_cli(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"exact invariants, extensions and restrictions of affine hyperplane arrangements"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "arrangement JSON file")->required();
    sub->add_option("--output", cfg.output, "write the artifact here instead of stdout");
    sub->add_option("--trials", cfg.trials, "randomized repetitions (default 3)");
    sub->add_option("--seed", cfg.seed, "RNG seed (default 1)");
    sub->add_option("--prime,--p,--spot-prime", cfg.prime,
                    "prime modulus (default: smallest certified good prime)");
    sub->add_option("--order", cfg.order, "label precedence, e.g. 3,1,2");
    sub->add_option("--window", cfg.window, "render window x0,y0,x1,y1");
    return sub;
  };

  add_common(app.add_subcommand("invariants", "characteristic/Whitney profile of the input"));
  add_common(app.add_subcommand("lattice", "intersection semi-lattice (JSON, or DOT to *.dot)"));
  add_common(app.add_subcommand("nbc", "affine circuits, broken circuits and NBC sets"));
  add_common(app.add_subcommand("adjoint", "induced adjoint arrangement and its parts"));
  add_common(app.add_subcommand("classify", "one-element extension classes by stratum"));
  add_common(
      app.add_subcommand("classify-restrictions", "restriction classes by adjoint stratum"));
  CLI::App* rst = add_common(app.add_subcommand("restrict", "restrict to a hyperplane"));
  rst->add_option("--normal", cfg.normal, "hyperplane normal, comma-separated rationals")
      ->required();
  rst->add_option("--offset", cfg.offset, "hyperplane offset (default 0)");
  add_common(app.add_subcommand("ff-count", "complement point count mod p vs chi(p)"));
  CLI::App* ver = add_common(app.add_subcommand(
      "verify", "verify classification | monotonicity | convolution | nbc on the input"));
  ver->add_option("what", cfg.verify_what, "property to verify")
      ->required()
      ->check(CLI::IsMember({"classification", "monotonicity", "convolution", "nbc"}));
  add_common(app.add_subcommand("render", "SVG plot of a planar arrangement"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  RunResult res = run(cfg);
  if (!res.err_text.empty()) std::cerr << res.err_text;
  if (cfg.output.empty() && !res.out_text.empty()) std::cout << res.out_text;
  return res.code;
}

}  // namespace hyparr
