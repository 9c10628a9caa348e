#include <doctest.h>

#include <map>
#include <set>

#include "corpus.hpp"
#include "hyparr/restriction.hpp"

using namespace hyparr;
using namespace hyparr::tests;

TEST_CASE("restriction to a named hyperplane") {
  Arrangement a = example21();

  // the horizontal line x2 = 1 meets the two vertical members
  Arrangement r1 = restrict_to(a, {Rational(0), Rational(1)}, Rational(1));
  CHECK(r1.dim == 1);
  CHECK(r1.multi);
  CHECK(r1.labels == std::vector<int>{1, 2});
  CHECK(poly_to_text(char_poly<Rational>(r1)) == "t - 2");

  // restricting to the member x2 = 0 drops it and keeps its two points
  Arrangement r3 = restrict_to(a, {Rational(0), Rational(1)}, Rational(0));
  CHECK(r3.labels == std::vector<int>{1, 2});
  CHECK(poly_to_text(char_poly<Rational>(r3)) == "t - 2");

  // a generic line meets all three members
  Arrangement rg = restrict_to(a, {Rational(1), Rational(1)}, Rational(7));
  CHECK(rg.labels == std::vector<int>{1, 2, 3});
  CHECK(poly_to_text(char_poly<Rational>(rg)) == "t - 3");

  // a vertical line meets only the horizontal member
  Arrangement rv = restrict_to(a, {Rational(1), Rational(0)}, Rational(5));
  CHECK(rv.labels == std::vector<int>{3});
  CHECK(poly_to_text(char_poly<Rational>(rv)) == "t - 1");

  CHECK_THROWS_AS(restrict_to(a, {Rational(0), Rational(0)}, Rational(0)), InputError);
  CHECK_THROWS_AS(restrict_to(a, {Rational(0), Rational(0)}, Rational(1)), InputError);
  CHECK_THROWS_AS(restrict_to(a, {Rational(1)}, Rational(0)), InputError);
}

TEST_CASE("restriction agrees with restricting the extension") {
  for (const auto& e : corpus()) {
    if (e.arr.size() > 5 || e.arr.dim > 2 || e.arr.multi) continue;
    CAPTURE(e.name);
    Vec<Rational> n{Rational(1), Rational(2)};
    if (e.arr.dim == 1) n = Vec<Rational>{Rational(1)};
    Rational c(3);
    Hyperplane<Rational> target = make_hyperplane<Rational>(n, c);
    bool is_member = false;
    for (const auto& h : e.arr.hyperplanes)
      if (h == target) is_member = true;
    if (is_member) continue;
    Arrangement direct = restrict_to(e.arr, n, c);
    Arrangement added = extend(e.arr, n, c);
    SemiLattice lat = build_semilattice<Rational>(added);
    int hflat = -1;
    for (int i = 0; i < lat.size(); ++i)
      if (lat.labels[i] == std::vector<int>{added.labels.back()} &&
          lat.dim_of(i) == e.arr.dim - 1)
        hflat = i;
    REQUIRE(hflat >= 0);
    Arrangement via = restriction<Rational>(e.arr, lat.flats[hflat]);
    CHECK(direct.labels == via.labels);
    REQUIRE(direct.size() == via.size());
    for (int i = 0; i < direct.size(); ++i)
      CHECK(direct.hyperplanes[i] == via.hyperplanes[i]);
  }
}

TEST_CASE("restriction classes of the running example") {
  RestrictionReport rep = classify_restrictions(example21());
  REQUIRE(rep.strata.size() == 10);
  CHECK(rep.all_constant);
  CHECK(rep.num_classes == 4);
  for (const auto& s : rep.strata) CHECK(s.constancy_ok);

  std::map<int, int> sizes;
  std::set<int> degenerate_ids, plain_ids;
  for (const auto& s : rep.strata) {
    sizes[s.class_id]++;
    (s.degenerate != Degenerate::None ? degenerate_ids : plain_ids).insert(s.class_id);
  }
  // degenerate strata (origin and direction axis) share the zero class
  CHECK(degenerate_ids.size() == 1);
  CHECK(plain_ids.count(*degenerate_ids.begin()) == 0);

  // classes by the region count of A/H: zero, one, two and three points
  std::map<int, std::set<long long>> regions_by_class;
  for (const auto& s : rep.strata)
    regions_by_class[s.class_id].insert(s.bundle.regions.get_si());
  for (const auto& [id, rs] : regions_by_class) REQUIRE(rs.size() == 1);

  std::multiset<long long> reg_values;
  for (const auto& [id, rs] : regions_by_class) reg_values.insert(*rs.begin());
  CHECK(reg_values == std::multiset<long long>{0, 2, 3, 4});

  // the generic stratum gives three points, so four regions on the line
  CHECK(rep.strata.back().dim == 3);
  CHECK(rep.strata.back().bundle.regions == 4);
  CHECK(poly_to_text(rep.strata.back().bundle.chi) == "t - 3");

  // strata per class: generic 1, degenerate 2, one-point 3, two-point 4
  std::multiset<int> size_values;
  for (const auto& [id, n] : sizes) size_values.insert(n);
  CHECK(size_values == std::multiset<int>{1, 2, 3, 4});
}

TEST_CASE("restriction classes of the coordinate arrangement") {
  RestrictionReport rep = classify_restrictions(boolean_arr(2));
  // boolean tilde is boolean3: 8 strata
  REQUIRE(rep.strata.size() == 8);
  CHECK(rep.all_constant);
  for (const auto& s : rep.strata) {
    if (s.degenerate != Degenerate::None) continue;
    // every line meets 1 or 2 of the axes
    CHECK(s.bundle.regions >= 2);
    CHECK(s.bundle.regions <= 3);
  }
}

TEST_CASE("restriction monotonicity holds on the corpus samples") {
  CHECK(verify_restriction_monotonicity(example21()).empty());
  CHECK(verify_restriction_monotonicity(boolean_arr(2)).empty());
  CHECK(verify_restriction_monotonicity(make_arr(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}})).empty());
  CHECK(verify_restriction_monotonicity(
            make_arr(2, {{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, -1, 0}}))
            .empty());
}

TEST_CASE("classify_restrictions requires an essential input") {
  CHECK_THROWS_AS(classify_restrictions(make_arr(2, {{1, 0, 0}, {1, 0, 1}})), InputError);
  CHECK_THROWS_AS(verify_restriction_monotonicity(make_arr(2, {{1, 0, 0}})), InputError);
}
