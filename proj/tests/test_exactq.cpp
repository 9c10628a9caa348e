#include <doctest.h>

#include "hyparr/linalg.hpp"
#include "hyparr/poly.hpp"

using namespace hyparr;

TEST_CASE("rational parsing is exact and canonical") {
  CHECK(parse_rational("7/21") == Rational(1, 3));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("12") == Rational(12));
  CHECK_THROWS_AS(parse_rational(" 12"), InputError);  // strict: no padding
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("8/4")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
}

TEST_CASE("canonical scaling of normals") {
  std::vector<Rational> v{Rational(1, 2), Rational(-1, 3)};
  Rational off(5, 6);
  FieldOps<Rational>::make_canonical(v, &off);
  CHECK(v == std::vector<Rational>{Rational(3), Rational(-2)});
  CHECK(off == Rational(5));

  // leading sign flips the whole row
  std::vector<Rational> w{Rational(-2), Rational(4)};
  Rational o(6);
  FieldOps<Rational>::make_canonical(w, &o);
  CHECK(w == std::vector<Rational>{Rational(1), Rational(-2)});
  CHECK(o == Rational(-3));

  std::vector<Rational> z{Rational(0), Rational(0)};
  Rational zo(7);
  FieldOps<Rational>::make_canonical(z, &zo);
  CHECK(z == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(zo == Rational(7));
}

TEST_CASE("prime field arithmetic") {
  for (long long x = 1; x < 7; ++x) CHECK((Fp(x, 7) * Fp(x, 7).inverse()).v == 1);
  CHECK((Fp(3, 5) + Fp(4, 5)).v == 2);
  CHECK((Fp(1, 5) - Fp(3, 5)).v == 3);
  CHECK((-Fp(2, 5)).v == 3);
  CHECK_THROWS(Fp(1, 5) + Fp(1, 7));
  CHECK_THROWS(Fp(0, 5).inverse());
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("row reduction over the rationals") {
  Mat<Rational> rows{{Rational(2), Rational(4)}, {Rational(1), Rational(1)}};
  Vec<Rational> rhs{Rational(2), Rational(0)};
  RrefResult<Rational> sys = rref<Rational>(rows, rhs);
  CHECK(sys.rank == 2);
  CHECK(sys.consistent);
  // unique solution x = -1, y = 1
  CHECK(sys.c == Vec<Rational>{Rational(-1), Rational(1)});

  Mat<Rational> dep{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  Vec<Rational> rhs2{Rational(1), Rational(3)};
  CHECK_FALSE(rref<Rational>(dep, rhs2).consistent);
  rhs2[1] = Rational(2);
  RrefResult<Rational> ok = rref<Rational>(dep, rhs2);
  CHECK(ok.consistent);
  CHECK(ok.rank == 1);
  CHECK(rank_of_rows<Rational>(dep) == 1);
}

TEST_CASE("row reduction over a prime field") {
  Fp like(0, 5);
  Mat<Fp> rows{{Fp(2, 5), Fp(4, 5)}, {Fp(1, 5), Fp(1, 5)}};
  Vec<Fp> rhs{Fp(2, 5), Fp(0, 5)};
  RrefResult<Fp> sys = rref<Fp>(rows, rhs);
  CHECK(sys.rank == 2);
  CHECK(sys.c == Vec<Fp>{Fp(4, 5), Fp(1, 5)});
}

TEST_CASE("integer polynomials") {
  IntPoly a;  // t - 1
  a.coeffs = {BigInt(-1), BigInt(1)};
  IntPoly b;  // t - 2
  b.coeffs = {BigInt(-2), BigInt(1)};
  IntPoly p = a * b;
  CHECK(p.coeffs == std::vector<BigInt>{BigInt(2), BigInt(-3), BigInt(1)});
  CHECK(p.eval(BigInt(5)) == 12);
  CHECK(p.eval(BigInt(-1)) == 6);
  CHECK(poly_to_text(p) == "t^2 - 3t + 2");
  CHECK((a - a).is_zero());
  CHECK(poly_to_text(IntPoly::zero()) == "0");
  CHECK(IntPoly::monomial(2, BigInt(1)).eval(BigInt(3)) == 9);
  CHECK(p.coeff(1) == -3);
  CHECK(p.coeff(7) == 0);
}

TEST_CASE("bivariate polynomial rendering") {
  BiPoly w(2);
  w.at(0, 0) = 2;
  w.at(0, 1) = -3;
  w.at(0, 2) = 1;
  w.at(1, 0) = -4;
  w.at(1, 1) = 3;
  w.at(2, 0) = 2;
  CHECK(bipoly_to_text(w) == "2s^2 + 3st - 4s + t^2 - 3t + 2");
  IntPoly chi = w.at_s_zero();
  CHECK(poly_to_text(chi) == "t^2 - 3t + 2");
  CHECK_FALSE(w.is_zero());
  CHECK(BiPoly(2).is_zero());
  CHECK(bipoly_to_text(BiPoly(1)) == "0");
}
