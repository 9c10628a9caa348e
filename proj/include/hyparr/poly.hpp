#pragma once

#include <string>
#include <vector>

#include "hyparr/field.hpp"

namespace hyparr {

// Univariate polynomial with exact integer coefficients, ascending degree,
// no trailing zeros (zero polynomial = empty vector).
struct IntPoly {
  std::vector<BigInt> coeffs;

  static IntPoly zero() { return {}; }
  static IntPoly monomial(int deg, const BigInt& c);
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  BigInt coeff(int deg) const;
  BigInt eval(const BigInt& x) const;
  void trim();

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
};

// Polynomial in s and t: coeff[i][j] multiplies s^i t^j, 0 <= i,j <= d.
struct BiPoly {
  int d = 0;
  std::vector<std::vector<BigInt>> coeff;

  explicit BiPoly(int dim = 0)
      : d(dim), coeff(dim + 1, std::vector<BigInt>(dim + 1, BigInt(0))) {}
  BigInt& at(int sdeg, int tdeg) { return coeff[sdeg][tdeg]; }
  const BigInt& at(int sdeg, int tdeg) const { return coeff[sdeg][tdeg]; }
  bool is_zero() const;
  // substitution s = 0 gives a univariate polynomial in t
  IntPoly at_s_zero() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.d == b.d && a.coeff == b.coeff;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
};

// "t^2 - 3t + 2" style rendering, descending degree; "0" for the zero poly.
std::string poly_to_text(const IntPoly& p, const std::string& var = "t");

// Terms ordered by s-degree descending then t-degree descending, matching the
// usual way Whitney polynomials are written: "2s^2 + 3st - 4s + t^2 - 3t + 2".
std::string bipoly_to_text(const BiPoly& w);

}  // namespace hyparr
