#include "hyparr/poly.hpp"

#include <algorithm>

namespace hyparr {

IntPoly IntPoly::monomial(int deg, const BigInt& c) {
  IntPoly p;
  if (sgn(c) == 0) return p;
  p.coeffs.assign(deg + 1, BigInt(0));
  p.coeffs[deg] = c;
  return p;
}

BigInt IntPoly::coeff(int deg) const {
  if (deg < 0 || deg >= static_cast<int>(coeffs.size())) return BigInt(0);
  return coeffs[deg];
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void IntPoly::trim() {
  while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
  r.trim();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly::zero();
  IntPoly r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  r.trim();
  return r;
}

bool BiPoly::is_zero() const {
  for (const auto& row : coeff)
    for (const auto& c : row)
      if (sgn(c) != 0) return false;
  return true;
}

IntPoly BiPoly::at_s_zero() const {
  IntPoly p;
  if (coeff.empty()) return p;
  p.coeffs = coeff[0];
  p.trim();
  return p;
}

namespace {

void append_term(std::string& out, const BigInt& c, const std::string& vars) {
  bool first = out.empty();
  BigInt a = c;
  if (first) {
    if (sgn(a) < 0) {
      out += "-";
      a = -a;
    }
  } else {
    out += sgn(a) < 0 ? " - " : " + ";
    if (sgn(a) < 0) a = -a;
  }
  if (a != 1 || vars.empty()) out += a.get_str();
  out += vars;
}

std::string var_power(const std::string& v, int k) {
  if (k == 0) return "";
  if (k == 1) return v;
  return v + "^" + std::to_string(k);
}

}  // namespace

std::string poly_to_text(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int deg = p.degree(); deg >= 0; --deg) {
    if (sgn(p.coeffs[deg]) == 0) continue;
    append_term(out, p.coeffs[deg], var_power(var, deg));
  }
  return out;
}

std::string bipoly_to_text(const BiPoly& w) {
  if (w.is_zero()) return "0";
  std::string out;
  for (int i = w.d; i >= 0; --i)
    for (int j = w.d; j >= 0; --j) {
      if (sgn(w.coeff[i][j]) == 0) continue;
      append_term(out, w.coeff[i][j], var_power("s", i) + var_power("t", j));
    }
  return out;
}

}  // namespace hyparr
