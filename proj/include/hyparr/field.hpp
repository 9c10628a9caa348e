#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyparr {

// Exact rational scalar. mpq_class keeps values canonical: gcd(num,den)=1,
// den>0. get_str() emits "p/q" (or "p" when q=1), which is the wire format.
using Rational = mpq_class;
using BigInt = mpz_class;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadPrime : std::runtime_error {
  long long p;
  BadPrime(long long prime, const std::string& why)
      : std::runtime_error("bad prime " + std::to_string(prime) + ": " + why), p(prime) {}
};

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Prime-field scalar with the modulus carried per value. Values are kept in
// [0, p); mixing moduli is a programming error and throws.
struct Fp {
  long long v = 0;
  long long p = 0;

  Fp() = default;
  Fp(long long value, long long prime) : p(prime) {
    if (prime < 2) throw std::invalid_argument("Fp modulus must be >= 2");
    v = value % prime;
    if (v < 0) v += prime;
  }

  friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v + b.check(b, a.p).v, a.p); }
  friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v - b.check(b, a.p).v, a.p); }
  friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v * b.check(b, a.p).v, a.p); }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-v, p); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b) { return a.v < b.v; }

  Fp inverse() const;

 private:
  static const Fp& check(const Fp& x, long long prime) {
    if (x.p != prime) throw std::invalid_argument("Fp modulus mismatch");
    return x;
  }
};

// The exact linear algebra core is generic over the scalar field. FieldOps
// supplies the few operations that are not plain arithmetic: constants with
// the right context (Fp needs a modulus) and canonical scaling of normals.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }

  // Scales v (and offset, if given) so the vector is primitive integer with
  // positive leading nonzero entry. All-zero v is left untouched. Entries are
  // reduced first: mpq values built from raw numerator/denominator pairs are
  // not canonical, and gmp comparisons are undefined on such values.
  static void make_canonical(std::vector<Rational>& v, Rational* offset) {
    for (auto& x : v) x.canonicalize();
    if (offset) offset->canonicalize();
    mpz_class lcm_den = 1, gcd_num = 0;
    bool any = false;
    for (const auto& x : v) {
      if (sgn(x) == 0) continue;
      any = true;
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    }
    if (!any) return;
    for (const auto& x : v) {
      if (sgn(x) == 0) continue;
      mpz_class n = x.get_num() * (lcm_den / x.get_den());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(lcm_den, gcd_num);
    scale.canonicalize();
    for (const auto& x : v) {
      if (sgn(x) != 0) {
        if (sgn(x * scale) < 0) scale = -scale;
        break;
      }
    }
    for (auto& x : v) x *= scale;
    if (offset) *offset *= scale;
  }

  static std::string to_text(const Rational& x) { return x.get_str(); }
};

template <>
struct FieldOps<Fp> {
  static Fp zero(const Fp& like) { return Fp(0, like.p); }
  static Fp one(const Fp& like) { return Fp(1, like.p); }
  static bool is_zero(const Fp& x) { return x.v == 0; }

  // Canonical form over F_p: leading nonzero entry scaled to 1.
  static void make_canonical(std::vector<Fp>& v, Fp* offset) {
    for (const auto& x : v) {
      if (x.v != 0) {
        Fp inv = x.inverse();
        for (auto& y : v) y = y * inv;
        if (offset) *offset = *offset * inv;
        return;
      }
    }
  }

  static std::string to_text(const Fp& x) { return std::to_string(x.v); }
};

bool is_prime(long long n);

}  // namespace hyparr
