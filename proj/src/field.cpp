#include "hyparr/field.hpp"

namespace hyparr {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw InputError("malformed rational '" + text + "'");
  bool seen_slash = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    char ch = text[k];
    if (ch == '/') {
      if (seen_slash || k == i || k + 1 == text.size())
        throw InputError("malformed rational '" + text + "'");
      seen_slash = true;
      continue;
    }
    if (ch < '0' || ch > '9') throw InputError("malformed rational '" + text + "'");
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw InputError("malformed rational '" + text + "'");
  if (sgn(Rational(q.get_den())) == 0) throw InputError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Fp Fp::inverse() const {
  if (v == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid on (v, p)
  long long a = v, b = p, x0 = 1, x1 = 0;
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p);
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hyparr
