#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace whittaker {

/// Exact base field. Every coefficient in the library is one of these.
using Rational = mpq_class;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Canonical `num/den` rendering; integers keep the `/1`.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts `n`, `-n`, `n/d` with optional surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) {
    throw DomainError("empty rational literal");
  }
  std::string s(text.substr(first, last - first + 1));
  auto slash = s.find('/');
  auto valid_integer = [](std::string_view digits) {
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty()) return false;
    for (char c : digits) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("malformed rational literal '" + s + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) {
    throw DomainError("zero denominator in '" + s + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Canonicalized n/d.
inline Rational ratio(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  Rational r(n);
  r /= d;
  return r;
}

inline Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

/// x^k for signed k; negative powers of zero are a domain error.
inline Rational power(const Rational& x, long k) {
  if (k < 0) {
    if (x == 0) throw DomainError("negative power of zero");
    Rational inv = 1 / x;
    return power(inv, -k);
  }
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace whittaker
