#include "chromapos/rational.hpp"

#include <vector>

#include "chromapos/error.hpp"

namespace chromapos {

Integer factorial(long n) {
  if (n < 0) fail(ErrorKind::BadParameter, "factorial of negative argument");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Integer multinomial(const std::vector<long>& r) {
  long total = 0;
  for (long x : r) {
    if (x < 0) return 0;
    total += x;
  }
  Integer out = factorial(total);
  for (long x : r) out /= factorial(x);
  return out;
}

Integer int_pow(long base, long exponent) {
  if (exponent < 0) fail(ErrorKind::BadParameter, "int_pow with negative exponent");
  if (exponent == 0) return 1;
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(exponent));
  if (base < 0 && exponent % 2 == 1) out = -out;
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::BadParameter, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) {
    fail(ErrorKind::Internal, "expected integral value, got " + to_string(q));
  }
  return q.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_text(const std::string& text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty rational literal");
  // Accept "p" and "p/q" with an optional leading sign.
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer num(text, 10);
      return Rational(num);
    }
    Integer num(text.substr(0, slash), 10);
    Integer den(text.substr(slash + 1), 10);
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ParseError, "bad rational literal: " + text);
  }
}

}  // namespace chromapos
