#pragma once

// Exact scalars. Everything in the library computes over these; there is no
// floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bjorner {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced fraction num/den. Throws on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// Numerator of an integral rational; throws std::logic_error otherwise.
/// Used at module boundaries where a value is known to be an integer.
inline Integer require_integral(const Rational& r, std::string_view what) {
  if (!is_integral(r))
    throw std::logic_error(std::string(what) + ": expected an integer, got " +
                           r.get_str());
  return r.get_num();
}

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

/// "p/q", or just "p" when the value is an integer.
inline std::string to_decimal(const Rational& v) { return v.get_str(10); }

/// Parses a decimal integer ("-12", "+3", "40"). Throws std::invalid_argument.
inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || s == "-")
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = (s.front() == '-') ? 1 : 0; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return Integer(s, 10);
}

/// Parses "p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n. Negative n is
/// rejected; none of the matrices here ever needs a negative upper index.
inline Integer binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binom: negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Power of an integer base with natural exponent.
inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace bjorner
