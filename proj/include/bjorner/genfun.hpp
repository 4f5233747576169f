#pragma once

// Exact checks of the binomial identities behind the factorization and of
// the generating polynomials used to prove them.
//
//   F_a(z) = sum_{j=0}^{a} (2a+1)/(2a-2j+1) C(2a-j, 2a-2j) z^j
//   G_a(s) = F_a(s(s+1)) = (s+1)^(2a+1) - s^(2a+1)

#include "bjorner/poly.hpp"
#include "bjorner/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bjorner {

struct IdentityFailure {
  unsigned i = 0;
  unsigned k = 0;
  Integer lhs;
  Rational rhs;
};

struct IdentityReport {
  unsigned n = 0;
  std::vector<IdentityFailure> failures;  // sorted by (k, i)

  bool holds() const { return failures.empty(); }
};

enum class BinomialIdentity { even, odd };

/// Left side of the identity at (n, i, k): for `even`
///   C(2n-k+1, 2n-i+1) - C(k, 2n-i+1),
/// for `odd`
///   C(2n-k+2, 2n-i+2) - C(k, 2n-i+2).
inline Integer identity_lhs(BinomialIdentity which, unsigned n, unsigned i, unsigned k) {
  const std::int64_t N = n, I = i, K = k;
  const std::int64_t shift = which == BinomialIdentity::even ? 1 : 2;
  return binom(2 * N - K + shift, 2 * N - I + shift) - binom(K, 2 * N - I + shift);
}

/// Right side, summed over j = k..n: for `even`
///   C(j, i-j) (2n-2k+1)/(2n-2j+1) C(2n-(k+j), 2n-2j),
/// for `odd`
///   (i+1)/(j+1) C(j+1, i-j) C(2n-(k+j)+1, 2n-2j+1).
inline Rational identity_rhs(BinomialIdentity which, unsigned n, unsigned i, unsigned k) {
  const std::int64_t N = n, I = i, K = k;
  Rational sum = 0;
  for (std::int64_t j = K; j <= N; ++j) {
    if (which == BinomialIdentity::even) {
      sum += Rational(binom(j, I - j)) * make_rational(2 * N - 2 * K + 1, 2 * N - 2 * j + 1) *
             Rational(binom(2 * N - (K + j), 2 * N - 2 * j));
    } else {
      sum += make_rational(I + 1, j + 1) * Rational(binom(j + 1, I - j)) *
             Rational(binom(2 * N - (K + j) + 1, 2 * N - 2 * j + 1));
    }
  }
  return sum;
}

inline IdentityReport identity_check(BinomialIdentity which, unsigned n) {
  IdentityReport r;
  r.n = n;
  for (unsigned k = 0; k <= n; ++k)
    for (unsigned i = 0; i <= 2 * n + 1; ++i) {
      Integer lhs = identity_lhs(which, n, i, k);
      Rational rhs = identity_rhs(which, n, i, k);
      if (Rational(lhs) != rhs) r.failures.push_back({i, k, std::move(lhs), std::move(rhs)});
    }
  return r;
}

/// The even-dimension identity (d = 2n).
inline IdentityReport identity1_check(unsigned n) { return identity_check(BinomialIdentity::even, n); }

/// The odd-dimension identity (d = 2n+1).
inline IdentityReport identity2_check(unsigned n) { return identity_check(BinomialIdentity::odd, n); }

/// F_a(z). Coefficients are integers; that is checked.
inline Poly f_gen(unsigned a) {
  const std::int64_t A = a;
  std::vector<Rational> c(a + 1);
  for (std::int64_t j = 0; j <= A; ++j) {
    const Rational v = make_rational(2 * A + 1, 2 * A - 2 * j + 1) * Rational(binom(2 * A - j, 2 * A - 2 * j));
    c[static_cast<std::size_t>(j)] = Rational(require_integral(v, "f_gen coefficient"));
  }
  return Poly(std::move(c));
}

/// s(s+1) = s + s^2
inline Poly s_times_s_plus_1() { return Poly{0, 1, 1}; }

/// G_a(s) = F_a(s(s+1)).
inline Poly g_gen(unsigned a) { return poly_compose(f_gen(a), s_times_s_plus_1()); }

/// (s+1)^(2a+1) - s^(2a+1)
inline Poly g_closed_form(unsigned a) {
  return poly_pow(linear(1, 1), 2 * a + 1) - Poly::monomial(1, 2 * a + 1);
}

inline bool closed_form_check(unsigned a) { return g_gen(a) == g_closed_form(a); }

/// s(s+1) G'' - 2a(1+2s) G' + 2a(2a+1) G for G = G_a. Vanishes identically.
inline Poly ode_residual_g(unsigned a) {
  const Poly g = g_gen(a);
  const Poly g1 = poly_derivative(g);
  const Poly g2 = poly_derivative(g1);
  const Rational two_a = 2 * static_cast<long>(a);
  return s_times_s_plus_1() * g2 - linear(1, 2) * g1 * two_a + g * (two_a * (two_a + 1));
}

/// `printed` uses the first-order coefficient a(z - a(4z+1)); `corrected`
/// uses 2(z - a(4z+1)), which is what the chain rule gives from the G-ODE
/// via G' = (2s+1) F' and G'' = (4z+1) F'' + 2 F'.
enum class OdeVariant { printed, corrected };

/// z(4z+1) F'' + c(z) F' + 2a(2a+1) F for F = F_a and the chosen c(z).
inline Poly ode_residual_f(unsigned a, OdeVariant variant) {
  const Poly f = f_gen(a);
  const Poly f1 = poly_derivative(f);
  const Poly f2 = poly_derivative(f1);
  const Rational ra = static_cast<long>(a);
  const Poly z_minus_a_4z_plus_1 = Poly::x() - linear(1, 4) * ra;
  const Rational lead = variant == OdeVariant::printed ? ra : Rational(2);
  return Poly{0, 1, 4} * f2 + z_minus_a_4z_plus_1 * lead * f1 + f * (2 * ra * (2 * ra + 1));
}

/// sum_{i=0}^{2n+1} [C(2n-k+1, 2n-i+1) - C(k, 2n-i+1)] s^i.
inline Poly lhs_generating_poly(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("lhs_generating_poly: k = " + std::to_string(k) + " > n = " + std::to_string(n));
  std::vector<Rational> c(2 * n + 2);
  for (unsigned i = 0; i <= 2 * n + 1; ++i) c[i] = Rational(identity_lhs(BinomialIdentity::even, n, i, k));
  return Poly(std::move(c));
}

/// (s(s+1))^k G_{n-k}(s), the closed form the generating polynomial must
/// match.
inline Poly lhs_closed_form(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("lhs_closed_form: k > n");
  return poly_pow(s_times_s_plus_1(), k) * g_gen(n - k);
}

/// (s+1)^(2n+1) (s/(1+s))^k - s^(2n+1) ((1+s)/s)^k, cleared to
/// s^k (s+1)^(2n+1-k) - s^(2n+1-k) (s+1)^k.
inline Poly lhs_rational_form(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("lhs_rational_form: k > n");
  const Poly s1 = linear(1, 1);
  return Poly::monomial(1, k) * poly_pow(s1, 2 * n + 1 - k) - Poly::monomial(1, 2 * n + 1 - k) * poly_pow(s1, k);
}

/// sum_{i=0}^{2n+1} s^i * (right-hand side of the even identity at (i, k)).
inline Poly rhs_generating_poly(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("rhs_generating_poly: k > n");
  std::vector<Rational> c(2 * n + 2);
  for (unsigned i = 0; i <= 2 * n + 1; ++i) c[i] = identity_rhs(BinomialIdentity::even, n, i, k);
  return Poly(std::move(c));
}

}  // namespace bjorner
