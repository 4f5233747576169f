#pragma once

// Finite windows of the face-number matrices and of the factors in their
// totally non-negative factorization.
//
// Index conventions: rows of a face matrix run over i = 0..d (f_i counts the
// codimension-i faces, so f_0 = 1 is the polytope itself), columns over
// k = 0..floor(d/2). Square factors are stored reversed: entry (j, k) of the
// stored matrix is the infinite matrix's entry (n-j, n-k).

#include "bjorner/matrix.hpp"
#include "bjorner/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace bjorner {

enum class Parity { plus, minus };

inline const char* to_string(Parity p) { return p == Parity::plus ? "plus" : "minus"; }

/// (-1)^d as a parity: plus for even dimension.
inline Parity parity_of(unsigned d) { return d % 2 == 0 ? Parity::plus : Parity::minus; }

struct DimensionContext {
  unsigned d = 0;
  unsigned n = 0;
  Parity eps = Parity::plus;

  static DimensionContext of(unsigned d) { return {d, d / 2, parity_of(d)}; }
};

/// f = M g: entry (i, k) = C(d-k+1, d-i+1) - C(k, d-i+1).
inline ExactMatrix face_matrix_g(unsigned d) {
  const std::int64_t D = d;
  return ExactMatrix::generate(d + 1, d / 2 + 1, [D](Index i, Index k) {
    const auto I = static_cast<std::int64_t>(i), K = static_cast<std::int64_t>(k);
    return Rational(binom(D - K + 1, D - I + 1) - binom(K, D - I + 1));
  });
}

/// f = M gamma: entry (i, k) = sum_j C(k, i-k-j) C(d-2k, j) 2^j.
inline ExactMatrix face_matrix_gamma(unsigned d) {
  const std::int64_t D = d;
  return ExactMatrix::generate(d + 1, d / 2 + 1, [D](Index i, Index k) {
    const auto I = static_cast<std::int64_t>(i), K = static_cast<std::int64_t>(k);
    Integer s = 0;
    for (std::int64_t j = 0; j <= D - 2 * K; ++j)
      s += binom(K, I - K - j) * binom(D - 2 * K, j) * ipow(2, static_cast<unsigned long>(j));
    return Rational(s);
  });
}

/// Entry of the left factor: C(j+1, i-j) - C(j, i-j-1) for plus,
/// C(j+1, i-j) + C(j, i-j-1) for minus.
inline Integer left_factor_entry(Parity eps, std::int64_t i, std::int64_t j) {
  const Integer a = binom(j + 1, i - j);
  const Integer b = binom(j, i - j - 1);
  return eps == Parity::plus ? Integer(a - b) : Integer(a + b);
}

/// Window i = 0..rows-1, j = 0..cols-1 of the left factor.
inline ExactMatrix left_factor(Parity eps, Index rows, Index cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("left_factor: empty window");
  return ExactMatrix::generate(rows, cols, [eps](Index i, Index j) {
    return Rational(left_factor_entry(eps, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)));
  });
}

/// Unreversed right-factor entries. The plus variant is
/// (2k+1)/(2j+1) C(k+j, 2j), which is always an integer; the division is
/// checked.
inline Integer right_factor_entry(Parity eps, std::int64_t j, std::int64_t k) {
  if (eps == Parity::minus) return binom(k + j + 1, 2 * j + 1);
  const Integer num = Integer(2 * k + 1) * binom(k + j, 2 * j);
  const Integer den = 2 * j + 1;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("right_factor_entry: (2j+1) does not divide (2k+1) C(k+j, 2j) at j=" +
                           std::to_string(j) + ", k=" + std::to_string(k));
  return num / den;
}

/// (n+1) x (n+1), entry (j, k) = right factor at (n-j, n-k).
inline ExactMatrix g_right_factor(Parity eps, unsigned n) {
  const std::int64_t N = n;
  return ExactMatrix::generate(n + 1, n + 1, [eps, N](Index j, Index k) {
    return Rational(right_factor_entry(eps, N - static_cast<std::int64_t>(j), N - static_cast<std::int64_t>(k)));
  });
}

/// 4^(k-j) C(k, j), zero for k < j.
inline Integer gamma_factor_entry(std::int64_t j, std::int64_t k) {
  if (k < j) return 0;
  return ipow(4, static_cast<unsigned long>(k - j)) * binom(k, j);
}

/// (n+1) x (n+1), entry (j, k) = 4^(k-j) C(k, j) evaluated at (n-j, n-k).
inline ExactMatrix gamma_right_factor(unsigned n) {
  const std::int64_t N = n;
  return ExactMatrix::generate(n + 1, n + 1, [N](Index j, Index k) {
    return Rational(gamma_factor_entry(N - static_cast<std::int64_t>(j), N - static_cast<std::int64_t>(k)));
  });
}

/// g = T gamma with T(i, j) = C(d-2j, i-j) - C(d-2j, i-1-j) for j <= i.
/// Unit lower triangular.
inline ExactMatrix gamma_to_g_matrix(unsigned d) {
  const std::int64_t D = d;
  return ExactMatrix::generate(d / 2 + 1, d / 2 + 1, [D](Index i, Index j) {
    if (j > i) return Rational(0);
    const auto I = static_cast<std::int64_t>(i), J = static_cast<std::int64_t>(j);
    return Rational(binom(D - 2 * J, I - J) - binom(D - 2 * J, I - 1 - J));
  });
}

enum class FactorizationRoute { g_factor, gamma_factor, gamma_through_g };

inline const char* to_string(FactorizationRoute r) {
  switch (r) {
    case FactorizationRoute::g_factor: return "g";
    case FactorizationRoute::gamma_factor: return "gamma";
    case FactorizationRoute::gamma_through_g: return "gamma-through-g";
  }
  return "?";
}

struct EntryMismatch {
  FactorizationRoute route;
  Index row;
  Index col;
  Rational expected;
  Rational actual;
};

struct FactorizationReport {
  unsigned d = 0;
  bool g_factor_holds = false;        // M_g = A_eps * G_eps (reversed)
  bool gamma_factor_holds = false;    // M_gamma = A_eps * Gamma (reversed)
  bool gamma_through_g_holds = false; // M_gamma = M_g * T
  std::optional<EntryMismatch> first_mismatch;

  bool holds() const { return g_factor_holds && gamma_factor_holds && gamma_through_g_holds; }
};

namespace detail {

inline bool compare_into(const ExactMatrix& expected, const ExactMatrix& actual, FactorizationRoute route,
                         std::optional<EntryMismatch>& first) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols())
    throw std::logic_error("factorization: shape mismatch");
  for (Index i = 0; i < expected.rows(); ++i)
    for (Index j = 0; j < expected.cols(); ++j)
      if (expected(i, j) != actual(i, j)) {
        if (!first) first = EntryMismatch{route, i, j, expected(i, j), actual(i, j)};
        return false;
      }
  return true;
}

}  // namespace detail

/// Checks the three factorizations of the face matrices in dimension d.
/// A failing equality is reported, not thrown.
inline FactorizationReport verify_factorization(unsigned d) {
  const auto ctx = DimensionContext::of(d);
  const ExactMatrix a = left_factor(ctx.eps, d + 1, ctx.n + 1);
  const ExactMatrix mg = face_matrix_g(d);
  const ExactMatrix mgamma = face_matrix_gamma(d);

  FactorizationReport r;
  r.d = d;
  r.g_factor_holds =
      detail::compare_into(mg, a * g_right_factor(ctx.eps, ctx.n), FactorizationRoute::g_factor, r.first_mismatch);
  r.gamma_factor_holds =
      detail::compare_into(mgamma, a * gamma_right_factor(ctx.n), FactorizationRoute::gamma_factor, r.first_mismatch);
  r.gamma_through_g_holds = detail::compare_into(mgamma, mg * gamma_to_g_matrix(d),
                                                 FactorizationRoute::gamma_through_g, r.first_mismatch);
  return r;
}

}  // namespace bjorner
