#pragma once

// Conversions among f-, g-, h- and gamma-sequences of a d-dimensional simple
// polytope. The f-polynomial is written sum_i f_i t^(d-i); f_0 = 1 counts the
// polytope itself and f_d is the number of vertices.

#include "bjorner/matrices.hpp"
#include "bjorner/matrix.hpp"
#include "bjorner/poly.hpp"
#include "bjorner/scalar.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bjorner {

using Sequence = std::vector<Integer>;

namespace detail {

inline void require_length(std::span<const Integer> v, std::size_t expected, const char* what) {
  if (v.size() != expected)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) +
                                " values, got " + std::to_string(v.size()));
}

inline void require_basis_index(unsigned d, unsigned i, const char* what) {
  if (i > d / 2)
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) + " exceeds floor(d/2) = " +
                                std::to_string(d / 2));
}

/// f_i = coefficient of t^(d-i).
inline Sequence read_face_numbers(const Poly& f, unsigned d) {
  Sequence out(d + 1);
  for (unsigned i = 0; i <= d; ++i) out[i] = require_integral(f.coeff(d - i), "face number");
  return out;
}

}  // namespace detail

/// sum_{q=i}^{d-i} (1+t)^q
inline Poly u_basis(unsigned d, unsigned i) {
  detail::require_basis_index(d, i, "u_basis");
  const Poly one_plus_t = linear(1, 1);
  Poly acc;
  Poly term = poly_pow(one_plus_t, i);
  for (unsigned q = i; q <= d - i; ++q) {
    acc += term;
    term *= one_plus_t;
  }
  return acc;
}

/// (t+1)^i (t+2)^(d-2i)
inline Poly v_basis(unsigned d, unsigned i) {
  detail::require_basis_index(d, i, "v_basis");
  return poly_pow(linear(1, 1), i) * poly_pow(linear(2, 1), d - 2 * i);
}

/// Polynomial route: expand sum_k g_k u_k(t) and read off coefficients.
inline Sequence f_from_g_expansion(unsigned d, std::span<const Integer> g) {
  detail::require_length(g, d / 2 + 1, "f_from_g");
  Poly f;
  for (unsigned k = 0; k < g.size(); ++k) f += u_basis(d, k) * Rational(g[k]);
  return detail::read_face_numbers(f, d);
}

/// Matrix route: face_matrix_g(d) * g.
inline Sequence f_from_g_matrix(unsigned d, std::span<const Integer> g) {
  detail::require_length(g, d / 2 + 1, "f_from_g");
  return mat_vec(face_matrix_g(d), g);
}

/// Face numbers from g. Computes both routes and insists they agree.
inline Sequence f_from_g(unsigned d, std::span<const Integer> g) {
  Sequence f = f_from_g_expansion(d, g);
  if (f != f_from_g_matrix(d, g)) throw std::logic_error("f_from_g: expansion and matrix routes disagree");
  return f;
}

inline Sequence f_from_gamma_expansion(unsigned d, std::span<const Integer> gamma) {
  detail::require_length(gamma, d / 2 + 1, "f_from_gamma");
  Poly f;
  for (unsigned k = 0; k < gamma.size(); ++k) f += v_basis(d, k) * Rational(gamma[k]);
  return detail::read_face_numbers(f, d);
}

inline Sequence f_from_gamma_matrix(unsigned d, std::span<const Integer> gamma) {
  detail::require_length(gamma, d / 2 + 1, "f_from_gamma");
  return mat_vec(face_matrix_gamma(d), gamma);
}

inline Sequence f_from_gamma(unsigned d, std::span<const Integer> gamma) {
  Sequence f = f_from_gamma_expansion(d, gamma);
  if (f != f_from_gamma_matrix(d, gamma))
    throw std::logic_error("f_from_gamma: expansion and matrix routes disagree");
  return f;
}

inline Sequence g_from_gamma(unsigned d, std::span<const Integer> gamma) {
  detail::require_length(gamma, d / 2 + 1, "g_from_gamma");
  return mat_vec(gamma_to_g_matrix(d), gamma);
}

/// h_i = sum_{k <= min(i, d-i)} g_k
inline Sequence h_from_g(unsigned d, std::span<const Integer> g) {
  detail::require_length(g, d / 2 + 1, "h_from_g");
  Sequence h(d + 1);
  for (unsigned i = 0; i <= d; ++i) {
    const unsigned top = std::min(i, d - i);
    for (unsigned k = 0; k <= top; ++k) h[i] += g[k];
  }
  return h;
}

inline bool is_palindromic(std::span<const Integer> v) {
  for (std::size_t i = 0; i < v.size() / 2; ++i)
    if (v[i] != v[v.size() - 1 - i]) return false;
  return true;
}

inline Sequence g_from_h(unsigned d, std::span<const Integer> h) {
  detail::require_length(h, d + 1, "g_from_h");
  if (!is_palindromic(h)) throw std::invalid_argument("g_from_h: h is not palindromic");
  Sequence g(d / 2 + 1);
  g[0] = h[0];
  for (unsigned k = 1; k < g.size(); ++k) g[k] = h[k] - h[k - 1];
  return g;
}

/// h from f directly: coefficients of sum_i f_i (s-1)^(d-i), listed so that
/// h_q is the coefficient of s^q.
inline Sequence h_from_f(unsigned d, std::span<const Integer> f) {
  detail::require_length(f, d + 1, "h_from_f");
  const Poly s_minus_1 = linear(-1, 1);
  Poly acc;
  for (unsigned i = 0; i <= d; ++i) acc += poly_pow(s_minus_1, d - i) * Rational(f[i]);
  Sequence h(d + 1);
  for (unsigned q = 0; q <= d; ++q) h[q] = require_integral(acc.coeff(q), "h_from_f");
  return h;
}

/// Recovers g from the first n+1 face numbers. Rows 0..n of the g-matrix are
/// unit lower triangular, so this is exact forward substitution.
inline Sequence recover_g(unsigned d, std::span<const Integer> f) {
  detail::require_length(f, d + 1, "recover_g");
  const ExactMatrix m = face_matrix_g(d);
  Sequence g(d / 2 + 1);
  for (Index k = 0; k < g.size(); ++k) {
    Rational r = f[k];
    for (Index j = 0; j < k; ++j) r -= m(k, j) * g[j];
    g[k] = require_integral(r / m(k, k), "recover_g");
  }
  return g;
}

/// True iff f lies in the image of the g-matrix, i.e. satisfies the
/// Dehn-Somerville relations.
inline bool check_dehn_somerville(unsigned d, std::span<const Integer> f) {
  detail::require_length(f, d + 1, "check_dehn_somerville");
  const Sequence g = recover_g(d, f);
  return f_from_g_matrix(d, g) == Sequence(f.begin(), f.end());
}

/// Face data with whichever sequences are known.
struct FaceData {
  unsigned d = 0;
  std::optional<Sequence> f;
  std::optional<Sequence> g;
  std::optional<Sequence> h;
  std::optional<Sequence> gamma;
};

struct CatalogueEntry {
  std::string name;
  std::string parameters;
  unsigned d = 0;
  Sequence g;
  std::optional<Sequence> gamma;
  Sequence expected_f;
  std::string note;

  FaceData face_data() const { return {d, expected_f, g, h_from_g(d, g), gamma}; }
};

inline CatalogueEntry catalogue_simplex(unsigned d) {
  CatalogueEntry e;
  e.name = "simplex";
  e.parameters = "d=" + std::to_string(d);
  e.d = d;
  e.g.assign(d / 2 + 1, 0);
  e.g[0] = 1;
  e.expected_f = f_from_g(d, e.g);
  return e;
}

inline CatalogueEntry catalogue_cube(unsigned d) {
  CatalogueEntry e;
  e.name = "cube";
  e.parameters = "d=" + std::to_string(d);
  e.d = d;
  Sequence gamma(d / 2 + 1, 0);
  gamma[0] = 1;
  e.g = g_from_gamma(d, gamma);
  e.expected_f = f_from_g(d, e.g);
  if (e.expected_f != f_from_gamma(d, gamma)) throw std::logic_error("catalogue_cube: gamma and g disagree");
  e.gamma = std::move(gamma);
  return e;
}

/// The m-gon. Its gamma-vector (1, m-4) is stored only when non-negative;
/// the triangle is not flag.
inline CatalogueEntry catalogue_polygon(unsigned m) {
  if (m < 3) throw std::invalid_argument("catalogue_polygon: need at least 3 vertices, got " + std::to_string(m));
  CatalogueEntry e;
  e.name = "polygon";
  e.parameters = "m=" + std::to_string(m);
  e.d = 2;
  e.g = {1, Integer(m) - 3};
  e.expected_f = f_from_g(2, e.g);
  if (m >= 4) {
    e.gamma = Sequence{1, Integer(m) - 4};
    if (g_from_gamma(2, *e.gamma) != e.g) throw std::logic_error("catalogue_polygon: gamma and g disagree");
  } else {
    e.note = "triangle is not flag; gamma_1 = -1 omitted";
  }
  return e;
}

inline CatalogueEntry catalogue(std::string_view name, unsigned param) {
  if (name == "simplex") return catalogue_simplex(param);
  if (name == "cube") return catalogue_cube(param);
  if (name == "polygon") return catalogue_polygon(param);
  throw std::invalid_argument("catalogue: unknown polytope '" + std::string(name) + "'");
}

}  // namespace bjorner
