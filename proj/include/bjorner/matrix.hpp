#pragma once

#include "bjorner/scalar.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bjorner {

using Index = std::size_t;

/// Dense rectangular matrix of rationals, row-major, immutable once built.
class ExactMatrix {
 public:
  ExactMatrix() = default;

  ExactMatrix(Index rows, Index cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("ExactMatrix: " + std::to_string(entries_.size()) +
                                  " entries for a " + std::to_string(rows_) + "x" +
                                  std::to_string(cols_) + " matrix");
  }

  /// Nested-list construction; every row must have the same length.
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged rows");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  /// Builds entry (i, j) as fn(i, j).
  template <typename Fn>
  static ExactMatrix generate(Index rows, Index cols, Fn&& fn) {
    std::vector<Rational> e;
    e.reserve(rows * cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) e.emplace_back(fn(i, j));
    return ExactMatrix(rows, cols, std::move(e));
  }

  static ExactMatrix identity(Index n) {
    return generate(n, n, [](Index i, Index j) { return Rational(i == j ? 1 : 0); });
  }

  static ExactMatrix zero(Index rows, Index cols) {
    return ExactMatrix(rows, cols, std::vector<Rational>(rows * cols));
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(Index i, Index j) const { return entries_[i * cols_ + j]; }

  const Rational& at(Index i, Index j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("ExactMatrix::at(" + std::to_string(i) + ", " + std::to_string(j) + ")");
    return (*this)(i, j);
  }

  std::span<const Rational> entries() const { return entries_; }

  bool is_integral() const {
    for (const auto& e : entries_)
      if (!bjorner::is_integral(e)) return false;
    return true;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
    os << '[';
    for (Index i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (Index j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j).get_str();
      os << ']';
    }
    return os << ']';
  }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Rational> entries_;
};

inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  return ExactMatrix::generate(a.rows(), b.cols(), [&](Index i, Index j) {
    Rational s = 0;
    for (Index t = 0; t < a.cols(); ++t) s += a(i, t) * b(t, j);
    return s;
  });
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

/// Matrix times column vector of integers; the product must be integral.
inline std::vector<Integer> mat_vec(const ExactMatrix& m, std::span<const Integer> v) {
  if (m.cols() != v.size())
    throw std::invalid_argument("mat_vec: matrix has " + std::to_string(m.cols()) + " columns, vector has " +
                                std::to_string(v.size()) + " entries");
  std::vector<Integer> out(m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (Index j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = require_integral(s, "mat_vec");
  }
  return out;
}

/// Entry (i, j) of the result is entry (rows-1-i, cols-1-j) of x.
inline ExactMatrix reverse_both(const ExactMatrix& x) {
  return ExactMatrix::generate(x.rows(), x.cols(),
                               [&](Index i, Index j) { return x(x.rows() - 1 - i, x.cols() - 1 - j); });
}

inline ExactMatrix transpose(const ExactMatrix& x) {
  return ExactMatrix::generate(x.cols(), x.rows(), [&](Index i, Index j) { return x(j, i); });
}

namespace detail {

/// Determinant of the n x n integer matrix stored row-major in `a`, which is
/// overwritten. Bareiss elimination: every division by the previous pivot is
/// exact, and a non-exact one throws std::logic_error instead of rounding.
inline Integer bareiss_determinant(std::span<Integer> a, Index n) {
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      Index p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (Index j = k; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    Integer t;
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Integer& x = a[i * n + j];
        mpz_mul(t.get_mpz_t(), x.get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(t.get_mpz_t(), a[i * n + k].get_mpz_t(), a[k * n + j].get_mpz_t());
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("bareiss: non-integral intermediate");
        mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
  }
  Integer det = a[n * n - 1];
  if (sign < 0) det = -det;
  return det;
}

/// Integer image of the selected submatrix after scaling each row by the lcm
/// of its denominators. Returns the product of the row scales.
inline Integer clear_denominators(const ExactMatrix& m, std::span<const Index> rows,
                                  std::span<const Index> cols, std::vector<Integer>& out) {
  const Index n = rows.size();
  out.assign(n * cols.size(), Integer(0));
  Integer scale = 1;
  for (Index r = 0; r < n; ++r) {
    Integer l = 1;
    for (Index c : cols) {
      const Integer& den = m(rows[r], c).get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (Index c = 0; c < cols.size(); ++c) {
      const Rational& e = m(rows[r], cols[c]);
      out[r * cols.size() + c] = e.get_num() * (l / e.get_den());
    }
    scale *= l;
  }
  return scale;
}

inline void check_index_set(std::span<const Index> idx, Index bound, const char* what) {
  for (Index t = 0; t < idx.size(); ++t) {
    if (idx[t] >= bound)
      throw std::out_of_range(std::string("minor: ") + what + " index " + std::to_string(idx[t]) +
                              " out of range " + std::to_string(bound));
    if (t && idx[t] <= idx[t - 1])
      throw std::invalid_argument(std::string("minor: ") + what + " indices must be strictly increasing");
  }
}

}  // namespace detail

/// Determinant of the square submatrix picked out by row_idx x col_idx.
inline Rational minor(const ExactMatrix& a, std::span<const Index> row_idx, std::span<const Index> col_idx) {
  if (row_idx.size() != col_idx.size())
    throw std::invalid_argument("minor: " + std::to_string(row_idx.size()) + " rows but " +
                                std::to_string(col_idx.size()) + " columns");
  if (row_idx.empty()) throw std::invalid_argument("minor: empty index set");
  detail::check_index_set(row_idx, a.rows(), "row");
  detail::check_index_set(col_idx, a.cols(), "column");
  std::vector<Integer> work;
  const Integer scale = detail::clear_denominators(a, row_idx, col_idx, work);
  const Integer det = detail::bareiss_determinant(work, row_idx.size());
  return make_rational(det, scale);
}

inline Rational minor(const ExactMatrix& a, std::initializer_list<Index> row_idx,
                      std::initializer_list<Index> col_idx) {
  return minor(a, std::span<const Index>(row_idx.begin(), row_idx.size()),
               std::span<const Index>(col_idx.begin(), col_idx.size()));
}

inline Rational determinant(const ExactMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("determinant: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " is not square");
  if (a.rows() == 0) return 1;
  std::vector<Index> all(a.rows());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  return minor(a, all, all);
}

}  // namespace bjorner
