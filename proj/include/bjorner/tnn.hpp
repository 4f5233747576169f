#pragma once

// Total non-negativity by exhaustive exact minor enumeration.
//
// Minors are visited in a canonical order: by increasing size, then row sets
// in lexicographic order, then column sets in lexicographic order. The
// witness of a failure is the first negative minor in that order, whether
// the enumeration runs on one thread or many.

#include "bjorner/matrix.hpp"
#include "bjorner/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bjorner {

struct MinorWitness {
  std::vector<Index> rows;
  std::vector<Index> cols;
  Rational value;  // strictly negative

  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

struct TnnVerdict {
  bool holds = true;
  std::uint64_t checked_minors = 0;
  std::optional<MinorWitness> witness;

  friend bool operator==(const TnnVerdict&, const TnnVerdict&) = default;
};

struct TnnOptions {
  /// Largest minor order to examine; nullopt means min(rows, cols).
  std::optional<Index> max_order;
  /// Worker threads; 0 or 1 runs serially.
  unsigned threads = 1;
};

namespace detail {

/// Advances a strictly increasing k-subset of {0..n-1} to its lexicographic
/// successor; false once exhausted.
inline bool next_combination(std::vector<Index>& c, Index n) {
  const Index k = c.size();
  Index i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (Index j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<Index> first_combination(Index k) {
  std::vector<Index> c(k);
  for (Index i = 0; i < k; ++i) c[i] = i;
  return c;
}

inline std::uint64_t choose_u64(Index n, Index k) {
  return binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)).get_ui();
}

/// A matrix whose rows have been scaled by positive integers to clear
/// denominators. Row scaling by positive factors preserves minor signs, and
/// exact minor values are recovered by dividing out the scales.
class IntegralImage {
 public:
  explicit IntegralImage(const ExactMatrix& m) : rows_(m.rows()), cols_(m.cols()), scale_(m.rows(), 1) {
    entries_.reserve(rows_ * cols_);
    for (Index i = 0; i < rows_; ++i) {
      Integer l = 1;
      for (Index j = 0; j < cols_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
      for (Index j = 0; j < cols_; ++j) entries_.emplace_back(m(i, j).get_num() * (l / m(i, j).get_den()));
      scale_[i] = l;
    }
  }

  Rational minor(std::span<const Index> rows, std::span<const Index> cols, std::vector<Integer>& work) const {
    const Index k = rows.size();
    work.resize(k * k);
    Integer scale = 1;
    for (Index r = 0; r < k; ++r) {
      for (Index c = 0; c < k; ++c) work[r * k + c] = entries_[rows[r] * cols_ + cols[c]];
      scale *= scale_[rows[r]];
    }
    return make_rational(bareiss_determinant(work, k), scale);
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

 private:
  Index rows_, cols_;
  std::vector<Integer> entries_;
  std::vector<Integer> scale_;
};

/// One unit of work: every column set against a fixed (order, row set).
struct RowTask {
  Index order;
  std::vector<Index> rows;
  std::uint64_t minors_before;  // minors preceding this task in canonical order
};

struct TaskResult {
  std::optional<MinorWitness> witness;
  std::uint64_t position = 0;  // 1-based index of the witness among this task's minors
};

inline TaskResult run_task(const IntegralImage& img, const RowTask& task, std::vector<Integer>& work) {
  std::vector<Index> cols = first_combination(task.order);
  std::uint64_t pos = 0;
  do {
    ++pos;
    Rational v = img.minor(task.rows, cols, work);
    if (v < 0) return {MinorWitness{task.rows, cols, std::move(v)}, pos};
  } while (next_combination(cols, img.cols()));
  return {};
}

inline std::vector<RowTask> build_tasks(Index rows, Index cols, Index max_order) {
  std::vector<RowTask> tasks;
  std::uint64_t before = 0;
  for (Index k = 1; k <= max_order; ++k) {
    const std::uint64_t per_row_set = choose_u64(cols, k);
    std::vector<Index> r = first_combination(k);
    do {
      tasks.push_back({k, r, before});
      before += per_row_set;
    } while (next_combination(r, rows));
  }
  return tasks;
}

}  // namespace detail

/// Checks every square minor of order 1..max_order. Order-0 minors are not
/// counted.
inline TnnVerdict all_minors_nonnegative(const ExactMatrix& x, const TnnOptions& opts = {}) {
  Index top = std::min(x.rows(), x.cols());
  if (opts.max_order) top = std::min(top, *opts.max_order);
  TnnVerdict verdict;
  if (top == 0) return verdict;

  const detail::IntegralImage img(x);
  const std::vector<detail::RowTask> tasks = detail::build_tasks(x.rows(), x.cols(), top);
  const std::uint64_t total = tasks.back().minors_before + detail::choose_u64(x.cols(), top);

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(tasks.size())));
  std::vector<detail::TaskResult> results(tasks.size());

  if (workers == 1) {
    std::vector<Integer> work;
    for (Index t = 0; t < tasks.size(); ++t) {
      results[t] = detail::run_task(img, tasks[t], work);
      if (results[t].witness) break;
    }
  } else {
    // Tasks are claimed in canonical order; once a violation is known, no
    // worker starts a task that comes after it.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{tasks.size()};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        std::vector<Integer> work;
        for (;;) {
          const std::size_t t = next.fetch_add(1);
          if (t >= tasks.size() || t > first_bad.load()) return;
          results[t] = detail::run_task(img, tasks[t], work);
          if (results[t].witness) {
            std::size_t cur = first_bad.load();
            while (t < cur && !first_bad.compare_exchange_weak(cur, t)) {
            }
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (Index t = 0; t < tasks.size(); ++t) {
    if (results[t].witness) {
      verdict.holds = false;
      verdict.checked_minors = tasks[t].minors_before + results[t].position;
      verdict.witness = std::move(results[t].witness);
      return verdict;
    }
  }
  verdict.checked_minors = total;
  return verdict;
}

inline TnnVerdict all_minors_nonnegative(const ExactMatrix& x, std::optional<Index> max_order) {
  return all_minors_nonnegative(x, TnnOptions{max_order, 1});
}

/// Order-1 and order-2 minors only.
inline TnnVerdict two_by_two_check(const ExactMatrix& x) { return all_minors_nonnegative(x, Index{2}); }

/// Entry (i, j) becomes row_weights[i] * x(i, j) * col_weights[j].
inline ExactMatrix scale(const ExactMatrix& x, std::span<const Rational> row_weights,
                         std::span<const Rational> col_weights) {
  if (row_weights.size() != x.rows() || col_weights.size() != x.cols())
    throw std::invalid_argument("scale: weight lengths do not match a " + std::to_string(x.rows()) + "x" +
                                std::to_string(x.cols()) + " matrix");
  for (const auto& w : row_weights)
    if (w < 0) throw std::invalid_argument("scale: negative row weight " + w.get_str());
  for (const auto& w : col_weights)
    if (w < 0) throw std::invalid_argument("scale: negative column weight " + w.get_str());
  return ExactMatrix::generate(x.rows(), x.cols(),
                               [&](Index i, Index j) { return Rational(row_weights[i] * x(i, j) * col_weights[j]); });
}

/// Monotone lattice paths from (-2j, j) to (0, k) with unit steps right or up.
struct PathSpec {
  unsigned j = 0;
  unsigned k = 0;
};

/// Counts paths by dynamic programming over the grid; equals C(k+j, 2j).
inline Integer lattice_path_count(PathSpec spec) {
  if (spec.k < spec.j) return 0;
  const Index width = 2 * static_cast<Index>(spec.j) + 1;  // x = -2j..0
  const Index height = static_cast<Index>(spec.k - spec.j) + 1;  // y = j..k
  std::vector<Integer> ways(width * height, 0);
  ways[0] = 1;
  for (Index y = 0; y < height; ++y)
    for (Index x = 0; x < width; ++x) {
      if (x == 0 && y == 0) continue;
      Integer w = 0;
      if (x > 0) w += ways[y * width + x - 1];
      if (y > 0) w += ways[(y - 1) * width + x];
      ways[y * width + x] = std::move(w);
    }
  return ways.back();
}

struct ProductClosureReport {
  std::vector<TnnVerdict> factors;
  ExactMatrix product;
  TnnVerdict product_verdict;

  bool factors_hold() const {
    return std::all_of(factors.begin(), factors.end(), [](const TnnVerdict& v) { return v.holds; });
  }
  bool holds() const { return factors_hold() && product_verdict.holds; }
};

/// Certifies each factor and then their product by brute force.
inline ProductClosureReport product_closure_check(std::span<const ExactMatrix> factors, const TnnOptions& opts = {}) {
  if (factors.empty()) throw std::invalid_argument("product_closure_check: no factors");
  ProductClosureReport r;
  r.product = factors.front();
  for (std::size_t t = 1; t < factors.size(); ++t) r.product = mat_mul(r.product, factors[t]);
  for (const auto& f : factors) r.factors.push_back(all_minors_nonnegative(f, opts));
  r.product_verdict = all_minors_nonnegative(r.product, opts);
  return r;
}

}  // namespace bjorner
