#ifndef BRUHAT_SL2_LINEAR_OPERATOR_HPP
#define BRUHAT_SL2_LINEAR_OPERATOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bruhat_sl2/bigint.hpp"
#include "bruhat_sl2/errors.hpp"

namespace bruhat_sl2 {

/// Sparse exact-integer matrix.  Entry (r, c) is the coefficient of basis
/// element r in the image of basis element c.  Entries iterate in
/// deterministic row-major order; zeros are never stored.
class SparseIntMatrix {
 public:
  explicit SparseIntMatrix(int dim) : rows_(dim), cols_(dim) {}
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const Int& v) {
    check_range(r, c);
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  void set(int r, int c, const Int& v) {
    check_range(r, c);
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = v;
  }

  const Int& at(int r, int c) const {
    static const Int zero{0};
    auto it = entries_.find({r, c});
    return it == entries_.end() ? zero : it->second;
  }

  const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  SparseIntMatrix operator*(const SparseIntMatrix& other) const {
    if (cols_ != other.rows_)
      throw DimensionMismatch("matrix product: " + std::to_string(cols_) + " vs " +
                              std::to_string(other.rows_));
    SparseIntMatrix out(rows_, other.cols_);
    for (const auto& [rc, a] : entries_) {
      const auto [i, k] = rc;
      // walk row k of `other`
      for (auto it = other.entries_.lower_bound({k, 0});
           it != other.entries_.end() && it->first.first == k; ++it) {
        out.add(i, it->first.second, a * it->second);
      }
    }
    return out;
  }

  SparseIntMatrix operator+(const SparseIntMatrix& other) const {
    check_same_shape(other, "sum");
    SparseIntMatrix out = *this;
    for (const auto& [rc, v] : other.entries_) out.add(rc.first, rc.second, v);
    return out;
  }

  SparseIntMatrix operator-(const SparseIntMatrix& other) const {
    check_same_shape(other, "difference");
    SparseIntMatrix out = *this;
    for (const auto& [rc, v] : other.entries_) out.add(rc.first, rc.second, -v);
    return out;
  }

  SparseIntMatrix scaled(const Int& factor) const {
    SparseIntMatrix out(rows_, cols_);
    if (factor == 0) return out;
    for (const auto& [rc, v] : entries_) out.entries_.emplace(rc, v * factor);
    return out;
  }

  /// y = M x over exact integers.
  std::vector<Int> apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw DimensionMismatch("apply: vector length " + std::to_string(x.size()) + " vs " +
                              std::to_string(cols_) + " columns");
    std::vector<Int> y(static_cast<std::size_t>(rows_), Int{0});
    for (const auto& [rc, v] : entries_) {
      const auto& xc = x[static_cast<std::size_t>(rc.second)];
      if (xc != 0) y[static_cast<std::size_t>(rc.first)] += v * xc;
    }
    return y;
  }

  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_range(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw DimensionMismatch("entry (" + std::to_string(r) + "," + std::to_string(c) +
                              ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  void check_same_shape(const SparseIntMatrix& other, const char* what) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw DimensionMismatch(std::string("matrix ") + what + ": shape mismatch");
  }

  int rows_;
  int cols_;
  std::map<std::pair<int, int>, Int> entries_;
};

/// [X, Y] = XY - YX.
inline SparseIntMatrix commutator(const SparseIntMatrix& x, const SparseIntMatrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw DimensionMismatch("commutator requires equal square matrices");
  return x * y - y * x;
}

/// Dense row-major exact-integer matrix, used for rank computations on
/// restricted operator powers.
using IntMatrix = std::vector<std::vector<Int>>;

/// Rank over the rationals by fraction-free (Bareiss) elimination with
/// partial pivoting on magnitude.  Intermediate entries are minors of the
/// input, so every division below is exact.
inline int exact_rank(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols)
      throw DimensionMismatch("exact_rank: ragged matrix");

  Int prev{1};
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot_row = -1;
    for (int i = rank; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == 0) continue;
      if (pivot_row < 0 ||
          cmp(abs(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]),
              abs(m[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(c)])) > 0)
        pivot_row = i;
    }
    if (pivot_row < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot_row)]);
    const Int pivot = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
    for (int i = rank + 1; i < rows; ++i) {
      auto& row_i = m[static_cast<std::size_t>(i)];
      const Int head = row_i[static_cast<std::size_t>(c)];
      for (int j = c + 1; j < cols; ++j) {
        row_i[static_cast<std::size_t>(j)] =
            exact_div(row_i[static_cast<std::size_t>(j)] * pivot -
                          head * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)],
                      prev, "bareiss step");
      }
      row_i[static_cast<std::size_t>(c)] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace bruhat_sl2

#endif  // BRUHAT_SL2_LINEAR_OPERATOR_HPP
