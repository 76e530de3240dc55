#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hoburg {

/// Rectangular matrix stored by diagonals.  Entry (i, j) is storable iff
/// -lower <= j - i <= upper; everything outside the declared band reads as
/// zero.  Works for both exact (Rational) and floating entries.
template <typename T>
class BandedMatrix {
 public:
  BandedMatrix(int rows, int cols, int lower, int upper)
      : rows_(rows), cols_(cols), lower_(lower), upper_(upper) {
    if (rows < 1 || cols < 1 || lower < 0 || upper < 0) {
      throw std::invalid_argument("banded matrix with non-positive shape");
    }
    data_.assign(static_cast<size_t>(rows_) * width(), T{});
  }

  static BandedMatrix identity(int n) {
    BandedMatrix a(n, n, 0, 0);
    for (int i = 0; i < n; ++i) a.set(i, i, T{1});
    return a;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int lower_bandwidth() const { return lower_; }
  int upper_bandwidth() const { return upper_; }

  T at(int i, int j) const {
    check_index(i, j);
    if (j - i < -lower_ || j - i > upper_) return T{};
    return data_[slot(i, j)];
  }

  void set(int i, int j, const T& v) {
    check_index(i, j);
    if (j - i < -lower_ || j - i > upper_) {
      if (v == T{}) return;
      throw std::out_of_range("entry outside the declared band");
    }
    data_[slot(i, j)] = v;
  }

  void add(int i, int j, const T& v) { set(i, j, at(i, j) + v); }

  /// Smallest (lower, upper) half-bandwidths containing every nonzero.
  std::pair<int, int> tight_bandwidth() const {
    int lo = 0, up = 0;
    for (int i = 0; i < rows_; ++i) {
      for (int j = std::max(0, i - lower_); j <= std::min(cols_ - 1, i + upper_); ++j) {
        if (!(data_[slot(i, j)] == T{})) {
          lo = std::max(lo, i - j);
          up = std::max(up, j - i);
        }
      }
    }
    return {lo, up};
  }

  /// Largest |j - i| over nonzeros of row i (0 for an empty row).
  int row_reach(int i) const {
    int reach = 0;
    for (int j = std::max(0, i - lower_); j <= std::min(cols_ - 1, i + upper_); ++j) {
      if (!(data_[slot(i, j)] == T{})) reach = std::max(reach, std::abs(j - i));
    }
    return reach;
  }

  std::vector<T> multiply_vector(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) {
      throw std::invalid_argument("vector length does not match matrix columns");
    }
    std::vector<T> out(static_cast<size_t>(rows_), T{});
    for (int i = 0; i < rows_; ++i) {
      T s{};
      for (int j = std::max(0, i - lower_); j <= std::min(cols_ - 1, i + upper_); ++j) {
        s = s + data_[slot(i, j)] * v[j];
      }
      out[i] = s;
    }
    return out;
  }

  BandedMatrix multiply(const BandedMatrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("banded product shape mismatch");
    int lo = std::min(lower_ + b.lower_, rows_ - 1);
    int up = std::min(upper_ + b.upper_, b.cols_ - 1);
    BandedMatrix c(rows_, b.cols_, lo, up);
    for (int i = 0; i < rows_; ++i) {
      int kmin = std::max(0, i - lower_);
      int kmax = std::min(cols_ - 1, i + upper_);
      for (int k = kmin; k <= kmax; ++k) {
        T aik = data_[slot(i, k)];
        if (aik == T{}) continue;
        int jmin = std::max(0, k - b.lower_);
        int jmax = std::min(b.cols_ - 1, k + b.upper_);
        for (int j = jmin; j <= jmax; ++j) {
          T bkj = b.data_[b.slot(k, j)];
          if (bkj == T{}) continue;
          c.add(i, j, aik * bkj);
        }
      }
    }
    return c;
  }

  /// Reverse both row and column order (conjugation by the exchange
  /// permutation).  Square matrices only.
  BandedMatrix flipped() const {
    if (rows_ != cols_) throw std::invalid_argument("flip of a non-square matrix");
    BandedMatrix c(rows_, cols_, upper_, lower_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = std::max(0, i - lower_); j <= std::min(cols_ - 1, i + upper_); ++j) {
        c.set(rows_ - 1 - i, cols_ - 1 - j, data_[slot(i, j)]);
      }
    }
    return c;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
      for (int j = std::max(0, i - lower_); j <= std::min(cols_ - 1, i + upper_); ++j) {
        if (!(at(i, j) == at(j, i))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const BandedMatrix& a, const BandedMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int i = 0; i < a.rows_; ++i) {
      int jmin = std::max(0, i - std::max(a.lower_, b.lower_));
      int jmax = std::min(a.cols_ - 1, i + std::max(a.upper_, b.upper_));
      for (int j = jmin; j <= jmax; ++j) {
        if (!(a.at(i, j) == b.at(i, j))) return false;
      }
    }
    return true;
  }

 private:
  int width() const { return lower_ + upper_ + 1; }
  size_t slot(int i, int j) const {
    return static_cast<size_t>(i) * width() + (j - i + lower_);
  }
  void check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
      throw std::out_of_range("banded matrix index out of range");
    }
  }

  int rows_, cols_, lower_, upper_;
  std::vector<T> data_;
};

/// One explicitly specified row: 0-based row index plus (offset from the
/// diagonal, coefficient) pairs.
template <typename T>
struct BandRowSpec {
  int row = 0;
  std::vector<std::pair<int, T>> entries;
};

/// Build an m-by-m banded matrix from explicit boundary rows and a repeated
/// interior pattern.  Rows not listed get the pattern centred on the
/// diagonal, clipped at the matrix edges.
template <typename T>
BandedMatrix<T> band_from_rows(const std::vector<BandRowSpec<T>>& boundary_rows,
                               const std::vector<std::pair<int, T>>& interior_pattern,
                               int m) {
  int lo = 0, up = 0;
  for (const auto& [off, coeff] : interior_pattern) {
    lo = std::max(lo, -off);
    up = std::max(up, off);
  }
  std::vector<bool> explicit_row(static_cast<size_t>(m), false);
  for (const auto& spec : boundary_rows) {
    if (spec.row < 0 || spec.row >= m) throw std::out_of_range("row index out of range");
    explicit_row[spec.row] = true;
    for (const auto& [off, coeff] : spec.entries) {
      int col = spec.row + off;
      if (col < 0 || col >= m) throw std::out_of_range("offset outside the matrix");
      lo = std::max(lo, -off);
      up = std::max(up, off);
    }
  }
  BandedMatrix<T> a(m, m, std::min(lo, m - 1), std::min(up, m - 1));
  for (const auto& spec : boundary_rows) {
    for (const auto& [off, coeff] : spec.entries) a.set(spec.row, spec.row + off, coeff);
  }
  for (int i = 0; i < m; ++i) {
    if (explicit_row[i]) continue;
    for (const auto& [off, coeff] : interior_pattern) {
      int col = i + off;
      if (col < 0 || col >= m) continue;
      a.set(i, col, coeff);
    }
  }
  return a;
}

}  // namespace hoburg
