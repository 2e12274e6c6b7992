#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fp/rational.hpp"

namespace fp {

// Dense square-or-rectangular matrix over the extended nonnegative rationals.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<ExtRat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  static Mat identity(int n);

  ExtRat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const ExtRat& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  bool square() const { return rows == cols; }
  bool all_finite() const;
  bool all_integer() const;  // finite with denominator 1
  Mat transpose() const;
  Mat restricted(const std::vector<int>& idx) const;  // principal submatrix

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator*(const Mat& x, const Mat& y);
};

// One row per line, entries whitespace-separated, "inf" allowed.
// Blank lines and lines starting with '#' are skipped.
Mat parse_matrix(std::string_view text);

Mat from_ints(const std::vector<std::vector<long>>& rows);
std::string format_matrix(const Mat& m);  // same text format back

}  // namespace fp
