#include "fp/matrix.hpp"

#include <sstream>

namespace fp {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = ExtRat(1);
  return m;
}

bool Mat::all_finite() const {
  for (const auto& e : a)
    if (e.inf) return false;
  return true;
}

bool Mat::all_integer() const {
  for (const auto& e : a)
    if (e.inf || e.v.get_den() != 1) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::restricted(const std::vector<int>& idx) const {
  Mat r(int(idx.size()), int(idx.size()));
  for (size_t i = 0; i < idx.size(); i++)
    for (size_t j = 0; j < idx.size(); j++)
      r.at(int(i), int(j)) = at(idx[i], idx[j]);
  return r;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DomainError("shape mismatch in +");
  Mat r(x.rows, x.cols);
  for (size_t k = 0; k < x.a.size(); k++) r.a[k] = x.a[k] + y.a[k];
  return r;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw DomainError("shape mismatch in *");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; i++)
    for (int k = 0; k < x.cols; k++) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols; j++)
        r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
    }
  return r;
}

Mat parse_matrix(std::string_view text) {
  std::vector<std::vector<ExtRat>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<ExtRat> row;
    size_t pos = first;
    while (pos < line.size()) {
      size_t end = line.find_first_of(" \t\r", pos);
      if (end == std::string::npos) end = line.size();
      try {
        row.push_back(parse_ext_rat(std::string_view(line).substr(pos, end - pos)));
      } catch (const DomainError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno, int(pos) + 1);
      }
      pos = line.find_first_not_of(" \t\r", end);
      if (pos == std::string::npos) break;
    }
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError("ragged row: expected " + std::to_string(rows[0].size()) +
                           " entries, got " + std::to_string(row.size()),
                       lineno, 1);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix", lineno ? lineno : 1, 1);
  Mat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) m.at(i, j) = rows[i][j];
  return m;
}

Mat from_ints(const std::vector<std::vector<long>>& rows) {
  Mat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int i = 0; i < m.rows; i++) {
    if (int(rows[i].size()) != m.cols) throw DomainError("ragged integer matrix");
    for (int j = 0; j < m.cols; j++) {
      if (rows[i][j] < 0) throw DomainError("negative entry");
      m.at(i, j) = ExtRat(rows[i][j]);
    }
  }
  return m;
}

std::string format_matrix(const Mat& m) {
  std::string out;
  for (int i = 0; i < m.rows; i++) {
    for (int j = 0; j < m.cols; j++) {
      if (j) out += ' ';
      out += to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace fp
