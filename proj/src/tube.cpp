#include "fp/tube.hpp"

#include <algorithm>

#include "fp/error.hpp"

namespace fp::tube {

namespace {

void check_obj(int r, Obj o) {
  if (r < 1) throw DomainError("tube rank must be positive");
  if (o.i < 1 || o.i > r) throw DomainError("mouth position out of range");
  if (o.j < 1 || o.j > r) throw DomainError("object length out of the 1..r window");
}

using Table = std::vector<std::vector<long>>;

Table zero_table(int n) { return Table(n, std::vector<long>(n, 0)); }

// += P^k on block (bm, bn), 1-based blocks; P[a][b] = 1 iff a = b+1 (mod r)
void add_shift_power(Table& t, int r, int bm, int bn, int k) {
  const int row0 = (bm - 1) * r, col0 = (bn - 1) * r;
  for (int b = 0; b < r; b++) t[row0 + ((b + k) % r + r) % r][col0 + b] += 1;
}

void add_shift_range(Table& t, int r, int bm, int bn, int klo, int khi) {
  for (int k = klo; k <= khi; k++) add_shift_power(t, r, bm, bn, k);
}

Table hom_table_blocks(int r) {
  Table t = zero_table(r * r);
  for (int m = 1; m <= r; m++)
    for (int n = 1; n <= r; n++) add_shift_range(t, r, m, n, std::max(0, n - m), n - 1);
  return t;
}

Table ext_table_blocks(int r) {
  Table t = zero_table(r * r);
  for (int m = 1; m <= r; m++)
    for (int n = 1; n <= r; n++) add_shift_range(t, r, m, n, r - m, r - 1 - std::max(0, m - n));
  return t;
}

Table f_table(int r) {
  Table t = zero_table(r * r);
  for (int m = 1; m <= r; m++)
    for (int n = 1; n <= r; n++) add_shift_power(t, r, m, n, r - m);
  return t;
}

Table g_table(int r) {
  Table t = zero_table(r * r);
  for (int m = 1; m <= r; m++)
    for (int n = 1; n <= r; n++) add_shift_power(t, r, m, n, std::min(r, r - m + n));
  return t;
}

// entry (a, b) = dim from object b to object a
Table elementwise(int r, int (*dim)(int, Obj, Obj)) {
  const int n2 = r * r;
  Table t = zero_table(n2);
  for (int b = 0; b < n2; b++) {
    const Obj src{b % r + 1, b / r + 1};
    for (int a = 0; a < n2; a++) {
      const Obj tgt{a % r + 1, a / r + 1};
      t[a][b] = dim(r, src, tgt);
    }
  }
  return t;
}

}  // namespace

int hom_dim(int r, Obj src, Obj tgt) {
  check_obj(r, src);
  check_obj(r, tgt);
  const int i = src.i, j = src.j, ip = tgt.i, jp = tgt.j;
  const bool direct = i <= ip && ip <= i + j - 1 && i + j <= ip + jp;
  const bool wrapped = ip <= i + j - 1 - r && i + j <= ip + jp + r;
  return (direct || wrapped) ? 1 : 0;
}

int ext_dim(int r, Obj src, Obj tgt) {
  check_obj(r, src);
  check_obj(r, tgt);
  // extensions from src into tgt are maps from tgt into the downward shift
  // of src
  const Obj shifted{src.i > 1 ? src.i - 1 : r, src.j};
  return hom_dim(r, tgt, shifted);
}

Model Model::build(int r) {
  if (r < 1) throw DomainError("tube rank must be positive");
  const Table h = hom_table_blocks(r), e = ext_table_blocks(r);
  if (h != elementwise(r, hom_dim) || e != elementwise(r, ext_dim))
    throw BuildError("block and elementwise table constructions disagree");
  Model m;
  m.r = r;
  m.hom = from_ints(h);
  m.ext = from_ints(e);
  m.f = from_ints(f_table(r));
  m.g = from_ints(g_table(r));
  if (!shift_identity_holds(m)) throw BuildError("shift identity violated");
  return m;
}

bool shift_identity_holds(const Model& m) {
  return m.hom.transpose() + m.f == m.ext + m.g;
}

namespace {

std::string set_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); k++) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

cat::Data data_from_tables(const Mat& hom, const Mat& ext) {
  cat::Data d;
  for (int k = 0; k < hom.rows; k++) d.objects.push_back("O" + std::to_string(k));
  d.hom = hom.transpose();
  d.sigma.emplace(1, ext.transpose());
  d.validate();
  return d;
}

}  // namespace

Report verify_tables(const Mat& hom, const Mat& ext, const Rat& tol, cat::Mode mode) {
  if (hom.rows != hom.cols || ext.rows != hom.rows || ext.cols != hom.cols)
    throw DomainError("tables must be square and equally sized");
  const cat::Data d = data_from_tables(hom, ext);
  Report rep;
  for (const auto& s : cat::brick_sets(d, -1, mode)) {
    rep.brick_sets++;
    const Mat a = cat::adjacency_of(d, s, 1);
    if (!is_subpermutation(a)) {
      rep.failures.push_back(set_label(s) + ": adjacency is not a sub-permutation table");
      continue;
    }
    const Bounds b = spectral_radius(a, tol);
    rep.max_rho = bounds_max(rep.max_rho, b);
    const bool zero = b.hi == 0;
    const bool one = b.contains(Rat(1)) && b.width() <= Rat(2) * tol;
    if (!zero && !one)
      rep.failures.push_back(set_label(s) + ": radius enclosure [" + to_string(b.lo) + ", " +
                             to_string(b.hi) + "] is neither 0 nor 1");
  }
  rep.passed = rep.failures.empty();
  return rep;
}

Report verify(int r, const Rat& tol, cat::Mode mode) {
  const Model m = Model::build(r);
  return verify_tables(m.hom, m.ext, tol, mode);
}

Bounds fpdim(int r, const Rat& tol) { return cat::fpdim(export_data(r), tol); }

cat::Data export_data(int r) {
  const Model m = Model::build(r);
  cat::Data d;
  for (int j = 1; j <= r; j++)
    for (int i = 1; i <= r; i++)
      d.objects.push_back("E" + std::to_string(i) + "[" + std::to_string(j) + "]");
  d.hom = m.hom.transpose();
  d.sigma.emplace(1, m.ext.transpose());
  d.validate();
  return d;
}

}  // namespace fp::tube
