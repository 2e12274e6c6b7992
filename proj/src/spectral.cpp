#include "fp/spectral.hpp"

#include <algorithm>
#include <utility>

#include "fp/digraph.hpp"

namespace fp {

Bounds bounds_max(const Bounds& x, const Bounds& y) {
  return {std::max(x.lo, y.lo), std::max(x.hi, y.hi)};
}

namespace {

void validate_entries(const Mat& m, bool allow_inf) {
  for (const auto& e : m.a) {
    if (e.inf) {
      if (!allow_inf)
        throw DomainError("infinite entry; use extended_spectral_radius");
      continue;
    }
    if (e.v < 0) throw DomainError("negative entry");
  }
}

// Integer form of L*(block + I) where L clears all denominators.  Working on
// the shifted matrix makes every irreducible block primitive, so the power
// iteration converges; rho(block) = rho(shifted)/L - 1.
struct Scaled {
  int n = 0;
  Int L = 1;
  std::vector<Int> m;  // row-major
};

Scaled scale_shift(const Mat& b) {
  Scaled s;
  s.n = b.rows;
  for (const auto& e : b.a) mpz_lcm(s.L.get_mpz_t(), s.L.get_mpz_t(), e.v.get_den_mpz_t());
  s.m.assign(size_t(s.n) * s.n, Int(0));
  for (int i = 0; i < s.n; i++) {
    for (int j = 0; j < s.n; j++) {
      const Rat& v = b.at(i, j).v;
      s.m[size_t(i) * s.n + j] = Int(v.get_num() * (s.L / v.get_den()));
    }
    s.m[size_t(i) * s.n + i] += s.L;
  }
  return s;
}

void matvec(const Scaled& s, const std::vector<Int>& x, std::vector<Int>& out) {
  for (int i = 0; i < s.n; i++) {
    out[i] = 0;
    const Int* row = &s.m[size_t(i) * s.n];
    for (int j = 0; j < s.n; j++)
      mpz_addmul(out[i].get_mpz_t(), row[j].get_mpz_t(), x[j].get_mpz_t());
  }
}

// Certified bounds for one strongly connected block of size >= 2.  The iterate
// is a vector of integer mantissas on a shared 2^-128 scale; every step is an
// exact integer computation with canonical per-component rounding, so the
// result depends only on the block entries, not on the ambient labeling.
Bounds irreducible_bounds(const Mat& block, const Rat& tol) {
  const Scaled s = scale_shift(block);
  const int n = s.n;
  const Int one = Int(1) << 128;
  const long max_iter = 1000000;

  std::vector<Int> x(n, Int(1)), y(n);
  Rat tol_scaled = tol * s.L;
  long iter = 0;
  int period = 1;
  for (;;) {
    // Collatz-Wielandt: for any x > 0, min and max of (Mx)_i / x_i enclose
    // rho(M) exactly
    matvec(s, x, y);
    Rat qlo, qhi;
    for (int i = 0; i < n; i++) {
      Rat q(y[i], x[i]);
      q.canonicalize();
      if (i == 0 || q < qlo) qlo = q;
      if (i == 0 || q > qhi) qhi = q;
    }
    if (qhi - qlo <= tol_scaled) {
      Rat scale(s.L);
      return {Rat(qlo / scale - 1), Rat(qhi / scale - 1)};
    }
    if (iter >= max_iter)
      throw ConvergenceError("power iteration did not certify tolerance within " +
                             std::to_string(max_iter) + " iterations");

    for (int t = 0; t < period && iter < max_iter; t++, iter++) {
      matvec(s, x, y);
      Int ymax = *std::max_element(y.begin(), y.end());
      Int half = ymax >> 1;
      for (int i = 0; i < n; i++) {
        Int num = y[i] * one + half;
        mpz_fdiv_q(x[i].get_mpz_t(), num.get_mpz_t(), ymax.get_mpz_t());
        if (x[i] < 1) x[i] = 1;
      }
    }
    period = std::min(64, period * 2);
  }
}

}  // namespace

Bounds spectral_radius(const Mat& m, const Rat& tol) {
  if (!m.square()) throw DomainError("matrix not square");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  validate_entries(m, false);
  if (m.rows == 0) return {Rat(0), Rat(0)};

  Bounds best{Rat(0), Rat(0)};
  for (const auto& comp : scc_decompose(support_digraph(m))) {
    Bounds b;
    if (comp.size() == 1) {
      Rat d = m.at(comp[0], comp[0]).v;
      b = {d, d};
    } else {
      b = irreducible_bounds(m.restricted(comp), tol);
    }
    best = bounds_max(best, b);
  }
  return best;
}

ExtBounds extended_spectral_radius(const Mat& m, const Rat& tol) {
  if (!m.square()) throw DomainError("matrix not square");
  validate_entries(m, true);

  Digraph g = support_digraph(m);
  bool infinite = false;
  for (int i = 0; i < m.rows && !infinite; i++)
    for (int j = 0; j < m.cols && !infinite; j++)
      if (m.at(i, j).inf && (i == j || reaches(g, j, i))) infinite = true;

  Mat sub = m;
  for (auto& e : sub.a)
    if (e.inf) e = ExtRat(1);
  Bounds b = spectral_radius(sub, tol);

  // off-cycle infinite entries never meet a closed walk, so every finite
  // substitution has the same radius; on a cycle the sup diverges and the
  // substitution bound is still a valid lower bound
  if (infinite) return {true, {b.lo, b.lo}};
  return {false, b};
}

bool is_subpermutation(const Mat& m) {
  if (!m.square()) return false;
  for (const auto& e : m.a)
    if (e.inf || (e.v != 0 && e.v != 1)) return false;
  for (int i = 0; i < m.rows; i++) {
    int row = 0, col = 0;
    for (int j = 0; j < m.cols; j++) {
      if (!m.at(i, j).is_zero()) row++;
      if (!m.at(j, i).is_zero()) col++;
    }
    if (row > 1 || col > 1) return false;
  }
  return true;
}

}  // namespace fp
