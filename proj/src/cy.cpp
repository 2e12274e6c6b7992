#include "fp/cy.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fp/error.hpp"

namespace fp::cy {

void FracCY::validate() const {
  if (b < 1) throw DomainError("Serre exponent must be positive");
  if (w < 1) throw DomainError("lattice multiplier must be positive");
}

Rat FracCY::slope() const {
  validate();
  Rat r{Int(a), Int(b)};
  r.canonicalize();
  return r;
}

Rat fpcy(const FracCY& m) {
  m.validate();
  if (!m.has_atomic)
    throw Indeterminate("fpcy needs an atomic object to pin the dimension down");
  return m.slope();
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    default: return "unknown";
  }
}

Membership spectrum_membership(const FracCY& model, long m, long n) {
  model.validate();
  if (Int(m) * model.a != Int(n) * model.b) return Membership::non_member;
  if (model.has_atomic) {
    const Int bw = Int(model.b) * model.w, aw = Int(model.a) * model.w;
    if (Int(m) % bw == 0 && (Int(m) / bw) * aw == Int(n)) return Membership::member;
  }
  return Membership::unknown;
}

bool operator==(const Extended& x, const Extended& y) {
  if (x.inf != y.inf) return false;
  return x.inf != 0 || x.v == y.v;
}

std::string to_string(const Extended& x) {
  if (x.inf < 0) return "-inf";
  if (x.inf > 0) return "inf";
  return fp::to_string(x.v);
}

std::pair<Extended, Extended> fp_kodaira(long d, long ell, const Rat& gk) {
  if (d < 2) throw DomainError("injective dimension must be at least 2");
  if (gk < 1) throw DomainError("graded dimension must be at least 1");
  const Extended minus_inf{-1, Rat(0)};
  const Extended shifted{0, Rat(gk - 1)};
  if (ell > 0) return {minus_inf, shifted};
  if (ell < 0) return {shifted, minus_inf};
  return {Extended{0, Rat(0)}, Extended{0, Rat(0)}};
}

Rat cy_tensor_sum(const Rat& d1, const Rat& d2) {
  Rat r = d1 + d2;
  r.canonicalize();
  return r;
}

namespace {

using P = std::vector<Rat>;

P to_poly(const std::vector<Int>& v) {
  P p;
  for (const Int& c : v) p.push_back(Rat(c));
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

bool is_zero(const P& p) { return p.empty(); }

Rat eval_at_one(const P& p) {
  Rat s(0);
  for (const Rat& c : p) s += c;
  return s;
}

// valid only when p(1) == 0: (1-t) * result == p
P divide_out_one_minus_t(const P& p) {
  P q;
  Rat run(0);
  for (std::size_t k = 0; k + 1 < p.size(); k++) {
    run += p[k];
    q.push_back(run);
  }
  return q;
}

int multiplicity_at_one(P p) {
  int m = 0;
  while (!is_zero(p) && eval_at_one(p) == 0) {
    p = divide_out_one_minus_t(p);
    m++;
  }
  return m;
}

struct DivMod {
  P q, r;
};

DivMod poly_divmod(P num, const P& den) {
  DivMod out;
  if (is_zero(den)) throw DomainError("division by the zero polynomial");
  if (num.size() < den.size()) {
    out.r = num;
    return out;
  }
  out.q.assign(num.size() - den.size() + 1, Rat(0));
  while (num.size() >= den.size()) {
    const Rat f = num.back() / den.back();
    const std::size_t off = num.size() - den.size();
    out.q[off] = f;
    for (std::size_t i = 0; i < den.size(); i++) num[off + i] -= f * den[i];
    num.pop_back();
    while (!num.empty() && num.back() == 0) num.pop_back();
  }
  out.r = num;
  while (!out.q.empty() && out.q.back() == 0) out.q.pop_back();
  return out;
}

struct Normalized {
  P num, den;  // den[0] != 0
};

Normalized normalize(const Series& h) {
  Normalized f{to_poly(h.num), to_poly(h.den)};
  if (is_zero(f.den)) throw DomainError("zero denominator");
  std::size_t shift = 0;
  while (shift < f.den.size() && f.den[shift] == 0) shift++;
  if (shift > 0) {
    // num/den = (num/t^shift)/(den/t^shift); the series exists only when the
    // numerator carries the same power of t
    for (std::size_t k = 0; k < shift && k < f.num.size(); k++)
      if (f.num[k] != 0) throw DomainError("pole at t = 0");
    f.den.erase(f.den.begin(), f.den.begin() + long(shift));
    f.num.erase(f.num.begin(), f.num.begin() + long(std::min(shift, f.num.size())));
  }
  return f;
}

std::vector<Rat> coefficients(const Normalized& f, int count) {
  std::vector<Rat> c;
  c.reserve(std::size_t(count));
  for (int n = 0; n < count; n++) {
    Rat s = std::size_t(n) < f.num.size() ? f.num[std::size_t(n)] : Rat(0);
    const int klim = int(std::min<std::size_t>(f.den.size() - 1, std::size_t(n)));
    for (int k = 1; k <= klim; k++) s -= f.den[std::size_t(k)] * c[std::size_t(n - k)];
    c.push_back(s / f.den[0]);
  }
  return c;
}

// least-squares slope of log c_n against log n over the tail half
double tail_slope(const std::vector<Rat>& c, bool& usable) {
  const int hi = int(c.size()) - 1;
  const int lo = std::max(2, hi / 2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int n = lo; n <= hi; n++) {
    if (c[std::size_t(n)] <= 0) continue;
    const double x = std::log(double(n)), y = std::log(c[std::size_t(n)].get_d());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    m++;
  }
  const double det = sxx - sx * sx / std::max(m, 1);
  usable = m >= 3 && det > 1e-12;
  return usable ? (sxy - sx * sy / m) / det : 0.0;
}

}  // namespace

std::vector<Rat> series_coefficients(const Series& h, int count) {
  if (count < 0) throw DomainError("coefficient count must be nonnegative");
  return coefficients(normalize(h), count);
}

PolyGrowth hilbert_growth(const Series& h, int n_check) {
  if (n_check < 4) throw DomainError("need at least a few coefficients to cross-check");
  const Normalized f = normalize(h);
  const std::vector<Rat> c = coefficients(f, n_check + 1);
  for (int n = 0; n <= n_check; n++)
    if (c[std::size_t(n)] < 0)
      throw DataError("negative coefficient at index " + std::to_string(n));
  if (is_zero(f.num)) return {true, 0};
  const DivMod dm = poly_divmod(f.num, f.den);
  if (is_zero(dm.r)) {
    for (const Rat& q : dm.q)
      if (q < 0) throw DataError("negative coefficient in the polynomial part");
    return {true, 0};
  }
  const int p = multiplicity_at_one(f.den) - multiplicity_at_one(f.num);
  if (p <= 0)
    throw DataError("series is infinite but carries no pole at t = 1");
  if (n_check >= 8) {
    bool usable = false;
    const double slope = tail_slope(c, usable);
    if (usable && std::abs(slope - double(p - 1)) >= 0.75)
      throw DataError("coefficient growth disagrees with the pole order");
  }
  return {false, p - 1};
}

namespace {

// any solution of rows * d = rhs, exact; empty when inconsistent
bool solve_exact(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs, std::vector<Rat>& sol,
                 int unknowns) {
  const int rows = int(m.size());
  std::vector<int> pivot_col(std::size_t(rows), -1);
  int rank = 0;
  for (int col = 0; col < unknowns && rank < rows; col++) {
    int piv = -1;
    for (int r = rank; r < rows; r++)
      if (m[std::size_t(r)][std::size_t(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[std::size_t(piv)], m[std::size_t(rank)]);
    std::swap(rhs[std::size_t(piv)], rhs[std::size_t(rank)]);
    const Rat inv = m[std::size_t(rank)][std::size_t(col)];
    for (int r = 0; r < rows; r++) {
      if (r == rank || m[std::size_t(r)][std::size_t(col)] == 0) continue;
      const Rat f = m[std::size_t(r)][std::size_t(col)] / inv;
      for (int cc = col; cc < unknowns; cc++)
        m[std::size_t(r)][std::size_t(cc)] -= f * m[std::size_t(rank)][std::size_t(cc)];
      rhs[std::size_t(r)] -= f * rhs[std::size_t(rank)];
    }
    pivot_col[std::size_t(rank)] = col;
    rank++;
  }
  for (int r = rank; r < rows; r++)
    if (rhs[std::size_t(r)] != 0) return false;
  sol.assign(std::size_t(unknowns), Rat(0));
  for (int r = 0; r < rank; r++)
    sol[std::size_t(pivot_col[std::size_t(r)])] =
        rhs[std::size_t(r)] / m[std::size_t(r)][std::size_t(pivot_col[std::size_t(r)])];
  return true;
}

Series clear_denominators(const P& num, const P& den) {
  Int l(1);
  for (const Rat& c : num) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  for (const Rat& c : den) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Series out;
  for (const Rat& c : num) out.num.push_back(Int(Rat(c * l).get_num()));
  for (const Rat& c : den) out.den.push_back(Int(Rat(c * l).get_num()));
  if (out.num.empty()) out.num.push_back(Int(0));
  return out;
}

}  // namespace

Series veronese(const Series& h, int s) {
  if (s < 1) throw DomainError("Veronese step must be positive");
  const Normalized f = normalize(h);
  if (is_zero(f.num)) return Series{{Int(0)}, {Int(1)}};
  const int dden = int(f.den.size()) - 1;
  const int bound = int(f.num.size()) - 1 + dden + 2;  // decimated numerator degree
  const int top = bound + 2 * dden + 8;
  const std::vector<Rat> full = coefficients(f, s * top + 1);
  std::vector<Rat> c;
  for (int n = 0; n <= top; n++) c.push_back(full[std::size_t(n) * std::size_t(s)]);

  for (int k = 0; k <= dden; k++) {
    const int start = std::max(k, bound + 1);
    bool ok = true;
    std::vector<Rat> d;
    if (k == 0) {
      for (int n = start; n <= top && ok; n++) ok = c[std::size_t(n)] == 0;
      if (!ok) continue;
    } else {
      std::vector<std::vector<Rat>> rows;
      std::vector<Rat> rhs;
      for (int n = start; n <= top; n++) {
        std::vector<Rat> row;
        for (int i = 1; i <= k; i++) row.push_back(c[std::size_t(n - i)]);
        rows.push_back(std::move(row));
        rhs.push_back(-c[std::size_t(n)]);
      }
      if (!solve_exact(std::move(rows), std::move(rhs), d, k)) continue;
    }
    P new_den{Rat(1)};
    for (const Rat& x : d) new_den.push_back(x);
    P new_num;
    for (int j = 0; j < start; j++) {
      Rat sum(0);
      for (int i = 0; i <= std::min(j, k); i++)
        sum += new_den[std::size_t(i)] * c[std::size_t(j - i)];
      new_num.push_back(sum);
    }
    while (!new_num.empty() && new_num.back() == 0) new_num.pop_back();
    const Series out = clear_denominators(new_num, new_den);
    // regenerate and compare: the reconstruction must reproduce every
    // decimated coefficient
    const std::vector<Rat> check = series_coefficients(out, top + 1);
    bool match = true;
    for (int n = 0; n <= top && match; n++) match = check[std::size_t(n)] == c[std::size_t(n)];
    if (match) return out;
  }
  throw BuildError("could not reconstruct the decimated series in rational form");
}

namespace {

Extended fin(long v) { return Extended{0, Rat(v)}; }
const Extended kPlusInf{1, Rat(0)};
const Extended kMinusInf{-1, Rat(0)};

bool parse_param(const std::string& key, const std::string& prefix, long& out) {
  if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0) return false;
  const std::string tail = key.substr(prefix.size());
  std::size_t pos = 0;
  try {
    out = std::stol(tail, &pos);
  } catch (const std::exception&) {
    throw DomainError("bad catalog parameter in '" + key + "'");
  }
  if (pos != tail.size()) throw DomainError("bad catalog parameter in '" + key + "'");
  return true;
}

}  // namespace

std::vector<CatalogEntry> catalog_lookup(const std::string& key) {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& inv, const Extended& v, const std::string& note) {
    out.push_back(CatalogEntry{key, inv, v, note});
  };
  long param = 0;
  if (key == "wpl:domestic") {
    add("fpdim", fin(1), "weighted projective line, domestic weight type");
  } else if (key == "wpl:tubular") {
    add("fpdim", fin(1), "weighted projective line, tubular weight type");
  } else if (key == "curve:P1") {
    add("fpdim", fin(1), "coherent sheaves on the projective line");
    add("fpcy", fin(1), "coherent sheaves on the projective line");
  } else if (key == "curve:elliptic") {
    add("fpdim", fin(1), "coherent sheaves on an elliptic curve");
    add("fpcy", fin(1), "coherent sheaves on an elliptic curve");
  } else if (key == "curve:other") {
    add("fpdim", kPlusInf, "coherent sheaves on a smooth projective curve of genus at least two");
    add("fpcy", fin(1), "coherent sheaves on a smooth projective curve of genus at least two");
  } else if (parse_param(key, "smooth:dim=", param)) {
    if (param < 0) throw DomainError("dimension must be nonnegative");
    const std::string note =
        "coherent sheaves on a smooth projective variety of dimension " + std::to_string(param);
    add("fpcy", fin(param), note);
    if (param >= 2) add("fpdim", kPlusInf, note);
  } else if (parse_param(key, "as-gorenstein:d=", param)) {
    if (param < 2) throw DomainError("injective dimension must be at least 2");
    add("fpcy", fin(param - 1),
        "graded singularity model of a Gorenstein algebra of injective dimension " +
            std::to_string(param));
  } else if (parse_param(key, "piontkovski:n=", param)) {
    if (param < 2) throw DomainError("line module rank must be at least 2");
    const std::string note = "graded line module category of rank " + std::to_string(param);
    add("fpdim", fin(1), note);
    add("fpgldim", fin(1), note);
    add("fpc", fin(0), note);
    add("fpv", fin(0), note);
    add("fpcy", fin(1), note);
    add("fpkappa", kMinusInf, note);
    add("fpkappa-inv", param == 2 ? fin(1) : kPlusInf, note);
  } else if (key == "fractional-cy") {
    add("fpkappa", fin(0), "any fractionally Calabi-Yau model");
    add("fpkappa-inv", fin(0), "any fractionally Calabi-Yau model");
  } else {
    throw DomainError("unknown catalog key '" + key + "'");
  }
  return out;
}

}  // namespace fp::cy
