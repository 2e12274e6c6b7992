#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "fp/error.hpp"

namespace fp {

using Rat = mpq_class;
using Int = mpz_class;

// Nonnegative rational extended with +infinity.  Addition and multiplication
// follow the sup-semiring conventions: inf + x = inf, inf * x = inf for x > 0,
// and inf * 0 = 0.
struct ExtRat {
  Rat v;
  bool inf = false;

  ExtRat() : v(0) {}
  ExtRat(const Rat& r) : v(r) { v.canonicalize(); }
  ExtRat(long n) : v(n) {}
  static ExtRat infinity() {
    ExtRat e;
    e.inf = true;
    return e;
  }

  bool is_zero() const { return !inf && v == 0; }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.inf || b.inf) return infinity();
    return ExtRat(Rat(a.v + b.v));
  }
  friend ExtRat operator*(const ExtRat& a, const ExtRat& b) {
    if (a.is_zero() || b.is_zero()) return ExtRat();
    if (a.inf || b.inf) return infinity();
    return ExtRat(Rat(a.v * b.v));
  }
  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.v == b.v;
  }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (b.inf) return !a.inf;
    if (a.inf) return false;
    return a.v < b.v;
  }
};

// "p/q", "p", or "inf"; rejects negative values and malformed tokens
ExtRat parse_ext_rat(std::string_view tok);

// finite variants; parse_tolerance additionally accepts plain decimal and
// scientific forms like "1e-9" so --tol can be given naturally
Rat parse_rat(std::string_view tok);
Rat parse_tolerance(std::string_view tok);

std::string to_string(const Rat& r);     // canonical "p" or "p/q"
std::string to_string(const ExtRat& e);  // ... or "inf"

inline Rat default_tol() { return Rat(1, 1000000000); }

}  // namespace fp
