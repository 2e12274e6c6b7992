#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fp/rational.hpp"

namespace fp::cy {

// A model category whose b-th Serre power is the a-th shift, together with a
// witnessed lattice multiplier w: the pairs (bwt, awt) are known to lie in
// the Serre-shift spectrum.  has_atomic records whether the category is
// known to contain an atomic object; several conclusions need it.
struct FracCY {
  long a = 0;
  long b = 1;  // positive
  long w = 1;  // positive
  bool has_atomic = true;

  void validate() const;
  Rat slope() const;  // a/b in lowest terms
};

// a/b in lowest terms; throws Indeterminate without an atomic object
Rat fpcy(const FracCY& m);

enum class Membership { member, non_member, unknown };
const char* to_string(Membership m);

// does the pair (m, n) belong to the Serre-shift spectrum of the model?
Membership spectrum_membership(const FracCY& model, long m, long n);

// rational extended by both infinities
struct Extended {
  int inf = 0;  // -1, 0, +1
  Rat v;
};
bool operator==(const Extended& x, const Extended& y);
std::string to_string(const Extended& x);

// the two Kodaira-type growth invariants of a Gorenstein singularity model
// of injective dimension d >= 2 with Gorenstein parameter ell and graded
// dimension gk >= 1
std::pair<Extended, Extended> fp_kodaira(long d, long ell, const Rat& gk);

// additivity across tensor factors
Rat cy_tensor_sum(const Rat& d1, const Rat& d2);

// num(t)/den(t) with integer coefficient lists, ascending
struct Series {
  std::vector<Int> num, den;
};

std::vector<Rat> series_coefficients(const Series& h, int count);

struct PolyGrowth {
  bool neg_inf = false;  // the series is a polynomial
  long value = 0;
};

// pole order at t = 1 minus one, cross-validated against the growth of the
// first n_check coefficients; coefficients must be nonnegative
PolyGrowth hilbert_growth(const Series& h, int n_check = 40);

// series of every s-th coefficient, reconstructed in closed rational form
Series veronese(const Series& h, int s);

struct CatalogEntry {
  std::string descriptor;
  std::string invariant;
  Extended value;
  std::string note;
};

// fixed table of invariant values for named model categories; keys:
//   wpl:domestic | wpl:tubular | curve:P1 | curve:elliptic | curve:other |
//   smooth:dim=N | as-gorenstein:d=D | piontkovski:n=N | fractional-cy
std::vector<CatalogEntry> catalog_lookup(const std::string& key);

}  // namespace fp::cy
