#pragma once

// Independent cross-checks used by the test suites.  Everything here computes
// through a different route than the library: characteristic polynomials with
// Sturm-chain bisection instead of power iteration, exhaustive subset filters
// instead of clique search, Coxeter element orders instead of lookup tables.

#include <optional>
#include <vector>

#include "fp/matrix.hpp"

namespace oracle {

using fp::Int;
using fp::Mat;
using fp::Rat;

using Poly = std::vector<Rat>;  // ascending coefficients, normalized

Poly char_poly(const Mat& m);  // monic, exact (Faddeev-LeVerrier)

// number of distinct real roots in (a, b]
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

struct RootInterval {
  Rat lo, hi;  // largest real root lies in [lo, hi]
};
std::optional<RootInterval> largest_real_root(const Poly& p, const Rat& eps);

// largest real root of the characteristic polynomial; for a nonnegative
// matrix this is the spectral radius
RootInterval rho_oracle(const Mat& m, const Rat& eps);

// every subset passing the brick-set filter, by scanning all 2^n masks
std::vector<std::vector<int>> naive_brick_subsets(const Mat& hom, int max_size = -1);

std::vector<std::vector<bool>> reach_closure(const Mat& m);  // Floyd-Warshall

// order of a Coxeter element computed from the Cartan matrix
int coxeter_order(char family, int n);

// replace each infinite entry by 2^k for k = 0..kmax and track the oracle
// radius; diverged when the last value exceeds threshold
struct SubstitutionScan {
  std::vector<Rat> rho_hi;
  bool diverged = false;
};
SubstitutionScan substitution_scan(const Mat& m, int kmax, const Rat& threshold,
                                   const Rat& eps);

// least-squares slope of log a_n against log n over the tail half of the
// sequence; estimates the polynomial growth degree
double growth_fit(const std::vector<Rat>& coeffs);

}  // namespace oracle
