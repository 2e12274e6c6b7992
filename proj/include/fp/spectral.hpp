#pragma once

#include "fp/matrix.hpp"

namespace fp {

// Certified enclosure of a spectral radius: lo <= rho <= hi, both exact.
struct Bounds {
  Rat lo, hi;

  Rat width() const { return Rat(hi - lo); }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// max in both endpoints; the enclosure of max(rho_1, rho_2)
Bounds bounds_max(const Bounds& x, const Bounds& y);

// Certified bounds on the spectral radius of a finite nonnegative matrix.
// Decomposes into strongly connected blocks; each block is certified by exact
// Collatz-Wielandt quotients of a positive iterate of block + identity.
// Throws DomainError on negative or infinite entries, ConvergenceError if the
// iteration budget runs out before the width reaches tol.
Bounds spectral_radius(const Mat& m, const Rat& tol = default_tol());

struct ExtBounds {
  bool infinite = false;  // true: rho = +inf, bounds.lo still a valid lower bound
  Bounds bounds;
};

// Spectral radius in the extended sense: +inf exactly when some infinite entry
// lies on a cycle of the support digraph; otherwise every finite substitution
// gives the same radius and the infinite entries are replaced by 1.
ExtBounds extended_spectral_radius(const Mat& m, const Rat& tol = default_tol());

// 0/1 matrix with at most one nonzero per row and per column
bool is_subpermutation(const Mat& m);

}  // namespace fp
