#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fp/spectral.hpp"

namespace fp::cat {

// Hom-dimension tables for a finite collection of objects together with the
// tables against powers of an endofunctor sigma.  Convention: entry (i, j) is
// the dimension at source i, target j.
struct Data {
  std::vector<std::string> objects;
  Mat hom;
  std::map<int, Mat> sigma;  // keys form a contiguous range

  int size() const { return int(objects.size()); }
  bool has_power(int n) const { return sigma.count(n) > 0; }
  bool has_negative_powers() const { return !sigma.empty() && sigma.begin()->first < 0; }
  void validate() const;  // throws DataError

  static Data from_json(const std::string& text);
  std::string to_json() const;
};

enum class Flavor { raw, brick, atomic, tri_brick, tri_atomic };

struct ObjectSet {
  std::vector<int> idx;
  Flavor flavor = Flavor::raw;
};

bool is_brick_set(const Data& d, const std::vector<int>& idx);

// atomic: brick plus zero diagonal in every supplied negative power (equal to
// brick when the dataset has no negative powers); tri variants replace the
// pairwise vanishing by acyclicity of the nonzero-hom digraph, i.e. some
// ordering puts the strict upper triangle to zero
bool has_flavor(const Data& d, const std::vector<int>& idx, Flavor f);

enum class Mode { serial, parallel };

// every brick subset (size <= max_size when max_size >= 0) in lexicographic
// order; the serial form streams, the collected form may fan out workers by
// leading index and merges back to the same order
void for_each_brick_set(const Data& d, int max_size,
                        const std::function<void(const std::vector<int>&)>& emit);
std::vector<std::vector<int>> brick_sets(const Data& d, int max_size = -1,
                                         Mode mode = Mode::parallel);

Mat adjacency_of(const Data& d, const std::vector<int>& idx, int n);  // MissingData

// sup of certified radius enclosures over brick sets of exactly n_objects
// (resp. of any size); [0, 0] when no such set exists
Bounds fpdim_n(const Data& d, int n_objects, const Rat& tol = default_tol());
Bounds fpdim(const Data& d, const Rat& tol = default_tol());

// Tail-window estimate of a growth invariant.  The dataset must carry sigma
// powers 1..N with N >= 4; the window is {max(2, ceil(N/2)), ..., N}.
struct Growth {
  bool defined = false;  // false encodes -infinity
  double value = 0;
  int window_lo = 0, window_hi = 0;
  bool at_boundary = false;  // attained at n = N: likely still growing
};

Growth fpg_estimate(const Data& d, const Rat& tol = default_tol());
Growth lower_fpg_estimate(const Data& d, const Rat& tol = default_tol());
Growth fpv_estimate(const Data& d, const Rat& tol = default_tol());

struct Decomposition {
  std::vector<std::vector<int>> blocks;  // listed in label order
};

// true iff hom into sigma of anything in a later block vanishes
bool verify_decomposition(const Data& d, const Decomposition& dec);

// sup over blocks and sizes m <= n of the per-block fpdim_m
Bounds decomposition_bound(const Data& d, const Decomposition& dec, int n,
                           const Rat& tol = default_tol());

// rho(sigma^n table on idx) / rho(hom table on idx), outward interval
// division; DegenerateSet when the denominator radius is zero
Bounds ratio_spectral_radius(const Data& d, const std::vector<int>& idx, int n,
                             const Rat& tol = default_tol());

}  // namespace fp::cat
