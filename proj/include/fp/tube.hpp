#pragma once

#include <string>
#include <vector>

#include "fp/category.hpp"
#include "fp/spectral.hpp"

namespace fp::tube {

// Object E_i[j] of a standard stable tube of rank r: mouth position i in
// 1..r (cyclic), length j.  The library works with the window j = 1..r,
// which already contains every object the invariants below can see.
struct Obj {
  int i = 1;
  int j = 1;
};

int hom_dim(int r, Obj src, Obj tgt);  // dim of maps src -> tgt
int ext_dim(int r, Obj src, Obj tgt);  // dim of extensions, via the shift

// Square tables over all r^2 objects, listed mouth row first: index of
// E_i[j] is (j-1)*r + (i-1).  Entry (a, b) is the dimension from object b
// to object a, matching how such tables are usually printed.
struct Model {
  int r = 1;
  Mat hom, ext;
  Mat f, g;  // companions in the identity hom^T + f == ext + g

  // assembles the tables twice, once from cyclic-shift block sums and once
  // entry by entry, and throws BuildError unless both routes and the shift
  // identity agree
  static Model build(int r);
};

bool shift_identity_holds(const Model& m);

struct Report {
  bool passed = true;
  long brick_sets = 0;
  Bounds max_rho{Rat(0), Rat(0)};
  std::vector<std::string> failures;
};

// enumerates every brick set of the tube and certifies that each extension
// adjacency is a sub-permutation table with radius exactly 0 or 1
Report verify(int r, const Rat& tol = default_tol(), cat::Mode mode = cat::Mode::parallel);

// same check on caller-supplied tables (orientation as in Model); lets the
// tests feed in corrupted data
Report verify_tables(const Mat& hom, const Mat& ext, const Rat& tol = default_tol(),
                     cat::Mode mode = cat::Mode::parallel);

Bounds fpdim(int r, const Rat& tol = default_tol());

// hom and sigma^1 = ext, transposed to the source-row convention of cat::Data
cat::Data export_data(int r);

}  // namespace fp::tube
