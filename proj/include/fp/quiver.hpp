#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fp/spectral.hpp"

namespace fp::quiv {

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> arrows;  // parallel arrows appear repeatedly
};

// Text format: one "vertices: a b c" line, then any number of
// "arrows: a->b b->c" lines; '#' starts a comment line.  Repeating an arrow
// raises its multiplicity.
Quiver parse_quiver(std::string_view text);

Mat adjacency(const Quiver& q);  // (i, j) = number of arrows i -> j

Bounds fpdim_quiver(const Quiver& q, const Rat& tol = default_tol());

struct DynkinType {
  char family = 'A';
  int rank = 1;
};
DynkinType dynkin(char family, int rank);  // A n>=1, D n>=4, E 6..8

int coxeter_number(const DynkinType& t);

enum class WeightClass { domestic, tubular, wild };

// weight-1 entries dropped, rest sorted ascending
std::vector<long> normalize_weights(std::vector<long> weights);
WeightClass classify_weights(const std::vector<long>& weights);

const char* to_string(WeightClass c);

}  // namespace fp::quiv
