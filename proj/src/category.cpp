#include "fp/category.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "json.hpp"

#include "fp/digraph.hpp"
#include "fp/error.hpp"

namespace fp::cat {

namespace {

void check_table(const Mat& m, int n, const std::string& what) {
  if (m.rows != n || m.cols != n)
    throw DataError(what + " must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!m.all_integer()) throw DataError(what + " entries must be nonnegative integers");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j).v < 0) throw DataError(what + " entries must be nonnegative integers");
}

long long entry(const Mat& m, int i, int j) { return m.at(i, j).v.get_num().get_si(); }

}  // namespace

void Data::validate() const {
  const int n = size();
  if (n == 0) throw DataError("no objects");
  std::set<std::string> seen;
  for (const auto& name : objects) {
    if (name.empty()) throw DataError("empty object name");
    if (!seen.insert(name).second) throw DataError("duplicate object name '" + name + "'");
  }
  check_table(hom, n, "hom");
  int expect = 0;
  bool first = true;
  for (const auto& [k, m] : sigma) {
    if (!first && k != expect)
      throw DataError("sigma powers must form a contiguous range");
    first = false;
    expect = k + 1;
    check_table(m, n, "sigma^" + std::to_string(k));
  }
  if (has_power(0) && !(sigma.at(0) == hom))
    throw DataError("sigma^0 table must equal the hom table");
}

Data Data::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw DataError(std::string("bad json: ") + e.what());
  }
  if (!j.is_object()) throw DataError("top level must be an object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (k != "objects" && k != "hom" && k != "sigma")
      throw DataError("unexpected key '" + k + "'");
  }
  if (!j.contains("objects") || !j.contains("hom") || !j.contains("sigma"))
    throw DataError("keys objects, hom, sigma are required");

  Data d;
  if (!j["objects"].is_array()) throw DataError("objects must be an array of strings");
  for (const auto& v : j["objects"]) {
    if (!v.is_string()) throw DataError("objects must be an array of strings");
    d.objects.push_back(v.get<std::string>());
  }

  auto read_table = [](const nlohmann::json& t, const std::string& what) {
    if (!t.is_array()) throw DataError(what + " must be an array of integer rows");
    std::vector<std::vector<long>> rows;
    for (const auto& row : t) {
      if (!row.is_array()) throw DataError(what + " must be an array of integer rows");
      std::vector<long> r;
      for (const auto& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
          throw DataError(what + " entries must be nonnegative integers");
        r.push_back(long(v.get<long long>()));
      }
      rows.push_back(std::move(r));
    }
    if (rows.empty()) throw DataError(what + " must be nonempty");
    for (const auto& r : rows)
      if (r.size() != rows[0].size()) throw DataError(what + " rows have unequal length");
    return from_ints(rows);
  };

  d.hom = read_table(j["hom"], "hom");
  if (!j["sigma"].is_object()) throw DataError("sigma must be an object keyed by integer powers");
  for (const auto& [k, v] : j["sigma"].items()) {
    std::size_t pos = 0;
    int power = 0;
    try {
      power = std::stoi(k, &pos);
    } catch (const std::exception&) {
      throw DataError("bad sigma power '" + k + "'");
    }
    if (pos != k.size()) throw DataError("bad sigma power '" + k + "'");
    d.sigma.emplace(power, read_table(v, "sigma^" + k));
  }
  d.validate();
  return d;
}

std::string Data::to_json() const {
  nlohmann::ordered_json j;
  j["objects"] = objects;
  auto table = [](const Mat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int k = 0; k < m.cols; ++k) row.push_back(entry(m, i, k));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["hom"] = table(hom);
  j["sigma"] = nlohmann::ordered_json::object();
  for (const auto& [k, m] : sigma) j["sigma"][std::to_string(k)] = table(m);
  return j.dump(2) + "\n";
}

namespace {

void check_indices(const Data& d, const std::vector<int>& idx) {
  std::set<int> seen;
  for (int i : idx) {
    if (i < 0 || i >= d.size()) throw DomainError("object index out of range");
    if (!seen.insert(i).second) throw DomainError("repeated object index");
  }
}

}  // namespace

bool is_brick_set(const Data& d, const std::vector<int>& idx) {
  check_indices(d, idx);
  for (int i : idx)
    if (entry(d.hom, i, i) != 1) return false;
  for (int a : idx)
    for (int b : idx)
      if (a != b && entry(d.hom, a, b) != 0) return false;
  return true;
}

bool has_flavor(const Data& d, const std::vector<int>& idx, Flavor f) {
  check_indices(d, idx);
  const bool tri = (f == Flavor::tri_brick || f == Flavor::tri_atomic);
  const bool atomic = (f == Flavor::atomic || f == Flavor::tri_atomic);
  if (f == Flavor::raw) return true;
  for (int i : idx)
    if (entry(d.hom, i, i) != 1) return false;
  if (tri) {
    // acyclic iff every strong component of the nonzero-hom digraph is a point
    Digraph g;
    g.n = int(idx.size());
    g.adj.assign(g.n, {});
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        if (a != b && entry(d.hom, idx[a], idx[b]) != 0) g.adj[a].push_back(b);
    for (const auto& comp : scc_decompose(g))
      if (comp.size() > 1) return false;
  } else {
    for (int a : idx)
      for (int b : idx)
        if (a != b && entry(d.hom, a, b) != 0) return false;
  }
  if (atomic) {
    for (const auto& [k, m] : d.sigma) {
      if (k >= 0) continue;
      for (int i : idx)
        if (entry(m, i, i) != 0) return false;
    }
  }
  return true;
}

namespace {

struct Enumerator {
  int n = 0;
  std::vector<char> brick;                // diagonal is 1
  std::vector<std::vector<char>> compat;  // hom vanishes both ways

  explicit Enumerator(const Data& d) : n(d.size()) {
    brick.assign(n, 0);
    compat.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) brick[i] = (entry(d.hom, i, i) == 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        compat[a][b] = (a != b && entry(d.hom, a, b) == 0 && entry(d.hom, b, a) == 0);
  }

  // cur nonempty, allowed holds candidates still pairwise compatible with cur
  void extend(std::vector<int>& cur, std::vector<char>& allowed, int max_size,
              const std::function<void(const std::vector<int>&)>& emit) const {
    emit(cur);
    if (max_size >= 0 && int(cur.size()) >= max_size) return;
    for (int v = cur.back() + 1; v < n; ++v) {
      if (!allowed[v]) continue;
      std::vector<int> removed;
      for (int u = v + 1; u < n; ++u)
        if (allowed[u] && !compat[v][u]) {
          allowed[u] = 0;
          removed.push_back(u);
        }
      cur.push_back(v);
      extend(cur, allowed, max_size, emit);
      cur.pop_back();
      for (int u : removed) allowed[u] = 1;
    }
  }

  void from_root(int v, const std::vector<char>& universe, int max_size,
                 const std::function<void(const std::vector<int>&)>& emit) const {
    std::vector<char> allowed(n, 0);
    for (int u = v + 1; u < n; ++u) allowed[u] = universe[u] && brick[u] && compat[v][u];
    std::vector<int> cur{v};
    extend(cur, allowed, max_size, emit);
  }
};

void enumerate_serial(const Data& d, const std::vector<char>& universe, int max_size,
                      const std::function<void(const std::vector<int>&)>& emit) {
  if (max_size == 0) return;
  Enumerator e(d);
  for (int v = 0; v < e.n; ++v)
    if (universe[v] && e.brick[v]) e.from_root(v, universe, max_size, emit);
}

std::vector<std::vector<int>> enumerate_collect(const Data& d, const std::vector<char>& universe,
                                                int max_size, Mode mode) {
  std::vector<std::vector<int>> out;
  if (max_size == 0) return out;
  if (mode == Mode::serial) {
    enumerate_serial(d, universe, max_size,
                     [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
  }
  Enumerator e(d);
  std::vector<std::vector<std::vector<int>>> bucket(e.n);
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < e.n; ++v) {
    if (!universe[v] || !e.brick[v]) continue;
    e.from_root(v, universe, max_size,
                [&](const std::vector<int>& s) { bucket[v].push_back(s); });
  }
  // buckets are keyed by leading index, so ascending concatenation restores
  // lexicographic order
  for (auto& b : bucket)
    for (auto& s : b) out.push_back(std::move(s));
  return out;
}

std::vector<char> full_universe(const Data& d) { return std::vector<char>(d.size(), 1); }

}  // namespace

void for_each_brick_set(const Data& d, int max_size,
                        const std::function<void(const std::vector<int>&)>& emit) {
  d.validate();
  enumerate_serial(d, full_universe(d), max_size, emit);
}

std::vector<std::vector<int>> brick_sets(const Data& d, int max_size, Mode mode) {
  d.validate();
  return enumerate_collect(d, full_universe(d), max_size, mode);
}

Mat adjacency_of(const Data& d, const std::vector<int>& idx, int n) {
  check_indices(d, idx);
  auto it = d.sigma.find(n);
  if (it == d.sigma.end())
    throw MissingData("sigma power " + std::to_string(n) + " not present in data");
  return it->second.restricted(idx);
}

namespace {

Bounds sup_over_sets(const Data& d, const std::vector<char>& universe, int max_size,
                     const Rat& tol, bool exact_size) {
  Bounds best{Rat(0), Rat(0)};
  auto sets = enumerate_collect(d, universe, max_size, Mode::parallel);
  for (const auto& s : sets) {
    if (exact_size && int(s.size()) != max_size) continue;
    best = bounds_max(best, spectral_radius(adjacency_of(d, s, 1), tol));
  }
  return best;
}

}  // namespace

Bounds fpdim_n(const Data& d, int n_objects, const Rat& tol) {
  d.validate();
  if (n_objects < 1) throw DomainError("set size must be positive");
  if (!d.has_power(1)) throw MissingData("sigma power 1 not present in data");
  return sup_over_sets(d, full_universe(d), n_objects, tol, true);
}

Bounds fpdim(const Data& d, const Rat& tol) {
  d.validate();
  if (!d.has_power(1)) throw MissingData("sigma power 1 not present in data");
  return sup_over_sets(d, full_universe(d), -1, tol, false);
}

namespace {

int contiguous_top(const Data& d) {
  int N = 0;
  while (d.has_power(N + 1)) ++N;
  return N;
}

struct Window {
  int lo = 0, hi = 0;
};

Window growth_window(const Data& d) {
  const int N = contiguous_top(d);
  if (N < 4) throw DataError("growth estimates need sigma powers 1..N with N >= 4");
  return {std::max(2, (N + 1) / 2), N};
}

double midpoint(const Bounds& b) { return Rat((b.lo + b.hi) / 2).get_d(); }

enum class Kind { upper_growth, lower_growth, value_growth };

Growth estimate(const Data& d, const Rat& tol, Kind kind) {
  d.validate();
  const Window w = growth_window(d);
  Growth g;
  g.window_lo = w.lo;
  g.window_hi = w.hi;
  if (kind == Kind::value_growth) {
    g.defined = true;
    g.value = 0;
  }
  auto sets = brick_sets(d);
  for (const auto& s : sets) {
    bool set_defined = false;
    double set_value = 0;
    int set_at = 0;
    for (int n = w.lo; n <= w.hi; ++n) {
      const Bounds b = spectral_radius(adjacency_of(d, s, n), tol);
      const bool zero = (b.hi == 0);
      double v = 0;
      bool v_defined = true;
      if (kind == Kind::value_growth) {
        v = zero ? 0.0 : std::pow(midpoint(b), 1.0 / n);
      } else if (zero) {
        v_defined = false;
      } else {
        v = std::log(midpoint(b)) / std::log(double(n));
      }
      if (kind == Kind::lower_growth) {
        // min over the window: one vanishing radius drags the set to -inf
        if (!v_defined) {
          set_defined = false;
          break;
        }
        if (!set_defined || v < set_value) {
          set_defined = true;
          set_value = v;
          set_at = n;
        }
      } else {
        if (!v_defined) continue;
        if (!set_defined || v > set_value) {
          set_defined = true;
          set_value = v;
          set_at = n;
        }
      }
    }
    if (!set_defined) continue;
    if (!g.defined || set_value > g.value) {
      g.defined = true;
      g.value = set_value;
      g.at_boundary = (set_at == w.hi);
    }
  }
  return g;
}

}  // namespace

Growth fpg_estimate(const Data& d, const Rat& tol) { return estimate(d, tol, Kind::upper_growth); }
Growth lower_fpg_estimate(const Data& d, const Rat& tol) {
  return estimate(d, tol, Kind::lower_growth);
}
Growth fpv_estimate(const Data& d, const Rat& tol) { return estimate(d, tol, Kind::value_growth); }

bool verify_decomposition(const Data& d, const Decomposition& dec) {
  d.validate();
  if (!d.has_power(1)) throw MissingData("sigma power 1 not present in data");
  std::vector<int> all;
  std::set<int> seen;
  for (const auto& block : dec.blocks)
    for (int i : block) {
      if (i < 0 || i >= d.size()) throw DomainError("object index out of range");
      if (!seen.insert(i).second) throw DomainError("blocks overlap");
      all.push_back(i);
    }
  if (!is_brick_set(d, all)) return false;
  const Mat& s1 = d.sigma.at(1);
  for (std::size_t a = 0; a + 1 < dec.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < dec.blocks.size(); ++b)
      for (int x : dec.blocks[a])
        for (int y : dec.blocks[b])
          if (entry(s1, x, y) != 0) return false;
  return true;
}

Bounds decomposition_bound(const Data& d, const Decomposition& dec, int n, const Rat& tol) {
  d.validate();
  if (n < 1) throw DomainError("set size must be positive");
  if (!d.has_power(1)) throw MissingData("sigma power 1 not present in data");
  Bounds best{Rat(0), Rat(0)};
  for (const auto& block : dec.blocks) {
    std::vector<char> universe(d.size(), 0);
    for (int i : block) {
      if (i < 0 || i >= d.size()) throw DomainError("object index out of range");
      universe[i] = 1;
    }
    best = bounds_max(best, sup_over_sets(d, universe, n, tol, false));
  }
  return best;
}

Bounds ratio_spectral_radius(const Data& d, const std::vector<int>& idx, int n, const Rat& tol) {
  d.validate();
  if (idx.empty()) throw DegenerateSet("empty object set");
  const Mat num_m = adjacency_of(d, idx, n);
  const Mat den_m = d.hom.restricted(idx);
  const Bounds num = spectral_radius(num_m, tol);
  Bounds den = spectral_radius(den_m, tol);
  if (den.hi == 0) throw DegenerateSet("hom table radius is zero on this set");
  bool cycle = false;
  const Digraph g = support_digraph(den_m);
  for (int i = 0; i < g.n && !cycle; ++i)
    for (int j : g.adj[i])
      if (j == i) cycle = true;
  if (!cycle)
    for (const auto& comp : scc_decompose(g))
      if (comp.size() > 1) cycle = true;
  if (!cycle) throw DegenerateSet("hom table radius is zero on this set");
  // integer table with a closed walk: radius at least 1, which sharpens the
  // certified lower end before dividing
  if (den.lo < 1) den.lo = 1;
  if (den.hi < 1) den.hi = 1;
  return Bounds{num.lo / den.hi, num.hi / den.lo};
}

}  // namespace fp::cat
