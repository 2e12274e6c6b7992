#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fp/digraph.hpp"
#include "fp/spectral.hpp"
#include "oracle.hpp"

using namespace fp;

namespace {

Mat random_matrix(std::mt19937_64& rng, int n, int max_entry = 5, int density_pct = 60) {
  Mat m(n, n);
  std::uniform_int_distribution<int> entry(0, max_entry), pct(1, 100);
  for (auto& e : m.a) e = ExtRat(pct(rng) <= density_pct ? entry(rng) : 0);
  return m;
}

Mat permuted(const Mat& m, const std::vector<int>& p) {
  Mat r(m.rows, m.cols);
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) r.at(p[i], p[j]) = m.at(i, j);
  return r;
}

}  // namespace

TEST_SUITE("spectral_radius") {
  TEST_CASE("identity and permutation matrices are exact") {
    for (int n : {1, 2, 5, 9}) {
      Bounds b = spectral_radius(Mat::identity(n));
      CHECK(b.lo == 1);
      CHECK(b.hi == 1);
    }
    for (int r : {2, 3, 5, 8}) {
      Mat p(r, r);
      for (int b = 0; b < r; b++) p.at((b + 1) % r, b) = ExtRat(1);
      Bounds bd = spectral_radius(p);
      CHECK(bd.lo == 1);
      CHECK(bd.hi == 1);
    }
  }

  TEST_CASE("zero and diagonal matrices are exact") {
    Bounds z = spectral_radius(Mat(4, 4));
    CHECK(z.lo == 0);
    CHECK(z.hi == 0);

    Mat d(3, 3);
    d.at(0, 0) = ExtRat(Rat(7, 2));
    d.at(1, 1) = ExtRat(2);
    Bounds b = spectral_radius(d);
    CHECK(b.lo == Rat(7, 2));
    CHECK(b.hi == Rat(7, 2));
  }

  TEST_CASE("triangular matrices take the diagonal maximum exactly") {
    Mat m = from_ints({{1, 1, 0}, {0, 3, 5}, {0, 0, 2}});
    Bounds b = spectral_radius(m);
    CHECK(b.lo == 3);
    CHECK(b.hi == 3);
  }

  TEST_CASE("sqrt(2) block certified within tolerance") {
    Mat m = from_ints({{0, 1}, {2, 0}});
    Rat tol(1, 1000000000);
    Bounds b = spectral_radius(m, tol);
    CHECK(b.width() <= tol);
    // 2 - rho^2 must change sign across the certified interval
    CHECK(b.lo * b.lo <= 2);
    CHECK(b.hi * b.hi >= 2);
  }

  TEST_CASE("agrees with the characteristic polynomial oracle") {
    std::mt19937_64 rng(20260822);
    Rat tol(1, 1000000000);
    for (int trial = 0; trial < 40; trial++) {
      int n = 1 + int(rng() % 6);
      Mat m = random_matrix(rng, n);
      Bounds b = spectral_radius(m, tol);
      CHECK(b.width() <= tol);
      auto root = oracle::rho_oracle(m, tol / 4);
      // both intervals contain the true radius, so they must overlap
      CHECK(b.lo <= root.hi);
      CHECK(root.lo <= b.hi);
    }
  }

  TEST_CASE("entrywise monotonicity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; trial++) {
      int n = 2 + int(rng() % 5);
      Mat a = random_matrix(rng, n);
      Mat b = a;
      for (auto& e : b.a) e = e + ExtRat(long(rng() % 3));
      CHECK(spectral_radius(a).lo <= spectral_radius(b).hi);
    }
  }

  TEST_CASE("block maximality on planted block-triangular matrices") {
    std::mt19937_64 rng(99);
    Rat tol(1, 1000000000);
    for (int trial = 0; trial < 15; trial++) {
      int n1 = 2 + int(rng() % 3), n2 = 2 + int(rng() % 3);
      Mat top = random_matrix(rng, n1), bot = random_matrix(rng, n2);
      Mat m(n1 + n2, n1 + n2);
      for (int i = 0; i < n1; i++)
        for (int j = 0; j < n1; j++) m.at(i, j) = top.at(i, j);
      for (int i = 0; i < n2; i++)
        for (int j = 0; j < n2; j++) m.at(n1 + i, n1 + j) = bot.at(i, j);
      for (int i = 0; i < n1; i++)
        for (int j = 0; j < n2; j++) m.at(i, n1 + j) = ExtRat(long(rng() % 4));

      Bounds whole = spectral_radius(m, tol);
      Bounds parts = bounds_max(spectral_radius(top, tol), spectral_radius(bot, tol));
      CHECK(whole.lo <= parts.hi);
      CHECK(parts.lo <= whole.hi);
    }
  }

  TEST_CASE("exact relabeling equivariance") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 12; trial++) {
      int n = 2 + int(rng() % 5);
      Mat m = random_matrix(rng, n);
      std::vector<int> p(n);
      for (int i = 0; i < n; i++) p[i] = i;
      std::shuffle(p.begin(), p.end(), rng);
      Bounds b1 = spectral_radius(m);
      Bounds b2 = spectral_radius(permuted(m, p));
      CHECK(b1.lo == b2.lo);
      CHECK(b1.hi == b2.hi);
    }
  }

  TEST_CASE("input validation") {
    Mat bad(2, 2);
    bad.at(0, 1).v = Rat(-1);
    CHECK_THROWS_AS(spectral_radius(bad), DomainError);

    Mat inf(1, 1);
    inf.at(0, 0) = ExtRat::infinity();
    CHECK_THROWS_AS(spectral_radius(inf), DomainError);

    CHECK_THROWS_AS(spectral_radius(Mat(2, 3)), DomainError);
    CHECK_THROWS_AS(spectral_radius(Mat::identity(2), Rat(0)), DomainError);
  }
}

TEST_SUITE("extended_spectral_radius") {
  TEST_CASE("single infinite loop diverges") {
    Mat m(1, 1);
    m.at(0, 0) = ExtRat::infinity();
    auto r = extended_spectral_radius(m);
    CHECK(r.infinite);
  }

  TEST_CASE("off-cycle infinity is invisible") {
    Mat m(2, 2);
    m.at(0, 1) = ExtRat::infinity();
    auto r = extended_spectral_radius(m);
    CHECK_FALSE(r.infinite);
    CHECK(r.bounds.lo == 0);
    CHECK(r.bounds.hi == 0);
  }

  TEST_CASE("infinity on a cycle diverges with a finite lower bound") {
    Mat m(2, 2);
    m.at(0, 0) = ExtRat(1);
    m.at(0, 1) = ExtRat::infinity();
    m.at(1, 0) = ExtRat(1);
    m.at(1, 1) = ExtRat(1);
    auto r = extended_spectral_radius(m);
    CHECK(r.infinite);
    CHECK(r.bounds.lo >= 1);
  }

  TEST_CASE("agrees with the finite substitution scan") {
    std::mt19937_64 rng(424242);
    Rat tol(1, 1000000000);
    for (int trial = 0; trial < 20; trial++) {
      int n = 2 + int(rng() % 4);
      Mat m = random_matrix(rng, n, 3, 50);
      int ninf = 1 + int(rng() % 2);
      for (int k = 0; k < ninf; k++)
        m.at(int(rng() % n), int(rng() % n)) = ExtRat::infinity();

      auto impl = extended_spectral_radius(m, tol);
      auto scan = oracle::substitution_scan(m, 20, Rat(1000000), tol);
      CHECK(impl.infinite == scan.diverged);
      if (!impl.infinite) {
        // off-cycle: every substitution shares one radius
        CHECK(impl.bounds.lo <= scan.rho_hi.front());
        CHECK(impl.bounds.lo <= scan.rho_hi.back());
        CHECK(scan.rho_hi.back() <= impl.bounds.hi + tol);
      }
    }
  }

  TEST_CASE("rejects negative entries") {
    Mat m(1, 1);
    m.at(0, 0).v = Rat(-2);
    CHECK_THROWS_AS(extended_spectral_radius(m), DomainError);
  }
}

TEST_SUITE("scc and subpermutation") {
  TEST_CASE("components come out in reverse topological order") {
    // path 0 -> 1 -> 2 plus a 2-cycle {3, 4} feeding 0
    Mat m(5, 5);
    m.at(0, 1) = ExtRat(1);
    m.at(1, 2) = ExtRat(1);
    m.at(3, 4) = ExtRat(1);
    m.at(4, 3) = ExtRat(1);
    m.at(3, 0) = ExtRat(1);
    auto comps = scc_decompose(support_digraph(m));
    REQUIRE(comps.size() == 4);
    std::vector<size_t> pos(5);
    for (size_t c = 0; c < comps.size(); c++)
      for (int v : comps[c]) pos[v] = c;
    CHECK(pos[2] < pos[1]);
    CHECK(pos[1] < pos[0]);
    CHECK(pos[0] < pos[3]);
    CHECK(pos[3] == pos[4]);
  }

  TEST_CASE("partition matches the reachability oracle") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 20; trial++) {
      int n = 2 + int(rng() % 7);
      Mat m = random_matrix(rng, n, 1, 30);
      auto comps = scc_decompose(support_digraph(m));
      auto reach = oracle::reach_closure(m);

      std::vector<int> comp_of(n, -1);
      int total = 0;
      for (size_t c = 0; c < comps.size(); c++)
        for (int v : comps[c]) {
          comp_of[v] = int(c);
          total++;
        }
      CHECK(total == n);
      for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
          if (i == j) continue;
          bool together = reach[i][j] && reach[j][i];
          CHECK(together == (comp_of[i] == comp_of[j]));
        }
    }
  }

  TEST_CASE("subpermutation detection and radius bound") {
    Mat p = from_ints({{0, 1, 0}, {0, 0, 0}, {1, 0, 0}});
    CHECK(is_subpermutation(p));
    CHECK(spectral_radius(p).hi <= 1);

    CHECK_FALSE(is_subpermutation(from_ints({{1, 1}, {0, 0}})));
    CHECK_FALSE(is_subpermutation(from_ints({{2}})));

    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 20; trial++) {
      int n = 1 + int(rng() % 6);
      Mat m(n, n);
      std::vector<int> cols(n);
      for (int i = 0; i < n; i++) cols[i] = i;
      std::shuffle(cols.begin(), cols.end(), rng);
      for (int i = 0; i < n; i++)
        if (rng() % 2) m.at(i, cols[i]) = ExtRat(1);
      CHECK(is_subpermutation(m));
      CHECK(spectral_radius(m).hi <= 1);
    }
  }
}

TEST_SUITE("matrix parsing") {
  TEST_CASE("accepts rationals, integers, inf, comments") {
    Mat m = parse_matrix("# comment\n1 1/2 0\n3/4 inf 2\n0 0 5\n");
    CHECK(m.rows == 3);
    CHECK(m.at(0, 1).v == Rat(1, 2));
    CHECK(m.at(1, 1).inf);
    CHECK(m.at(2, 2).v == 5);
  }

  TEST_CASE("reports position of bad tokens") {
    try {
      parse_matrix("1 0\n0 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 3);
    }
    CHECK_THROWS_AS(parse_matrix("1 0\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1 -2\n3 4\n"), DomainError);
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
  }

  TEST_CASE("format emits canonical tokens") {
    Mat m(1, 3);
    m.at(0, 0) = ExtRat(Rat(2, 4));
    m.at(0, 1) = ExtRat::infinity();
    m.at(0, 2) = ExtRat(7);
    CHECK(format_matrix(m) == "1/2 inf 7\n");
  }
}
