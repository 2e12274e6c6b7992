#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fp/cy.hpp"
#include "fp/error.hpp"
#include "fp/quiver.hpp"
#include "oracle.hpp"

using namespace fp;
using cy::Extended;
using cy::FracCY;
using cy::Membership;
using cy::Series;

namespace {

std::vector<Int> ints(std::vector<long> v) {
  std::vector<Int> out;
  for (long x : v) out.push_back(Int(x));
  return out;
}

Series power_series_den(int p) {
  // 1/(1-t)^p
  std::vector<long> den{1};
  for (int k = 0; k < p; k++) {
    std::vector<long> next(den.size() + 1, 0);
    for (std::size_t i = 0; i < den.size(); i++) {
      next[i] += den[i];
      next[i + 1] -= den[i];
    }
    den = next;
  }
  return Series{ints({1}), ints(den)};
}

}  // namespace

TEST_SUITE("fractional dimension") {
  TEST_CASE("lowest terms and scaling invariance") {
    CHECK(cy::fpcy({1, 3, 1, true}) == Rat(1, 3));
    CHECK(cy::fpcy({2, 6, 1, true}) == Rat(1, 3));
    CHECK(cy::fpcy({4, 1, 1, true}) == Rat(4));
    CHECK(cy::fpcy({-2, 4, 1, true}) == Rat(-1, 2));
    CHECK(cy::fpcy({0, 5, 1, true}) == Rat(0));
  }

  TEST_CASE("hereditary values from the Coxeter number") {
    struct Case {
      char family;
      int rank;
      Rat want;
    };
    const Case cases[] = {
        {'A', 2, Rat(1, 3)}, {'A', 5, Rat(2, 3)},   {'D', 4, Rat(2, 3)},
        {'E', 6, Rat(5, 6)}, {'E', 8, Rat(14, 15)},
    };
    for (const Case& c : cases) {
      const int h = quiv::coxeter_number({c.family, c.rank});
      CHECK(cy::fpcy({h - 2, h, 1, true}) == c.want);
    }
  }

  TEST_CASE("needs an atomic object") {
    CHECK_THROWS_AS(cy::fpcy({1, 3, 1, false}), Indeterminate);
    CHECK_THROWS_AS(cy::fpcy({1, 0, 1, true}), DomainError);
    CHECK_THROWS_AS(cy::fpcy({1, 3, 0, true}), DomainError);
  }

  TEST_CASE("tensor additivity") {
    CHECK(cy::cy_tensor_sum(Rat(1, 3), Rat(1, 3)) == Rat(2, 3));
    CHECK(cy::cy_tensor_sum(Rat(0), Rat(7, 2)) == Rat(7, 2));
    std::mt19937_64 rng(24601);
    for (int trial = 0; trial < 50; trial++) {
      const Rat x(long(rng() % 19) - 9, long(rng() % 7) + 1);
      const Rat y(long(rng() % 19) - 9, long(rng() % 7) + 1);
      const Rat z(long(rng() % 19) - 9, long(rng() % 7) + 1);
      CHECK(cy::cy_tensor_sum(x, y) == cy::cy_tensor_sum(y, x));
      CHECK(cy::cy_tensor_sum(cy::cy_tensor_sum(x, y), z) ==
            cy::cy_tensor_sum(x, cy::cy_tensor_sum(y, z)));
    }
  }
}

TEST_SUITE("spectrum") {
  TEST_CASE("decision table") {
    CHECK(cy::spectrum_membership({1, 1, 1, true}, 5, 5) == Membership::member);
    CHECK(cy::spectrum_membership({1, 3, 1, true}, 1, 1) == Membership::non_member);
    // on the line but off the witnessed lattice
    CHECK(cy::spectrum_membership({1, 1, 2, true}, 3, 3) == Membership::unknown);
    CHECK(cy::spectrum_membership({1, 1, 2, true}, 4, 4) == Membership::member);
    CHECK(cy::spectrum_membership({1, 1, 2, true}, -4, -4) == Membership::member);
    CHECK(cy::spectrum_membership({1, 1, 2, true}, 0, 0) == Membership::member);
    // without an atomic object the lattice certificate is unavailable
    CHECK(cy::spectrum_membership({1, 1, 1, false}, 5, 5) == Membership::unknown);
    CHECK(cy::spectrum_membership({1, 1, 1, false}, 5, 4) == Membership::non_member);
    // shift-periodic direction: a = 0
    CHECK(cy::spectrum_membership({0, 2, 1, true}, 4, 0) == Membership::member);
    CHECK(cy::spectrum_membership({0, 2, 1, true}, 3, 0) == Membership::unknown);
    CHECK(cy::spectrum_membership({0, 2, 1, true}, 4, 1) == Membership::non_member);
  }

  TEST_CASE("verdicts stay consistent with the line condition") {
    std::mt19937_64 rng(1203);
    for (int trial = 0; trial < 200; trial++) {
      const FracCY model{long(rng() % 11) - 5, long(rng() % 6) + 1, long(rng() % 3) + 1,
                         (rng() & 1) != 0};
      const long m = long(rng() % 21) - 10, n = long(rng() % 21) - 10;
      const Membership verdict = cy::spectrum_membership(model, m, n);
      const bool on_line = Int(m) * model.a == Int(n) * model.b;
      if (verdict == Membership::non_member) CHECK_FALSE(on_line);
      if (verdict == Membership::member) {
        CHECK(on_line);
        CHECK(model.has_atomic);
        CHECK(Int(m) % (Int(model.b) * model.w) == 0);
      }
    }
  }
}

TEST_SUITE("kodaira") {
  TEST_CASE("sign of the parameter decides which side degenerates") {
    auto up = cy::fp_kodaira(3, 3, Rat(3));
    CHECK(up.first == Extended{-1, Rat(0)});
    CHECK(up.second == Extended{0, Rat(2)});
    auto flat = cy::fp_kodaira(2, 0, Rat(2));
    CHECK(flat.first == Extended{0, Rat(0)});
    CHECK(flat.second == Extended{0, Rat(0)});
    auto down = cy::fp_kodaira(2, -1, Rat(2));
    CHECK(down.first == Extended{0, Rat(1)});
    CHECK(down.second == Extended{-1, Rat(0)});
    auto frac = cy::fp_kodaira(2, 5, Rat(7, 2));
    CHECK(frac.second == Extended{0, Rat(5, 2)});
  }

  TEST_CASE("hypotheses enforced") {
    CHECK_THROWS_AS(cy::fp_kodaira(1, 1, Rat(2)), DomainError);
    CHECK_THROWS_AS(cy::fp_kodaira(2, 1, Rat(1, 2)), DomainError);
  }
}

TEST_SUITE("series") {
  TEST_CASE("coefficient extraction") {
    auto c = cy::series_coefficients(power_series_den(2), 6);
    for (int n = 0; n < 6; n++) CHECK(c[std::size_t(n)] == Rat(n + 1));
    auto shifted = cy::series_coefficients(Series{ints({0, 1}), ints({0, 1, -1})}, 4);
    for (int n = 0; n < 4; n++) CHECK(shifted[std::size_t(n)] == Rat(1));
    CHECK_THROWS_AS(cy::series_coefficients(Series{ints({1}), ints({0, 1})}, 3), DomainError);
    CHECK_THROWS_AS(cy::series_coefficients(Series{ints({1}), ints({0})}, 3), DomainError);
  }

  TEST_CASE("pole order against the coefficient-fit oracle") {
    for (int p = 1; p <= 6; p++) {
      const Series h = power_series_den(p);
      const cy::PolyGrowth g = cy::hilbert_growth(h, 60);
      REQUIRE_FALSE(g.neg_inf);
      CHECK(g.value == p - 1);
      const double fit = oracle::growth_fit(cy::series_coefficients(h, 61));
      CHECK(std::abs(fit - double(p - 1)) < 0.5);
    }
  }

  TEST_CASE("polynomial series have no growth") {
    CHECK(cy::hilbert_growth(Series{ints({1, 2, 1}), ints({1})}, 10).neg_inf);
    // (1+3t)(1-t)^2 over (1-t)^2
    CHECK(cy::hilbert_growth(Series{ints({1, 1, -5, 3}), ints({1, -2, 1})}, 10).neg_inf);
    CHECK(cy::hilbert_growth(Series{ints({0}), ints({1, -1})}, 10).neg_inf);
  }

  TEST_CASE("inadmissible series are rejected") {
    // (1-2t)/(1-t) has a negative coefficient
    CHECK_THROWS_AS(cy::hilbert_growth(Series{ints({1, -2}), ints({1, -1})}, 10), DataError);
    // 1/(1-2t) grows but has no pole at one
    CHECK_THROWS_AS(cy::hilbert_growth(Series{ints({1}), ints({1, -2})}, 10), DataError);
    // 1/((1-t)(1-2t)) has a pole at one, but growth is exponential
    CHECK_THROWS_AS(cy::hilbert_growth(Series{ints({1}), ints({1, -3, 2})}, 20), DataError);
  }

  TEST_CASE("decimated closed forms") {
    Series v = cy::veronese(Series{ints({1}), ints({1, -1})}, 2);
    CHECK(v.num == ints({1}));
    CHECK(v.den == ints({1, -1}));
    Series w = cy::veronese(power_series_den(2), 2);
    CHECK(w.num == ints({1, 1}));
    CHECK(w.den == ints({1, -2, 1}));
  }

  TEST_CASE("decimation matches coefficient picking") {
    const Series samples[] = {
        Series{ints({1, 2, 3}), ints({1, -1, 0, -1})},
        Series{ints({2, 0, 1}), ints({1, 0, -2})},
        Series{ints({1, 5}), ints({2, -1})},
        Series{ints({3, 1, 4, 1, 5}), ints({1})},
    };
    for (const Series& h : samples)
      for (int s = 1; s <= 4; s++) {
        const Series v = cy::veronese(h, s);
        const auto picked = cy::series_coefficients(h, 12 * s + 1);
        const auto got = cy::series_coefficients(v, 13);
        for (int n = 0; n <= 12; n++)
          CHECK(got[std::size_t(n)] == picked[std::size_t(n) * std::size_t(s)]);
      }
  }

  TEST_CASE("decimation preserves growth") {
    for (int p = 1; p <= 4; p++)
      for (int s = 2; s <= 3; s++) {
        const cy::PolyGrowth g = cy::hilbert_growth(cy::veronese(power_series_den(p), s), 40);
        CHECK_FALSE(g.neg_inf);
        CHECK(g.value == p - 1);
      }
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("fixed values") {
    auto dom = cy::catalog_lookup("wpl:domestic");
    REQUIRE(dom.size() == 1);
    CHECK(dom[0].invariant == "fpdim");
    CHECK(dom[0].value == Extended{0, Rat(1)});
    CHECK(cy::catalog_lookup("wpl:tubular")[0].value == Extended{0, Rat(1)});
    CHECK(cy::catalog_lookup("curve:P1")[0].value == Extended{0, Rat(1)});
    CHECK(cy::catalog_lookup("curve:other")[0].value == Extended{1, Rat(0)});

    auto pio2 = cy::catalog_lookup("piontkovski:n=2");
    REQUIRE(pio2.size() == 7);
    CHECK(pio2[0].invariant == "fpdim");
    CHECK(pio2[0].value == Extended{0, Rat(1)});
    CHECK(pio2[5].invariant == "fpkappa");
    CHECK(pio2[5].value == Extended{-1, Rat(0)});
    CHECK(pio2[6].invariant == "fpkappa-inv");
    CHECK(pio2[6].value == Extended{0, Rat(1)});
    CHECK(cy::catalog_lookup("piontkovski:n=3")[6].value == Extended{1, Rat(0)});

    auto gor = cy::catalog_lookup("as-gorenstein:d=3");
    REQUIRE(gor.size() == 1);
    CHECK(gor[0].invariant == "fpcy");
    CHECK(gor[0].value == Extended{0, Rat(2)});

    auto sm = cy::catalog_lookup("smooth:dim=2");
    REQUIRE(sm.size() == 2);
    CHECK(sm[0].invariant == "fpcy");
    CHECK(sm[0].value == Extended{0, Rat(2)});
    CHECK(sm[1].invariant == "fpdim");
    CHECK(sm[1].value == Extended{1, Rat(0)});
    CHECK(cy::catalog_lookup("smooth:dim=0").size() == 1);
  }

  TEST_CASE("the fractional model rule pins both sides to zero") {
    auto fc = cy::catalog_lookup("fractional-cy");
    REQUIRE(fc.size() == 2);
    CHECK(fc[0].value == Extended{0, Rat(0)});
    CHECK(fc[1].value == Extended{0, Rat(0)});
  }

  TEST_CASE("bad keys") {
    CHECK_THROWS_AS(cy::catalog_lookup("nonsense"), DomainError);
    CHECK_THROWS_AS(cy::catalog_lookup("piontkovski:n=1"), DomainError);
    CHECK_THROWS_AS(cy::catalog_lookup("piontkovski:n=x"), DomainError);
    CHECK_THROWS_AS(cy::catalog_lookup("as-gorenstein:d=1"), DomainError);
    CHECK_THROWS_AS(cy::catalog_lookup("smooth:dim=-1"), DomainError);
  }
}
