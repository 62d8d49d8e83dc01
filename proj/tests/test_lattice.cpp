#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ffgs/lattice.hpp"

using namespace ffgs;

namespace {

QMat cols(const std::vector<std::vector<Rat>>& columns) {
  QMat m(columns.empty() ? 0 : columns[0].size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_col(j, columns[j]);
  return m;
}

bool in_R_all(const QMat& m, const RingSpec& ring) { return entries_in_base(m, Base::R, ring); }

}  // namespace

TEST_CASE("hermite form frozen examples") {
  RingSpec r2(2);
  SUBCASE("row-reduced pair") {
    Lattice l = hermite_form(cols({{1, 1}, {1, -1}}), r2);
    CHECK(l.basis == cols({{1, 1}, {0, 2}}));
  }
  SUBCASE("standard basis is fixed") {
    Lattice l = hermite_form(QMat::identity(3), r2);
    CHECK(l.basis == QMat::identity(3));
  }
  SUBCASE("half-integral generators") {
    Lattice l = hermite_form(cols({{Rat(1) / 2, Rat(1) / 2}, {1, 0}}), r2);
    CHECK(l.basis == cols({{Rat(1) / 2, Rat(1) / 2}, {0, 1}}));
  }
  SUBCASE("empty set gives zero lattice") {
    Lattice l = hermite_form(QMat(2, 0), r2);
    CHECK(l.rank() == 0);
    CHECK(l.ambient == 2);
  }
}

TEST_CASE("hermite form is canonical under recombination") {
  RingSpec r2(2);
  QMat g = cols({{2, 0, 4}, {1, 1, 1}, {0, 2, 2}});
  Lattice l1 = hermite_form(g, r2);
  // shuffle columns and add R-multiples of one another
  QMat g2 = cols({{0, 2, 2}, {1, 1, 1}, {2, 0, 4}});
  Lattice l2 = hermite_form(g2, r2);
  QMat g3 = g;
  for (std::size_t i = 0; i < 3; ++i) g3.at(i, 0) += 3 * g.at(i, 1) - 2 * g.at(i, 2);
  Lattice l3 = hermite_form(g3, r2);
  CHECK(l1 == l2);
  CHECK(l1 == l3);
}

TEST_CASE("smith form frozen examples") {
  RingSpec r2(2);
  SUBCASE("already diagonal") {
    QMat m = QMat::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}});
    SmithResult s = smith_form(m, r2);
    CHECK(s.d == m);
    CHECK(s.u * m * s.v == s.d);
  }
  SUBCASE("2x2 with elementary divisors 2, 4") {
    QMat m = QMat::from_rows({{Rat(2), Rat(2)}, {Rat(2), Rat(6)}});
    SmithResult s = smith_form(m, r2);
    CHECK(s.d == QMat::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}}));
    CHECK(s.u * m * s.v == s.d);
    CHECK(in_R_all(s.u, r2));
    CHECK(in_R_all(s.v, r2));
    CHECK(valuation(s.u.det(), r2) == Valuation::of(0));
    CHECK(valuation(s.v.det(), r2) == Valuation::of(0));
  }
  SUBCASE("zero matrix") {
    QMat m(2, 3);
    SmithResult s = smith_form(m, r2);
    CHECK(s.d.is_zero());
  }
  SUBCASE("entries must be in R") {
    QMat m = QMat::from_rows({{Rat(1) / 2}});
    CHECK_THROWS_AS(smith_form(m, r2), LocationError);
  }
}

TEST_CASE("saturation") {
  RingSpec r2(2);
  SUBCASE("divide by p-power content") {
    Lattice i = hermite_form(cols({{2, 4}}), r2);
    Lattice s = saturate(i, r2);
    CHECK(s.basis == cols({{1, 2}}));
  }
  SUBCASE("already saturated") {
    Lattice i = hermite_form(cols({{1, 0}}), r2);
    CHECK(saturate(i, r2) == i);
  }
  SUBCASE("full-rank sublattice saturates to R^2") {
    Lattice i = hermite_form(cols({{2, 2}, {0, 4}}), r2);
    Lattice s = saturate(i, r2);
    CHECK(s.basis == QMat::identity(2));
  }
  SUBCASE("content-free but unsaturated input") {
    // span{(2,1),(0,2)} has unit entries in both columns yet index 4 in R^2.
    Lattice i = hermite_form(cols({{2, 1}, {0, 2}}), r2);
    Lattice s = saturate(i, r2);
    CHECK(s.basis == QMat::identity(2));
  }
  SUBCASE("idempotent and monotone") {
    Lattice i = hermite_form(cols({{2, 2, 0}, {0, 4, 4}}), r2);
    Lattice s = saturate(i, r2);
    CHECK(saturate(s, r2) == s);
    for (std::size_t j = 0; j < i.rank(); ++j) CHECK(lattice_contains(s, i.basis.col(j), r2));
  }
}

TEST_CASE("flat quotient") {
  RingSpec r2(2);
  SUBCASE("kills a torsion coordinate") {
    Lattice rel = hermite_form(cols({{0, 2}}), r2);
    FlatQuotientResult q = flat_quotient(2, rel, r2);
    CHECK(q.rank == 1);
    CHECK((q.projection * rel.basis).is_zero());
    CHECK(q.projection * q.section == QMat::identity(1));
    CHECK(in_R_all(q.projection, r2));
  }
  SUBCASE("no relations") {
    FlatQuotientResult q = flat_quotient(3, hermite_form(QMat(3, 0), r2), r2);
    CHECK(q.rank == 3);
    CHECK(q.projection == QMat::identity(3));
  }
  SUBCASE("saturates before dividing") {
    Lattice rel = hermite_form(cols({{2, 2}}), r2);
    FlatQuotientResult q = flat_quotient(2, rel, r2);
    CHECK(q.rank == 1);
    // the saturated relation (1,1) must die too
    CHECK(mat_vec(q.projection, {Rat(1), Rat(1)}) == std::vector<Rat>{Rat(0)});
  }
  SUBCASE("projection tensored with K is the K-quotient") {
    Lattice rel = hermite_form(cols({{2, 4}}), r2);
    FlatQuotientResult q = flat_quotient(2, rel, r2);
    QMat ker = q.projection.kernel();
    CHECK(ker.cols() == 1);
    CHECK(coords_in_span(rel.basis, ker).has_value());
  }
}

TEST_CASE("kaplansky ranks") {
  RingSpec r2(2);
  CHECK(kaplansky_ranks(hermite_form(QMat::identity(2), r2)) ==
        std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(kaplansky_ranks(hermite_form(cols({{Rat(1) / 2, 0}, {0, 1}}), r2)) ==
        std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(kaplansky_ranks(hermite_form(QMat(4, 0), r2)) ==
        std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("randomized smith/hermite/saturate properties") {
  // Same shape as the acceptance bulk run, smaller count here.
  std::mt19937_64 rng(20240915);
  std::uniform_int_distribution<int> dim(1, 6), val(0, 4), unit(-9, 9), pick(0, 2);
  const unsigned long primes[3] = {2, 3, 5};
  for (int iter = 0; iter < 40; ++iter) {
    RingSpec ring(primes[pick(rng)]);
    std::size_t rows = dim(rng), c = dim(rng);
    QMat m(rows, c);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        int u = unit(rng);
        if (u == 0) continue;
        while (u % static_cast<int>(ring.p()) == 0) u += 1;
        m.at(i, j) = Rat(u) * pow_p(ring, val(rng));
      }
    SmithResult s = smith_form(m, ring);
    CHECK(s.u * m * s.v == s.d);
    CHECK(valuation(s.u.det(), ring) == Valuation::of(0));
    CHECK(valuation(s.v.det(), ring) == Valuation::of(0));
    Lattice l = hermite_form(m, ring);
    Lattice sat = saturate(l, ring);
    CHECK(saturate(sat, ring) == sat);
    CHECK(sat.rank() == l.rank());
  }
}
