#include "doctest.h"
#include "iso2/errors.hpp"
#include "iso2/qf.hpp"

using namespace iso2;

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(QuadraticForm(IntMatrix{{1, 2}, {2, 1}}), NotPositiveDefinite);
  CHECK_THROWS_AS(QuadraticForm(IntMatrix{{1, 0}, {1, 1}}), ShapeMismatch);
  CHECK_THROWS_AS(QuadraticForm(IntMatrix{{1, 0, 0}}), ShapeMismatch);
  CHECK_THROWS_AS(QuadraticForm(IntMatrix::identity(6)), OutOfRange);
  CHECK_THROWS_AS(QuadraticForm::diagonal({1, 2'000'000}), OutOfRange);
  CHECK_THROWS_AS(BinaryForm::make(2, 2, 2), NotPositiveDefinite);
  CHECK_NOTHROW(QuadraticForm::diagonal({1, 2, 3, 4, 5}));
}

TEST_CASE("determinants") {
  CHECK(determinant(a2_plane()) == 3);
  CHECK(determinant(QuadraticForm::diagonal({1, 2, 2, 3})) == 12);
  CHECK(determinant_exact(hyperbolic_plane()) == -1);
  // zero leading pivot forces a row swap
  CHECK(determinant_exact(IntMatrix{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}) == 12);
  const QuadraticForm l = assemble_candidate(0, 1, 2, 0, 0, 0, 3);
  CHECK(l.rank() == 5);
  CHECK(determinant(l) == determinant(section(l, 5)));
}

TEST_CASE("rank") {
  CHECK(rank_of(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(rank_of(IntMatrix{{0, 0}, {0, 0}}) == 0);
  CHECK(rank_of(IntMatrix{{2, 1, 0}, {1, 0, 1}, {3, 1, 1}}) == 2);
}

TEST_CASE("gauss reduction is a reduced equivalent form") {
  for (i64 a = 1; a <= 30; ++a)
    for (i64 b = -40; b <= 40; ++b)
      for (i64 c = 1; c <= 60; ++c) {
        if (a * c - b * b <= 0) continue;
        const BinaryForm f{a, b, c};
        const ReducedBinary r = gauss_reduce(f);
        CHECK(r.form.is_reduced());
        CHECK(r.form.det() == f.det());
        CHECK(congruence(f.gram(), r.transform) == r.form.gram());
        const i128 d = determinant_exact(r.transform);
        CHECK((d == 1 || d == -1));
      }
}

TEST_CASE("gauss reduction is canonical") {
  // equivalent forms from random unimodular transforms reduce identically
  const BinaryForm f{5, 2, 13};
  const IntMatrix ts[] = {{{1, 1}, {0, 1}}, {{2, 1}, {1, 1}}, {{0, 1}, {1, 0}}, {{3, -2}, {-1, 1}}, {{1, 0}, {-4, -1}}};
  const BinaryForm base = gauss_reduce(f).form;
  for (const IntMatrix& t : ts) {
    const IntMatrix g = congruence(f.gram(), t);
    CHECK(gauss_reduce(BinaryForm{g(0, 0), g(0, 1), g(1, 1)}).form == base);
  }
}

TEST_CASE("orthogonal sums and sections") {
  const QuadraticForm s = orthogonal_sum(QuadraticForm::diagonal({1, 3}), a2_plane());
  CHECK(s.gram() == IntMatrix{{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}});
  CHECK(section(s, 2) == QuadraticForm::diagonal({1, 3}));
  const Vec v{1, 1, 1, -1};
  CHECK(evaluate(s, v) == 1 + 3 + 2 + 2 - 2);
  CHECK_THROWS_AS(orthogonal_sum(s, a2_plane()), OutOfRange);
}
