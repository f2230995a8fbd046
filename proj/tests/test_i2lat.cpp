#include <cmath>
#include <set>
#include <tuple>

#include "doctest.h"
#include "iso2/enumerate.hpp"
#include "iso2/errors.hpp"
#include "iso2/i2lat.hpp"

using namespace iso2;

namespace {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Each index-p sublattice is {v : v . w = 0 mod p} for a point w of P^1(F_p).
// The reduced form is (mu1, b, mu2) with b^2 = mu1 mu2 - p^2.
std::set<std::tuple<i64, i64, i64>> oracle_classes(i64 p) {
  std::set<std::tuple<i64, i64, i64>> out;
  std::vector<std::pair<i64, i64>> points{{1, 0}};
  for (i64 j = 0; j < p; ++j) points.emplace_back(j, 1);
  const i64 box = p + 1;
  for (auto [wx, wy] : points) {
    std::vector<std::pair<i64, i64>> vs;
    for (i64 x = -box; x <= box; ++x)
      for (i64 y = -box; y <= box; ++y)
        if ((x || y) && mod_floor(x * wx + y * wy, p) == 0) vs.emplace_back(x, y);
    i64 mu1 = INT64_MAX;
    std::pair<i64, i64> v1;
    for (auto v : vs)
      if (v.first * v.first + v.second * v.second < mu1) {
        mu1 = v.first * v.first + v.second * v.second;
        v1 = v;
      }
    i64 mu2 = INT64_MAX;
    for (auto v : vs)
      if (v.first * v1.second != v.second * v1.first) mu2 = std::min(mu2, v.first * v.first + v.second * v.second);
    const i64 b2 = mu1 * mu2 - p * p;
    const i64 b = std::llround(std::sqrt(static_cast<double>(b2)));
    REQUIRE(b * b == b2);
    out.emplace(mu1, b, mu2);
  }
  return out;
}

}  // namespace

TEST_CASE("index-p sublattices of small primes") {
  auto forms = [](i64 p) {
    std::vector<BinaryForm> f;
    for (const auto& s : index_p_sublattices(p)) f.push_back(s.form);
    return f;
  };
  CHECK(forms(2) == std::vector<BinaryForm>{{1, 0, 4}, {2, 0, 2}});
  CHECK(forms(3) == std::vector<BinaryForm>{{1, 0, 9}, {2, 1, 5}});
  CHECK(forms(5) == std::vector<BinaryForm>{{1, 0, 25}, {2, 1, 13}, {5, 0, 5}});
  CHECK_THROWS_AS(index_p_sublattices(9), PreconditionViolated);
}

TEST_CASE("index-p sublattices agree with the minima oracle") {
  for (i64 p = 2; p <= 60; ++p) {
    if (!is_prime(p)) continue;
    std::set<std::tuple<i64, i64, i64>> got;
    for (const auto& s : index_p_sublattices(p)) {
      got.emplace(s.form.a, s.form.b, s.form.c);
      CHECK(s.form.is_reduced());
      CHECK(s.basis.transpose() * s.basis == s.form.gram());
      CHECK(determinant_exact(s.hnf) == p);
    }
    CHECK(got == oracle_classes(p));
  }
}

TEST_CASE("arithmetic conditions hold for every odd index") {
  for (i64 p = 3; p <= 200; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& s : index_p_sublattices(p)) {
      CHECK(check_arith_conditions(s.form, p));
      CHECK(3 * s.form.a * s.form.a <= 4 * p * p);
    }
  }
  CHECK(check_arith_conditions(BinaryForm{2, 1, 13}, 5));
  CHECK(check_arith_conditions(BinaryForm{5, 0, 5}, 5));
  CHECK_FALSE(check_arith_conditions(BinaryForm{3, 1, 3}, 3));
  // determinant 49 is not 25
  CHECK_FALSE(check_arith_conditions(BinaryForm{7, 0, 7}, 5));
}

TEST_CASE("subtraction") {
  const SubtractedPair s = subtract(BinaryForm{2, 1, 13}, 2, 0, 2, false);
  CHECK(s.base == BinaryTriple{2, 1, 5});
  CHECK_FALSE(s.halved);
  CHECK_THROWS_AS(subtract(BinaryForm{1, 0, 25}, 2, 0, 0, false), PreconditionViolated);
  CHECK_THROWS_AS(subtract(BinaryForm{2, 1, 13}, 2, 0, 1, true), DivisibilityViolated);
  const i64 p = 307;
  const BinaryForm ell{10, 1, (p * p + 1) / 10};
  CHECK(ell.c == 9425);
  const SubtractedPair h = subtract(ell, 2, 1, 0, false);
  CHECK(h.base == BinaryTriple{8, 1, 9425});
  // base sits inside the halved form with index 2
  const SubtractedPair hv = subtract(BinaryForm{5, 3, 9}, 1, 1, 1, true);
  REQUIRE(hv.halved);
  CHECK(congruence(IntMatrix{{hv.halved->a, hv.halved->b}, {hv.halved->b, hv.halved->c}}, IntMatrix{{1, 0}, {0, 2}}) ==
        IntMatrix{{hv.base.a, hv.base.b}, {hv.base.b, hv.base.c}});
}

TEST_CASE("lemma definiteness implies positive determinant") {
  const struct {
    i64 t, alpha, beta;
  } params[] = {{14, 0, 1}, {14, 1, 0}, {18, 0, 1}, {35, 0, 1}, {35, 1, 0}, {5, 0, 1}, {5, 1, 0}, {2, 0, 2},
                {77, 0, 1}, {63, 0, 1}, {2, 0, 3}, {15, 0, 1}, {2, 1, 0}, {5, 0, 3}, {9, 0, 1}, {5, 0, 5}};
  const Ratio us[] = {{1, 1}, {1, 2}, {2, 1}, {3, 1}};
  for (i64 p = 3; p <= 200; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& s : index_p_sublattices(p))
      for (const auto& q : params) {
        std::vector<std::optional<Ratio>> choices{std::nullopt};
        for (Ratio u : us) choices.emplace_back(u);
        for (const auto& u : choices)
          if (is_definite_by_lemma(s.form, q.t, q.alpha, q.beta, u, p)) {
            const BinaryTriple b = subtract(s.form, q.t, q.alpha, q.beta, false).base;
            CHECK(b.is_definite());
          }
      }
  }
  CHECK(is_definite_by_lemma(BinaryForm{10, 3, 9425}, 2, 1, 0, std::nullopt, 307));
  CHECK(is_definite_by_lemma(BinaryForm{10, 3, 9425}, 14, 0, 1, std::nullopt, 241));
  CHECK_FALSE(is_definite_by_lemma(BinaryForm{2, 1, 29041}, 14, 1, 1, std::nullopt, 241));
}

TEST_CASE("shear variants are isometric") {
  for (const BinaryForm f : {BinaryForm{2, 1, 5}, BinaryForm{1, 0, 25}, BinaryForm{10, 3, 9425}}) {
    for (const ShearVariant& v : shear_variants(f)) {
      CHECK(congruence(f.gram(), v.witness) == v.form.gram());
      CHECK(v.form.det() == f.det());
      const i128 d = determinant_exact(v.witness);
      CHECK((d == 1 || d == -1));
    }
  }
  const auto v = shear_variants(BinaryForm{2, 1, 5});
  CHECK(gauss_reduce(v[0].form).form == BinaryForm{2, 1, 5});
  CHECK(v[0].form == BinaryForm{5, -4, 5});
  CHECK(shear_variants(BinaryForm{1, 0, 25})[0].form == BinaryForm{26, -25, 25});
}

TEST_CASE("subtracted witnesses lift to the orthogonal sum") {
  // ell(2;0,2) of [[2,1],[1,13]] is [[2,1],[1,5]]
  const BinaryForm ell{2, 1, 13};
  const QuadraticForm m(IntMatrix{{2, 1}, {1, 5}});
  const auto w = represent_binary(m, subtract(ell, 2, 0, 2, false).base.form());
  REQUIRE(w);
  const IntMatrix lifted = append_subtraction_row(w->matrix(), 0, 2);
  const QuadraticForm sum = orthogonal_sum(m, QuadraticForm::diagonal({2}));
  CHECK(congruence(sum.gram(), lifted) == ell.gram());
}
