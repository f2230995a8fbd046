#include <algorithm>
#include <functional>
#include <map>

#include "doctest.h"
#include "iso2/enumerate.hpp"

using namespace iso2;

namespace {

// Box enumeration oracle: all integer vectors with entries in [-b, b].
void for_box(int n, i64 b, const std::function<void(const Vec&)>& f) {
  Vec v(static_cast<std::size_t>(n), -b);
  for (;;) {
    f(v);
    int i = n - 1;
    while (i >= 0 && v[i] == b) v[i--] = -b;
    if (i < 0) return;
    ++v[i];
  }
}

// Any Q(x) <= m has |x_i| <= sqrt(m * (G^-1)_ii); a generous box suffices for these forms.
std::vector<Vec> box_norm(const QuadraticForm& l, i64 m, i64 box) {
  std::vector<Vec> out;
  for_box(l.rank(), box, [&](const Vec& v) {
    if (evaluate(l, v) == m) out.push_back(v);
  });
  return out;
}

const QuadraticForm kForms[] = {
    QuadraticForm::diagonal({1, 1}),
    a2_plane(),
    QuadraticForm(IntMatrix{{2, 1, 1}, {1, 3, 0}, {1, 0, 3}}),
    QuadraticForm::diagonal({1, 2, 2, 3}),
    assemble_candidate(0, 1, 2, 0, 0, 0, 3),
    assemble_candidate(1, 1, 5, 1, -1, 2, 7),
};

}  // namespace

TEST_CASE("vectors of norm match a box enumeration") {
  for (const QuadraticForm& l : kForms) {
    const i64 box = l.rank() <= 3 ? 6 : 4;
    for (i64 m = 0; m <= 6; ++m) {
      auto got = vectors_of_norm(l, m);
      auto want = box_norm(l, m, box);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("shell walker ordering and affine shells") {
  // coordinate 0 outermost and ascending
  const auto vs = vectors_of_norm(QuadraticForm::diagonal({1, 1}), 5);
  REQUIRE(vs.size() == 8);
  CHECK(vs.front() == Vec{-2, -1});
  CHECK(vs.back() == Vec{2, 1});
  // (z + 1/2)^2 shifted: z^2 + z over Z hits 0 at z = 0, -1 and 2 at z = 1, -2
  ShellWalker w(IntMatrix{{2}}, Vec{1}, 0);
  std::vector<i64> hits;
  w.walk(4, ShellWalker::Mode::kEqual, [&](std::span<const i64> z) {
    hits.push_back(z[0]);
    return false;
  });
  CHECK(hits == std::vector<i64>{-2, 1});
}

TEST_CASE("theta prefix agrees with box counts") {
  const QuadraticForm l = QuadraticForm::diagonal({1, 2, 2, 3});
  const auto theta = theta_prefix(l, 8);
  std::map<i64, i64> counts;
  for_box(4, 3, [&](const Vec& v) {
    const i64 q = evaluate(l, v);
    if (q <= 8) ++counts[q];
  });
  for (i64 m = 0; m <= 8; ++m) CHECK(theta[m] == counts[m]);
  const auto small = vectors_of_norm_at_most(a2_plane(), 2);
  CHECK(small.size() == 7);
}

TEST_CASE("binary representations agree with a pair search") {
  const QuadraticForm l = QuadraticForm(IntMatrix{{2, 1, 1}, {1, 3, 0}, {1, 0, 3}});
  for (i64 a = 1; a <= 6; ++a)
    for (i64 b = 0; 2 * b <= a; ++b)
      for (i64 c = a; c <= 7; ++c) {
        if (a * c - b * b <= 0) continue;
        bool oracle = false;
        for (const Vec& x : box_norm(l, a, 3)) {
          for (const Vec& y : box_norm(l, c, 3))
            if (bilinear(l, x, y) == b) {
              oracle = true;
              break;
            }
          if (oracle) break;
        }
        const auto w = represent_binary(l, BinaryForm{a, b, c});
        CHECK(w.has_value() == oracle);
      }
}

TEST_CASE("binary representation witnesses map back through reduction") {
  const QuadraticForm l = QuadraticForm::diagonal({1, 2, 2, 3});
  const BinaryForm f{14, 9, 9};  // non-reduced input
  const auto w = represent_binary(l, f);
  REQUIRE(w);
  CHECK(congruence(l.gram(), w->matrix()) == f.gram());
}

TEST_CASE("I2 representation") {
  CHECK(represents_i2(QuadraticForm::diagonal({1, 1, 3})));
  CHECK_FALSE(represents_i2(QuadraticForm::diagonal({1, 2, 2, 3})));
  CHECK_FALSE(represents_i2(assemble_candidate(0, 1, 2, 0, 0, 0, 3)));
}

TEST_CASE("isometry and successive minima") {
  const QuadraticForm a = QuadraticForm(IntMatrix{{2, 1}, {1, 2}});
  const QuadraticForm b = QuadraticForm(IntMatrix{{2, -1}, {-1, 2}});
  const auto t = is_isometric(a, b);
  REQUIRE(t);
  CHECK(congruence(a.gram(), *t) == b.gram());
  CHECK_FALSE(is_isometric(QuadraticForm::diagonal({1, 6}), QuadraticForm::diagonal({2, 3})));
  const QuadraticForm sheared = transform(QuadraticForm::diagonal({1, 2, 2, 3}),
                                          IntMatrix{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  CHECK(is_isometric(sheared, QuadraticForm::diagonal({1, 2, 2, 3})));
  CHECK(successive_minima(QuadraticForm::diagonal({1, 2, 2, 3}), 4) == std::vector<i64>{1, 2, 2, 3});
  CHECK(successive_minima(QuadraticForm(IntMatrix{{5, 2}, {2, 13}}), 2) == std::vector<i64>{5, 13});
  // known obstruction minima
  CHECK(successive_minima(QuadraticForm(IntMatrix{{2, 1}, {1, 5}}), 2)[1] == 5);
}
