#include <random>

#include "doctest.h"
#include "iso2/enumerate.hpp"
#include "iso2/errors.hpp"
#include "iso2/i2lat.hpp"
#include "iso2/local.hpp"
#include "iso2/padic.hpp"

using namespace iso2;

namespace {

void check_round_trip(const QuadraticForm& l, i64 p) {
  const JordanDecomposition jd = jordan_decompose(l, p);
  const i128 q = ipow(p, jd.precision);
  const IntMatrix w = congruence(l.gram(), jd.transform);
  const IntMatrix d = jd.gram();
  for (int i = 0; i < l.rank(); ++i)
    for (int j = 0; j < l.rank(); ++j) CHECK(mod_floor(w(i, j) - d(i, j), static_cast<i64>(q)) == 0);
  CHECK(determinant_exact(jd.transform) % p != 0);
  CHECK(ord_p(determinant_exact(d), p) == ord_p(determinant(l), p));
}

// Three-square theorem.
bool sum_of_three_squares(i64 n) {
  while (n % 4 == 0) n /= 4;
  return n % 8 != 7;
}

std::vector<BinaryForm> small_reduced_forms(i64 max_c) {
  std::vector<BinaryForm> out;
  for (i64 a = 1; a <= max_c; ++a)
    for (i64 b = 0; 2 * b <= a; ++b)
      for (i64 c = a; c <= max_c; ++c) out.push_back(BinaryForm{a, b, c});
  return out;
}

}  // namespace

TEST_CASE("Jordan decomposition examples") {
  const QuadraticForm l = QuadraticForm::diagonal({1, 2, 2, 3});
  CHECK(jordan_decompose(l, 2).describe() == "0:<1,3> 1:<1,1>");
  CHECK(jordan_decompose(l, 3).describe() == "0:<+,-,-> 1:<+>");
  CHECK(jordan_decompose(a2_plane(), 2).describe() == "0:A");
  CHECK(jordan_decompose(QuadraticForm(IntMatrix{{2, 1}, {1, 4}}), 2).describe() == "0:H");
  CHECK(jordan_decompose(QuadraticForm::diagonal({3, 3, 3, 5}), 2).describe() == "0:<3,3,3,5>");
}

TEST_CASE("Jordan decomposition round trip") {
  const QuadraticForm forms[] = {
      QuadraticForm::diagonal({1, 2, 2, 3}),
      a2_plane(),
      QuadraticForm(IntMatrix{{2, 1, 1}, {1, 2, 0}, {1, 0, 3}}),
      QuadraticForm(IntMatrix{{2, 0, 1}, {0, 2, 1}, {1, 1, 3}}),
      QuadraticForm(IntMatrix{{4, 2, 0, 1}, {2, 4, 1, 0}, {0, 1, 6, 2}, {1, 0, 2, 8}}),
      assemble_candidate(1, 1, 5, 1, -1, 2, 7),
      QuadraticForm(IntMatrix{{12, 6}, {6, 12}}),
  };
  for (const auto& l : forms)
    for (i64 p : {2, 3, 5, 7}) check_round_trip(l, p);
}

TEST_CASE("odd symbol") {
  const OddSymbol s = odd_symbol(QuadraticForm::diagonal({1, 2, 2, 3}), 3);
  CHECK(s.components.at(0) == std::make_pair(3, 1));
  CHECK(s.components.at(1) == std::make_pair(1, 1));
}

TEST_CASE("three squares agree with the lifting search") {
  const QuadraticForm i3 = identity_form(3);
  for (i64 n = 1; n <= 600; ++n) {
    CHECK(locally_represents_number(i3, n, 2) == sum_of_three_squares(n));
    CHECK(locally_represents_number(i3, n, 3));
  }
  const QuadraticForm d123 = QuadraticForm::diagonal({1, 2, 3});
  for (i64 n = 1; n <= 300; ++n) {
    bool global = !vectors_of_norm(d123, n).empty();
    bool local = true;
    for (i64 p : {2, 3}) local = local && locally_represents_number(d123, n, p);
    CHECK(local == global);
  }
}

TEST_CASE("class number one lattices: local everywhere iff global") {
  const QuadraticForm lattices[] = {identity_form(3), identity_form(4),
                                    orthogonal_sum(QuadraticForm::diagonal({1, 3}), a2_plane())};
  for (const auto& m : lattices) {
    for (const BinaryForm& ell : small_reduced_forms(9)) {
      bool local = true;
      for (i64 p : prime_factors(2 * static_cast<i128>(ell.det()) * determinant(m)))
        local = local && is_locally_represented(ell, m, p);
      CHECK_MESSAGE(local == represent_binary(m, ell).has_value(), ell, " in ", m);
    }
  }
}

TEST_CASE("rules agree with the lifting search") {
  std::mt19937_64 rng(20261015);
  const QuadraticForm lattices[] = {
      QuadraticForm::diagonal({1, 1, 3}), QuadraticForm::diagonal({1, 3, 9}), QuadraticForm::diagonal({1, 5, 5}),
      QuadraticForm::diagonal({1, 2, 3, 5}), QuadraticForm(IntMatrix{{2, 1, 0}, {1, 2, 0}, {0, 0, 3}}),
      QuadraticForm::diagonal({2, 3, 15}), QuadraticForm::diagonal({1, 1, 1, 3})};
  int compared = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto& m = lattices[rng() % std::size(lattices)];
    const i64 p = std::array<i64, 2>{3, 5}[rng() % 2];
    const i64 a = 1 + static_cast<i64>(rng() % 30);
    const i64 c = a + static_cast<i64>(rng() % 40);
    const i64 b = static_cast<i64>(rng() % static_cast<std::uint64_t>(a / 2 + 1));
    const BinaryForm ell{a, b, c};
    const LocalResult fast = decide_local(ell, m, p);
    if (fast.path == LocalPath::kFallback) continue;
    CHECK_MESSAGE(fast.represented == fallback_locally_represented(ell, m, p), ell, " in ", m, " at ", p);
    ++compared;
  }
  CHECK(compared >= 500);
}

TEST_CASE("local representation of the subtracted forms") {
  // ell(15;0,1) at 2 is A when a = 2 mod 8, and always lands in <3,3,3,5>
  const QuadraticForm m2 = QuadraticForm::diagonal({3, 3, 3, 5});
  for (i64 p = 23; p <= 200; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& s : index_p_sublattices(p)) {
      const BinaryTriple sub = subtract(s.form, 15, 0, 1, false).base;
      if (!sub.is_definite()) continue;
      CHECK(is_locally_represented(sub.form(), m2, 2));
      if (mod_floor(s.form.a, 8) == 2) CHECK(jordan_decompose(sub.form().form(), 2).describe() == "0:A");
    }
  }
  CHECK(is_locally_represented(BinaryForm{1, 0, 1}, identity_form(4), 7));
  CHECK(decide_local(BinaryForm{1, 0, 1}, identity_form(4), 7).path == LocalPath::kRule1);
  CHECK_FALSE(is_locally_represented(BinaryForm{1, 0, 4}, orthogonal_sum(identity_form(1), a2_plane()), 2));
  const bool everywhere = is_locally_represented(BinaryForm{2, 1, 5}, QuadraticForm::diagonal({1, 2, 2}), 3) &&
                          is_locally_represented(BinaryForm{2, 1, 5}, QuadraticForm::diagonal({1, 2, 2}), 2);
  CHECK_FALSE(everywhere);
}

TEST_CASE("same genus") {
  const QuadraticForm a = orthogonal_sum(QuadraticForm::diagonal({1, 2}), a2_plane());
  CHECK(same_genus(a, QuadraticForm::diagonal({1, 1, 1, 6})));
  const QuadraticForm b = orthogonal_sum(QuadraticForm::diagonal({1, 2}), QuadraticForm(IntMatrix{{2, 1}, {1, 5}}));
  CHECK(same_genus(b, QuadraticForm::diagonal({1, 1, 1, 18})));
  CHECK(same_genus(b, QuadraticForm(IntMatrix{{2, 1, 1, 0}, {1, 2, 0, 0}, {1, 0, 3, 1}, {0, 0, 1, 3}})));
  CHECK_FALSE(same_genus(identity_form(4), QuadraticForm::diagonal({1, 1, 2, 2})));
  CHECK_FALSE(same_genus(QuadraticForm::diagonal({1, 1, 1, 6}), QuadraticForm::diagonal({1, 1, 2, 3})));
  CHECK_FALSE(same_genus(QuadraticForm::diagonal({1, 7}), QuadraticForm(IntMatrix{{2, 1}, {1, 4}})));
  // transformed copies
  const IntMatrix u{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}};
  const i128 du = determinant_exact(u);
  CHECK((du == 1 || du == -1));
  CHECK(same_genus(a, transform(a, u)));
  CHECK(same_genus(b, transform(b, u)));
}
