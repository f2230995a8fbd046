#include <cmath>
#include <set>

#include "doctest.h"
#include "iso2/enumerate.hpp"
#include "iso2/errors.hpp"
#include "iso2/i2lat.hpp"
#include "iso2/report.hpp"
#include "iso2/verify.hpp"

using namespace iso2;

namespace {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::vector<double>> inverse(const IntMatrix& g) {
  const int n = static_cast<int>(g.rows());
  std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(g(i, j));
    a[i][n + i] = 1.0;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    const double d = a[c][c];
    for (auto& x : a[c]) x /= d;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<double>> out(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

// All vectors of norm n by a box search over |x_i| <= sqrt(n (G^-1)_ii).
std::vector<std::vector<i64>> box_vectors(const IntMatrix& g, i64 n) {
  const int r = static_cast<int>(g.rows());
  const auto inv = inverse(g);
  std::vector<i64> bound(r);
  for (int i = 0; i < r; ++i) bound[i] = static_cast<i64>(std::sqrt(n * inv[i][i])) + 1;
  std::vector<std::vector<i64>> out;
  std::vector<i64> x(r);
  for (int i = 0; i < r; ++i) x[i] = -bound[i];
  while (true) {
    i64 q = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) q += x[i] * g(i, j) * x[j];
    if (q == n) out.push_back(x);
    int k = 0;
    while (k < r && x[k] == bound[k]) x[k] = -bound[k], ++k;
    if (k == r) break;
    ++x[k];
  }
  return out;
}

i64 inner(const IntMatrix& g, const std::vector<i64>& u, const std::vector<i64>& v) {
  i64 s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * g(i, j) * v[j];
  return s;
}

bool box_represents(const IntMatrix& g, const BinaryForm& f) {
  const auto us = box_vectors(g, f.a);
  const auto vs = f.c == f.a ? us : box_vectors(g, f.c);
  for (const auto& u : us)
    for (const auto& v : vs)
      if (inner(g, u, v) == f.b) return true;
  return false;
}

QuadraticForm candidate(std::array<i64, 3> a, std::array<i64, 4> b) {
  return QuadraticForm(IntMatrix{{1, 0, 0, 0, 0},
                                 {0, 2, 0, a[0], b[0]},
                                 {0, 0, 2, a[1], b[1]},
                                 {0, a[0], a[1], a[2], b[2]},
                                 {0, b[0], b[1], b[2], b[3]}});
}

const QuadraticForm& row_lattice(const std::string& id) {
  const auto& d = catalog();
  for (const auto* rows : {&d.basic, &d.general, &d.genus})
    for (const auto& r : *rows)
      if (r.id == id) return r.l;
  throw PreconditionViolated("unknown row " + id);
}

}  // namespace

TEST_CASE("x^2+2y^2+3z^2 matches exhaustive search up to 10^4") {
  const i64 n_max = 10000;
  std::vector<bool> hit(n_max + 1, false);
  for (i64 x = 0; x * x <= n_max; ++x)
    for (i64 y = 0; x * x + 2 * y * y <= n_max; ++y)
      for (i64 z = 0; x * x + 2 * y * y + 3 * z * z <= n_max; ++z) hit[x * x + 2 * y * y + 3 * z * z] = true;
  for (i64 n = 1; n <= n_max; ++n) REQUIRE(diag123_represents(n) == hit[n]);
  CHECK(diag123_represents(1));
  CHECK_FALSE(diag123_represents(10));
  CHECK_FALSE(diag123_represents(40));
  CHECK_THROWS_AS(diag123_represents(0), PreconditionViolated);
}

TEST_CASE("2x^2+2y^2+5z^2 represents every square except 1") {
  const i64 n_max = 10000;
  std::vector<bool> hit(n_max + 1, false);
  for (i64 x = 0; 2 * x * x <= n_max; ++x)
    for (i64 y = 0; 2 * x * x + 2 * y * y <= n_max; ++y)
      for (i64 z = 0; 2 * x * x + 2 * y * y + 5 * z * z <= n_max; ++z) hit[2 * x * x + 2 * y * y + 5 * z * z] = true;
  CHECK_FALSE(diag225_represents(1));
  for (i64 k = 2; k <= 100; ++k) {
    CHECK(diag225_represents(k * k));
    CHECK(hit[k * k]);
  }
  for (i64 n = 1; n <= 500; ++n) CHECK(diag225_represents(n) == hit[n]);
}

TEST_CASE("k(a, p) is the unique k in {1,2,4} with p^2 + a k^2 = 0 mod 9") {
  for (i64 a : {5, 17, 29}) {
    for (i64 p = 5; p <= 10000; ++p) {
      if (!is_prime(p)) continue;
      std::vector<i64> ks;
      for (i64 k : {1, 2, 4})
        if ((p * p + a * k * k) % 9 == 0) ks.push_back(k);
      REQUIRE(ks.size() == 1);
      REQUIRE(k_value(a, p) == ks[0]);
    }
  }
  CHECK(k_value(5, 241) == 1);
  CHECK_FALSE(k_value(3, 7).has_value());
}

TEST_CASE("residue sets") {
  const ExceptionalRow* row = catalog().exceptional_row(3, 5);
  REQUIRE(row != nullptr);
  CHECK(row->s == 9);
  CHECK(row->residues.count({4, 5}) == 1);
  CHECK(sigma_s_check(10, 4, 14, 9, row->residues));
  CHECK(sigma_s_check(10, 13, 23, 9, row->residues));
  CHECK_FALSE(sigma_s_check(10, 4, 15, 9, row->residues));
  CHECK_FALSE(sigma_s_check(1, 4, 5, 9, row->residues));
  CHECK_THROWS_AS(sigma_s_check(1, 0, 1, 0, row->residues), PreconditionViolated);
}

TEST_CASE("obstructions of the ternary sections") {
  const Obstruction o1 = find_obstruction(QuadraticForm::diagonal({1, 2, 2}), 50);
  CHECK(o1.ell == BinaryForm{2, 1, 5});
  CHECK(o1.mu2 == 5);
  const Obstruction o2 = find_obstruction(QuadraticForm(IntMatrix{{1, 0, 0}, {0, 2, 1}, {0, 1, 2}}), 50);
  // <2,2> is missed as well and has a smaller second minimum than <1,4>
  CHECK(o2.ell == BinaryForm{2, 0, 2});
  CHECK(o2.mu2 == 2);
  CHECK_FALSE(box_represents(IntMatrix{{1, 0, 0}, {0, 2, 1}, {0, 1, 2}}, BinaryForm{2, 0, 2}));
  CHECK(box_represents(IntMatrix{{1, 0, 0}, {0, 2, 1}, {0, 1, 2}}, BinaryForm{1, 0, 1}) == false);
  CHECK_FALSE(box_represents(IntMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}, BinaryForm{2, 1, 5}));
  CHECK_FALSE(box_represents(IntMatrix{{1, 0, 0}, {0, 2, 1}, {0, 1, 2}}, BinaryForm{1, 0, 4}));
  // I_4 contains I_2, so every sublattice of I_2 is represented
  CHECK_THROWS_AS(find_obstruction(QuadraticForm::diagonal({1, 1, 1, 1}), 50), NoObstructionFound);
}

TEST_CASE("the two displayed non-representations") {
  const QuadraticForm l17 = candidate({0, 1, 3}, {1, 0, 1, 6});
  const QuadraticForm l29 = candidate({1, 0, 4}, {0, 1, 1, 9});
  CHECK_FALSE(represent_binary(l17, BinaryForm{17, 0, 17}).has_value());
  CHECK_FALSE(represent_binary(l29, BinaryForm{29, 0, 29}).has_value());
  CHECK_FALSE(box_represents(l17.gram(), BinaryForm{17, 0, 17}));
  CHECK_FALSE(box_represents(l29.gram(), BinaryForm{29, 0, 29}));
}

TEST_CASE("isolation by brute force") {
  const auto proven = catalog().proven();
  const QuadraticForm& first = proven.at(14).second;
  const VerificationReport r = verify_isolation_bruteforce(first, 100, "asterisk-1");
  CHECK(r.failures() == 0);
  CHECK(r.steps.front().p == 1);
  for (const auto& s : r.steps) {
    if (s.p < 2 || !s.witness) continue;
    CHECK_NOTHROW(RepresentationWitness(first.gram(), s.ell.gram(), *s.witness));
  }
  const VerificationReport bad = verify_isolation_bruteforce(QuadraticForm::diagonal({1, 1, 1, 1, 1}), 7);
  CHECK(bad.steps.front().outcome == Outcome::kFail);
  CHECK_THROWS_AS(verify_isolation_bruteforce(QuadraticForm::diagonal({1, 1, 1}), 7), ShapeMismatch);
}

TEST_CASE("class-number-one subtraction") {
  const auto& rows = catalog().basic;
  const SubtractionRow& row6 = rows.at(5);
  CHECK(row6.t == 15);
  CHECK(row6.p0 == 23);
  std::size_t ok = 0, total = 0;
  for (const auto& s : index_p_sublattices(23)) {
    ++total;
    const ProofStep step = run_prop_key(row6, 0, 1, s.form);
    if (step.outcome != Outcome::kStructuredOK) continue;
    ++ok;
    REQUIRE(step.witness);
    CHECK_NOTHROW(RepresentationWitness(row6.l.gram(), s.form.gram(), *step.witness));
  }
  CHECK(ok == total);
  const SubtractionRow& row3 = rows.at(2);
  CHECK(row3.t == 2);
  for (const auto& s : index_p_sublattices(5)) {
    const ProofStep step = run_prop_key(row3, 0, 1, s.form);
    CHECK(step.outcome == Outcome::kStructuredOK);
  }
}

TEST_CASE("index-8 sublattices of genus mates") {
  const auto& genus = catalog().genus;
  const QuadraticForm m1 = QuadraticForm(IntMatrix{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}});
  const auto r = verify_lemma_2core(m1, QuadraticForm::diagonal({1, 1, 1, 6}));
  CHECK(r.ok);
  CHECK(r.witnesses.size() == 15);
  CHECK(verify_lemma_2core(m1, m1).ok);
  const QuadraticForm m4 = QuadraticForm(IntMatrix{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 5}});
  CHECK(verify_lemma_2core(m4, QuadraticForm(IntMatrix{{2, 1, 1, 0}, {1, 2, 0, 0}, {1, 0, 3, 1}, {0, 0, 1, 3}})).ok);
  for (const auto& row : genus)
    for (const auto& mate : row.mates) CHECK(verify_lemma_2core(row.m, mate).ok);
  // the epsilon-sublattice has index 8
  for (int bits = 1; bits < 16; ++bits) {
    const std::array<i64, 4> eps{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1};
    const i128 det = determinant_exact(n_basis(eps));
    CHECK((det == 8 || det == -8));
  }
}

TEST_CASE("exceptional branches") {
  for (i64 p : {241, 251, 257}) {
    const ProofStep s = exceptional_case_driver(4, BinaryForm{1, 0, p * p}, p);
    CHECK(s.outcome == Outcome::kStructuredOK);
    REQUIRE(s.witness);
    CHECK_NOTHROW(RepresentationWitness(catalog().general.at(3).l.gram(), BinaryForm{1, 0, p * p}.gram(), *s.witness));
  }
  for (const auto& s : index_p_sublattices(241)) {
    if (s.form.a != 5) continue;
    const ProofStep step = exceptional_case_driver(3, s.form, 241);
    CHECK(step.outcome == Outcome::kStructuredOK);
  }
}

TEST_CASE("structured witnesses are genuine representations") {
  const VerificationReport r = theorem_driver(TheoremId::kGeneral, 260, 1);
  CHECK(r.failures() == 0);
  std::size_t structured = 0;
  for (const auto& s : r.steps) {
    REQUIRE(s.witness);
    if (s.outcome == Outcome::kStructuredOK) ++structured;
    CHECK_NOTHROW(RepresentationWitness(row_lattice(s.subject).gram(), s.ell.gram(), *s.witness));
  }
  CHECK(structured > 0);
}

TEST_CASE("reports do not depend on the thread count") {
  const std::string one = to_json(theorem_driver(TheoremId::kGenus, 180, 1), 0);
  const std::string two = to_json(theorem_driver(TheoremId::kGenus, 180, 3), 0);
  CHECK(one == two);
  CHECK(parse_theorem_id("5.3") == TheoremId::kGenus);
  CHECK_FALSE(parse_theorem_id("6.1").has_value());
}

TEST_CASE("candidate search") {
  const CandidateSearchResult r = enumerate_candidates();
  CHECK(r.records.size() == 231);
  std::set<std::array<i64, 4>> row112;
  for (const auto& c : r.records) {
    if (c.a_triple == std::array<i64, 3>{1, 1, 2}) row112.insert(c.b_tuple);
    CHECK_FALSE(represents_i2(c.form));
  }
  CHECK(row112 == std::set<std::array<i64, 4>>{{1, 0, 0, 3}, {0, 0, 0, 3}, {1, -1, 0, 5}});
  for (std::size_t i = 0; i < r.records.size(); ++i)
    for (std::size_t j = i + 1; j < r.records.size(); ++j)
      if (determinant(r.records[i].form) == determinant(r.records[j].form))
        CHECK_FALSE(is_isometric(r.records[i].form, r.records[j].form).has_value());
}
