#include "iso2/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "iso2/enumerate.hpp"
#include "iso2/errors.hpp"
#include "iso2/padic.hpp"

namespace iso2 {

namespace {

struct Table1Entry {
  std::array<i64, 3> a;
  std::array<i64, 4> b;
  CandidateStatus status;
};

// clang-format off
const Table1Entry kTable1[] = {
    {{1, 1, 2}, {1, 0, 0, 3}, CandidateStatus::kDagger},
    {{1, 1, 2}, {0, 0, 0, 3}, CandidateStatus::kAsterisk},
    {{1, 1, 2}, {1, -1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 2}, {1, 1, 0, 3}, CandidateStatus::kDagger},
    {{0, 1, 2}, {0, 0, 1, 3}, CandidateStatus::kAsterisk},
    {{0, 1, 2}, {1, 0, 0, 3}, CandidateStatus::kPlain},
    {{0, 1, 2}, {0, 0, 0, 3}, CandidateStatus::kDagger},
    {{0, 1, 2}, {1, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 2}, {0, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 2}, {1, 0, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 2}, {0, 0, 0, 5}, CandidateStatus::kDagger},
    {{0, 1, 2}, {1, 1, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 2}, {0, 1, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 2}, {1, 0, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 2}, {0, 0, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 2}, {1, 1, 0, 9}, CandidateStatus::kPlain},
    {{0, 1, 2}, {0, 1, 0, 9}, CandidateStatus::kPlain},
    {{0, 1, 2}, {0, 0, 0, 9}, CandidateStatus::kDagger},
    {{0, 0, 2}, {0, 1, 1, 3}, CandidateStatus::kDagger},
    {{0, 0, 2}, {0, 0, 1, 3}, CandidateStatus::kDagger},
    {{0, 0, 2}, {0, 1, 1, 5}, CandidateStatus::kPlain},
    {{0, 0, 2}, {1, 0, 0, 5}, CandidateStatus::kPlain},
    {{1, 1, 3}, {1, -1, 0, 4}, CandidateStatus::kPlain},
    {{1, 1, 3}, {1, 0, 0, 4}, CandidateStatus::kPlain},
    {{1, 1, 3}, {1, -1, 1, 5}, CandidateStatus::kPlain},
    {{1, 1, 3}, {1, -1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 3}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 3}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 3}, CandidateStatus::kDagger},
    {{0, 1, 3}, {1, 0, 0, 3}, CandidateStatus::kDagger},
    {{0, 1, 3}, {0, 0, 1, 3}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 4}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 4}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 0, 4}, CandidateStatus::kDagger},
    {{0, 1, 3}, {0, 0, 1, 4}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 0, 4}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 5}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 1, 5}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 6}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 6}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 0, 6}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 1, 6}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 0, 6}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 7}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 1, 7}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 8}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 8}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 1, 8}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 0, 8}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 9}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 9}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 0, 9}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 1, 9}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 10}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 0, 9}, CandidateStatus::kDagger},
    {{0, 1, 3}, {1, 0, 1, 10}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 10}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 0, 10}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 1, 10}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 11}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 0, 10}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 11}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 11}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 0, 11}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 1, 11}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 12}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 12}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 12}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 0, 12}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 0, 1, 12}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 1, 0, 13}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 1, 13}, CandidateStatus::kPlain},
    {{0, 1, 3}, {0, 1, 0, 13}, CandidateStatus::kPlain},
    {{0, 1, 3}, {1, 0, 0, 13}, CandidateStatus::kPlain},
    {{0, 0, 3}, {1, 0, 0, 4}, CandidateStatus::kDagger},
    {{0, 0, 3}, {1, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 0, 3}, {1, 0, 0, 5}, CandidateStatus::kDagger},
    {{1, 1, 4}, {1, -1, 2, 5}, CandidateStatus::kPlain},
    {{1, 1, 4}, {1, -1, 0, 5}, CandidateStatus::kPlain},
    {{1, 1, 4}, {1, 0, 0, 5}, CandidateStatus::kPlain},
    {{1, 1, 4}, {1, -1, 2, 7}, CandidateStatus::kPlain},
    {{1, 1, 4}, {0, 0, 0, 5}, CandidateStatus::kDagger},
    {{0, 1, 4}, {0, -1, 2, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 1, 2, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 1, 2, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 0, 1, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 0, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 0, 1, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 0, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 1, 2, 7}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 1, 2, 7}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 1, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 0, 1, 7}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 1, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 0, 0, 7}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 0, 1, 7}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 1, 2, 9}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 1, 2, 9}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 1, 0, 9}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 0, 1, 9}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 1, 0, 9}, CandidateStatus::kPlain},
    {{0, 1, 4}, {1, 0, 0, 9}, CandidateStatus::kPlain},
    {{0, 1, 4}, {0, 0, 0, 9}, CandidateStatus::kPlain},
    {{0, 0, 4}, {1, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 0, 4}, {1, 0, 0, 5}, CandidateStatus::kPlain},
    {{1, 1, 5}, {-1, -1, 2, 5}, CandidateStatus::kPlain},
    {{1, 1, 5}, {-1, -1, 2, 6}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 5}, CandidateStatus::kPlain},
    {{1, 1, 5}, {-1, -1, 2, 7}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 5}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 6}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 6}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 5}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 6}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 6}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 7}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 5}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 6}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 7}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 6}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 7}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 8}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 7}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 8}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 7}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 9}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 7}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 8}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 9}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 9}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 9}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 10}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 8}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 9}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 10}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 9}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 10}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 9}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 10}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 10}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 11}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 11}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 12}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 11}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 12}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 12}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 13}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 12}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 13}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 13}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 13}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 14}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 12}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 13}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 14}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 13}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 14}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 14}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 14}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 14}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 15}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 16}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 16}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 15}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 16}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 17}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 15}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 16}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 17}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 17}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 17}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 18}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 16}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 17}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 18}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 17}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 18}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 18}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 17}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 18}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 18}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 19}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 19}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 20}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 20}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 20}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 21}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 20}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 21}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 21}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 21}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 22}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 20}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 21}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 22}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 21}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 22}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 22}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 21}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 22}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 22}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 23}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 24}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 23}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 24}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 23}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 24}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 2, 25}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 23}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 1, 25}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 2, 25}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, -1, 0, 25}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 2, 25}, CandidateStatus::kPlain},
    {{1, 1, 5}, {1, 0, 0, 25}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 1, 25}, CandidateStatus::kPlain},
    {{1, 1, 5}, {0, 0, 0, 25}, CandidateStatus::kPlain},
    {{0, 1, 5}, {1, 1, 2, 5}, CandidateStatus::kPlain},
    {{0, 1, 5}, {1, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 5}, {0, 0, 2, 5}, CandidateStatus::kPlain},
    {{0, 1, 5}, {0, 1, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 5}, {1, 0, 0, 5}, CandidateStatus::kPlain},
    {{0, 1, 5}, {0, 0, 1, 5}, CandidateStatus::kPlain},
    {{0, 1, 5}, {0, 0, 0, 5}, CandidateStatus::kPlain},
};
// clang-format on

QuadraticForm diag(std::initializer_list<i64> d) { return QuadraticForm::diagonal(d); }

QuadraticForm block(IntMatrix g) { return QuadraticForm(std::move(g)); }

QuadraticForm sum(std::initializer_list<QuadraticForm> parts) {
  auto it = parts.begin();
  QuadraticForm out = *it;
  for (++it; it != parts.end(); ++it) out = orthogonal_sum(out, *it);
  return out;
}

QuadraticForm plane(i64 a, i64 b, i64 c) { return QuadraticForm(IntMatrix{{a, b}, {b, c}}); }

/// Witness of M + <t> inside L; throws if the search fails.
IntMatrix embed(const QuadraticForm& l, const QuadraticForm& m, i64 t, const std::string& id) {
  const QuadraticForm target = orthogonal_sum(m, diag({t}));
  const auto w = represent_form(l, target);
  if (!w) throw Error("catalog: M + <t> is not represented by L in " + id);
  return w->matrix();
}

std::vector<i64> primes_of_2d(const QuadraticForm& m) {
  std::vector<i64> out;
  for (i64 q : prime_factors(static_cast<i128>(2) * determinant(m))) out.push_back(q);
  std::sort(out.begin(), out.end());
  return out;
}

SubtractionRow make_row(std::string id, QuadraticForm l, QuadraticForm m, std::vector<QuadraticForm> mates, i64 t,
                        std::vector<AlphaBeta> options, std::vector<i64> primes, i64 p0) {
  if (primes_of_2d(m) != primes) throw Error("catalog: prime set of 2dM differs in " + id);
  IntMatrix e = embed(l, m, t, id);
  return SubtractionRow{std::move(id),      std::move(l),      std::move(m), std::move(mates), t,
                        std::move(options), {},                std::move(primes), p0,    std::move(e)};
}

std::set<std::pair<i64, i64>> all_residues_except(i64 s, std::initializer_list<std::pair<i64, i64>> drop) {
  std::set<std::pair<i64, i64>> out;
  for (i64 b = 0; b < s; ++b)
    for (i64 c = 0; c < s; ++c) out.insert({b, c});
  for (const auto& d : drop) out.erase(d);
  return out;
}

Catalog build() {
  Catalog d;
  for (const auto& e : kTable1) {
    d.table1.push_back(CandidateRecord{e.a, e.b,
                                       assemble_candidate(e.a[0], e.a[1], e.a[2], e.b[0], e.b[1], e.b[2], e.b[3]),
                                       e.status});
  }

  const QuadraticForm a2 = plane(2, 1, 2);
  const QuadraticForm t211 = block(IntMatrix{{2, 1, 1}, {1, 2, 0}, {1, 0, 3}});
  const QuadraticForm t201 = block(IntMatrix{{2, 0, 1}, {0, 2, 1}, {1, 1, 3}});
  const QuadraticForm t311 = block(IntMatrix{{2, 1, 1}, {1, 3, 0}, {1, 0, 3}});

  d.basic.push_back(make_row("T3.4-1", sum({diag({1}), block(IntMatrix{{2, 0, 0, 1}, {0, 2, 1, 1}, {0, 1, 2, 0}, {1, 1, 0, 3}})}),
                             sum({diag({1}), t211}), {}, 77, {{0, 1}}, {2, 7}, 103));
  // the listed (0,1) misses classes with ell(77;0,1) = <1,4> over Z_2
  d.basic.back().supplementary = {{0, 2}, {1, 0}};
  d.basic.push_back(make_row("T3.4-2", sum({diag({1, 2, 3}), a2}), sum({diag({1, 3}), a2}), {}, 2, {{0, 2}}, {2, 3}, 11));
  d.basic.push_back(make_row("T3.4-3", sum({diag({1, 2}), t201}), sum({diag({1}), t201}), {}, 2, {{0, 1}}, {2}, 3));
  d.basic.push_back(make_row("T3.4-4", sum({diag({1}), block(IntMatrix{{2, 0, 1, 1}, {0, 2, 1, 0}, {1, 1, 2, 0}, {1, 0, 0, 3}})}),
                             sum({diag({1}), t211}), {}, 63, {{0, 1}}, {2, 7}, 89));
  d.basic.push_back(make_row("T3.4-5", sum({diag({1, 2}), t311}), sum({diag({1}), t311}), {}, 2, {{0, 3}}, {2, 3}, 29));
  d.basic.push_back(make_row("T3.4-6", sum({diag({1}), plane(2, 1, 3), plane(2, 1, 3)}), sum({diag({1, 3}), plane(2, 1, 3)}),
                             {}, 15, {{0, 1}}, {2, 3, 5}, 23));

  const QuadraticForm t2014 = block(IntMatrix{{2, 0, 1}, {0, 2, 1}, {1, 1, 4}});
  d.m_general = {diag({1, 2, 2, 3}), diag({1, 2, 2, 3}), sum({plane(2, 1, 4), plane(2, 1, 4)}), sum({diag({1}), t2014})};
  d.n_general = {sum({diag({1, 3}), plane(2, 1, 4)}), sum({diag({1, 2}), plane(2, 1, 3)}),
                 sum({diag({1, 7}), plane(2, 1, 4)}), d.m_general[3]};
  const std::vector<QuadraticForm> l_general = {sum({diag({1, 2, 3}), plane(2, 1, 4)}), sum({diag({1, 2, 3}), plane(2, 1, 5)}),
                                                sum({diag({1}), plane(2, 1, 3), plane(2, 1, 4)}),
                                                sum({diag({1, 5}), t2014})};
  const i64 t_general[] = {14, 18, 35, 5};
  const std::vector<i64> q_general[] = {{2, 3}, {2, 3}, {2, 7}, {2, 3}};
  for (int i = 0; i < 4; ++i) {
    std::vector<AlphaBeta> options{{0, 1}, {1, 0}};
    d.general.push_back(make_row("T4.1-" + std::to_string(i + 1), l_general[i], d.m_general[i], {}, t_general[i],
                                 options, q_general[i], 242));
  }
  d.exceptional_pairs = {{1, 2}, {1, 10}, {2, 2}, {2, 10}, {3, 1}, {3, 5}, {3, 13}, {3, 17}, {3, 25}, {3, 29}, {4, 1}, {4, 5}};
  d.pair_2_10 = make_row("T4.1-2-a10", l_general[1], sum({diag({1, 3}), plane(2, 1, 5)}), {}, 2, {{0, 2}}, {2, 3}, 242);

  auto exceptional = [&](int i, int n_index, std::vector<i64> as, i64 t, i64 alpha, i64 beta, bool from_k, i64 s,
                         std::set<std::pair<i64, i64>> residues, std::string set_id) {
    const QuadraticForm& n = d.n_general[n_index - 1];
    IntMatrix e = embed(l_general[i - 1], n, t, set_id);
    d.exceptional.push_back(ExceptionalRow{i, std::move(as), t, alpha, beta, from_k, s, std::move(residues), std::move(set_id), n,
                                           std::move(e)});
  };
  exceptional(1, 1, {10}, 2, 1, 0, false, 3, {{0, 0}, {1, 2}, {2, 2}}, "S3(1,10)");
  exceptional(3, 2, {1, 13, 25}, 14, 0, 1, false, 6, all_residues_except(6, {{0, 1}, {1, 2}, {2, 5}, {3, 4}, {4, 5}, {5, 2}}),
              "S6(3,1)");
  exceptional(3, 3, {5}, 35, 0, 0, true, 9, {{0, 0}, {1, 2}, {2, 8}, {3, 0}, {4, 5}, {5, 5}, {6, 0}, {7, 8}, {8, 2}}, "S9(3,5)");
  exceptional(3, 3, {17}, 35, 0, 0, true, 9, {{0, 0}, {1, 8}, {2, 5}, {3, 0}, {4, 2}, {5, 2}, {6, 0}, {7, 5}, {8, 8}}, "S9(3,17)");
  exceptional(3, 3, {29}, 35, 0, 0, true, 9, {{0, 0}, {1, 5}, {2, 2}, {3, 0}, {4, 8}, {5, 8}, {6, 0}, {7, 2}, {8, 5}}, "S9(3,29)");
  exceptional(4, 4, {5}, 5, 0, 2, false, 3, {{0, 0}, {1, 2}, {2, 2}}, "S3(4,5)");

  const std::vector<AlphaBeta> betas135{{0, 1}, {0, 3}, {0, 5}};
  const QuadraticForm m12a2 = sum({diag({1, 2}), a2});
  d.genus.push_back(make_row("T5.3-1", sum({diag({1, 2, 5}), a2}), m12a2, {diag({1, 1, 1, 6})}, 5, betas135, {2, 3}, 167));
  d.genus.push_back(make_row("T5.3-2", sum({diag({1, 2, 9}), a2}), m12a2, {diag({1, 1, 1, 6})}, 9, {{0, 1}}, {2, 3}, 211));
  d.genus.push_back(make_row("T5.3-3", sum({diag({1, 2, 9}), plane(2, 1, 3)}), sum({diag({1, 2}), plane(2, 1, 3)}),
                             {diag({1, 1, 1, 10})}, 9, betas135, {2, 5}, 307));
  d.genus.push_back(make_row("T5.3-4", sum({diag({1, 2, 5}), plane(2, 1, 5)}), sum({diag({1, 2}), plane(2, 1, 5)}),
                             {diag({1, 1, 1, 18}), block(IntMatrix{{2, 1, 1, 0}, {1, 2, 0, 0}, {1, 0, 3, 1}, {0, 0, 1, 3}})},
                             5, {{0, 1}}, {2, 3}, 29));
  return d;
}

}  // namespace

std::string to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::kPlain: return "plain";
    case CandidateStatus::kDagger: return "dagger";
    case CandidateStatus::kAsterisk: return "asterisk";
  }
  return "plain";
}

std::vector<std::pair<std::string, QuadraticForm>> Catalog::proven() const {
  std::vector<std::pair<std::string, QuadraticForm>> out;
  int dagger = 0, asterisk = 0;
  for (const auto& r : table1) {
    if (r.status == CandidateStatus::kDagger) out.emplace_back("dagger-" + std::to_string(++dagger), r.form);
    if (r.status == CandidateStatus::kAsterisk) out.emplace_back("asterisk-" + std::to_string(++asterisk), r.form);
  }
  return out;
}

const ExceptionalRow* Catalog::exceptional_row(int i, i64 a) const {
  for (const auto& r : exceptional)
    if (r.i == i && std::find(r.a_values.begin(), r.a_values.end(), a) != r.a_values.end()) return &r;
  return nullptr;
}

std::vector<std::string> Catalog::builtin_ids() const {
  std::vector<std::string> ids;
  for (const auto& [id, f] : proven()) ids.push_back(id);
  for (std::size_t i = 0; i < table1.size(); ++i) ids.push_back("candidate-" + std::to_string(i + 1));
  for (const auto* rows : {&basic, &general, &genus})
    for (const auto& r : *rows) ids.push_back(r.id);
  return ids;
}

std::optional<QuadraticForm> Catalog::builtin(const std::string& id) const {
  for (const auto& [pid, f] : proven())
    if (pid == id) return f;
  const std::string prefix = "candidate-";
  if (id.rfind(prefix, 0) == 0) {
    try {
      const std::size_t k = std::stoul(id.substr(prefix.size()));
      if (k >= 1 && k <= table1.size()) return table1[k - 1].form;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  for (const auto* rows : {&basic, &general, &genus})
    for (const auto& r : *rows)
      if (r.id == id) return r.l;
  return std::nullopt;
}

const Catalog& catalog() {
  static const Catalog data = build();
  return data;
}

std::optional<i64> k_value(i64 a, i64 p) {
  std::optional<i64> found;
  for (i64 k : {1, 2, 4}) {
    if (mod_floor(static_cast<i64>((static_cast<i128>(p) * p + static_cast<i128>(a) * k * k) % 9), 9) == 0) {
      if (found) return std::nullopt;
      found = k;
    }
  }
  return found;
}

}  // namespace iso2
