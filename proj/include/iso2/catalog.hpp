#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iso2/qf.hpp"

namespace iso2 {

enum class CandidateStatus { kPlain, kDagger, kAsterisk };
std::string to_string(CandidateStatus s);

struct CandidateRecord {
  std::array<i64, 3> a_triple{};
  std::array<i64, 4> b_tuple{};
  QuadraticForm form;
  CandidateStatus status = CandidateStatus::kPlain;
};

using AlphaBeta = std::pair<i64, i64>;

/// L together with a sublattice M + <t> and the data used to subtract.
struct SubtractionRow {
  std::string id;
  QuadraticForm l;
  QuadraticForm m;
  std::vector<QuadraticForm> mates;  ///< other classes in gen(M)
  i64 t = 0;
  std::vector<AlphaBeta> options;
  /// Tried after every listed option fails; reported with a "supplementary" prefix.
  std::vector<AlphaBeta> supplementary;
  std::vector<i64> local_primes;  ///< the primes dividing 2 dM
  i64 p0 = 0;                     ///< smallest prime handled by the structured path
  IntMatrix embedding;            ///< columns: M basis then the norm-t vector, inside L
};

/// One row of the exceptional table: ell(t; alpha, beta) for a fixed a is
/// represented by N whenever (B, C) mod s lies in the listed set.
struct ExceptionalRow {
  int i = 0;
  std::vector<i64> a_values;
  i64 t = 0;
  i64 alpha = 0;
  i64 beta = 0;
  bool beta_from_k = false;  ///< beta = k(i, a, p) instead of the stored value
  i64 s = 0;
  std::set<std::pair<i64, i64>> residues;
  std::string set_id;
  QuadraticForm n;
  IntMatrix embedding;  ///< N + <t> inside L(i)
};

struct Catalog {
  std::vector<CandidateRecord> table1;
  std::vector<SubtractionRow> basic;    ///< six rows, class number one M
  std::vector<SubtractionRow> general;  ///< L(1)..L(4)
  std::vector<SubtractionRow> genus;    ///< four rows with genus mates
  std::vector<QuadraticForm> m_general;  ///< M(1)..M(4)
  std::vector<QuadraticForm> n_general;  ///< N(1)..N(4)
  std::vector<ExceptionalRow> exceptional;
  std::vector<std::pair<int, i64>> exceptional_pairs;
  i64 general_bruteforce_max = 241;
  /// <1,3> + [[2,1],[1,5]] with t = 2, (0,2), for the pair (2,10).
  std::optional<SubtractionRow> pair_2_10;

  /// Proven forms in table order: ids dagger-1..dagger-14 and asterisk-1..asterisk-2.
  std::vector<std::pair<std::string, QuadraticForm>> proven() const;
  const ExceptionalRow* exceptional_row(int i, i64 a) const;
  std::optional<QuadraticForm> builtin(const std::string& id) const;
  std::vector<std::string> builtin_ids() const;
};

/// Built and validated once; every embedding is re-checked exactly.
const Catalog& catalog();

/// k in {1, 2, 4} with p^2 + a k^2 = 0 mod 9; nullopt if none or several.
std::optional<i64> k_value(i64 a, i64 p);

}  // namespace iso2
