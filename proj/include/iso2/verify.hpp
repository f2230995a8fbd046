#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iso2/catalog.hpp"
#include "iso2/report.hpp"

namespace iso2 {

/// x^2 + 2y^2 + 3z^2 = n has a solution, by the excluded-form criterion.
bool diag123_represents(i64 n);
/// 2x^2 + 2y^2 + 5z^2 = n has a solution, by enumeration.
bool diag225_represents(i64 n);

/// ell -> L for every index-p sublattice of I_2 with p <= p_max, plus the check that I_2 itself is missed.
VerificationReport verify_isolation_bruteforce(const QuadraticForm& l, i64 p_max, const std::string& subject = "L",
                                               int threads = 1);

struct Obstruction {
  BinaryForm ell;
  i64 p = 0;
  i64 mu2 = 0;
};

/// Unrepresented index-p sublattice of I_2 (p <= p_search_max) with the least second minimum.
/// Throws NoObstructionFound.
Obstruction find_obstruction(const QuadraticForm& l, i64 p_search_max);

struct CandidateSearchOptions {
  i64 coverage_max = 29;       ///< the defining q <= 29 filter
  i64 obstruction_max = 50;    ///< search bound for the rank-4 sections
  int threads = 1;
};

struct CandidateSearchResult {
  std::vector<CandidateRecord> records;  ///< sorted as in the table
  std::size_t sections = 0;              ///< rank-4 sections examined
  std::size_t generated = 0;             ///< rank-5 forms generated
  std::size_t survivors = 0;             ///< passing the coverage filter before dedupe
};

CandidateSearchResult enumerate_candidates(const CandidateSearchOptions& options = {});

/// Subtraction through a class-number-one M. Witness (on success) is ell -> row.l.
/// Throws InconsistentClassNumber if the local conditions hold but no global witness exists.
ProofStep run_prop_key(const SubtractionRow& row, i64 alpha, i64 beta, const BinaryForm& ell);

struct Lemma2CoreResult {
  bool ok = false;
  std::optional<std::array<i64, 4>> failing_epsilon;
  /// epsilon -> X with X^t M X = Gram of N_epsilon in the basis of n_basis(epsilon)
  std::map<std::array<i64, 4>, IntMatrix> witnesses;
};

/// Basis (columns) of span(sum eps_i x_i, 2x_1, ..., 2x_4) in the coordinates of the ambient lattice.
IntMatrix n_basis(const std::array<i64, 4>& epsilon);

/// Every index-8 sublattice N of mt with mt/N = (Z/2)^3 is represented by m.
Lemma2CoreResult verify_lemma_2core(const QuadraticForm& m, const QuadraticForm& mt);

/// Subtraction through gen(M) and the halved form. Witness (on success) is ell -> row.l.
/// Throws ChainBroken when the concrete chain cannot be completed.
ProofStep run_prop_key2(const SubtractionRow& row, i64 alpha, i64 beta, const BinaryForm& ell);

bool sigma_s_check(i64 a, i64 b, i64 c, i64 s, const std::set<std::pair<i64, i64>>& residues);

/// The written argument for an exceptional pair (i, a). Throws NoBranchApplies.
ProofStep exceptional_case_driver(int i, const BinaryForm& ell, i64 p);

enum class TheoremId { kBasic, kGeneral, kGenus };
std::optional<TheoremId> parse_theorem_id(const std::string& s);
std::string to_string(TheoremId id);

VerificationReport theorem_driver(TheoremId id, i64 p_max, int threads = 1);

/// Index-8 sublattice check for one genus row: one step per (mate, epsilon).
VerificationReport lemma51_report(std::size_t row);

}  // namespace iso2
