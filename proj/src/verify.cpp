#include "iso2/verify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "iso2/enumerate.hpp"
#include "iso2/errors.hpp"
#include "iso2/i2lat.hpp"
#include "iso2/local.hpp"
#include "iso2/padic.hpp"
#include "iso2/parallel.hpp"

namespace iso2 {

namespace {

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> out;
  for (i64 p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

std::string label(i64 t, i64 alpha, i64 beta) {
  std::ostringstream os;
  os << "ell(" << t << ';' << alpha << ',' << beta << ')';
  return os.str();
}

ProofStep fail(ProofStep step, std::string reason) {
  step.outcome = Outcome::kFail;
  step.reason = std::move(reason);
  step.witness.reset();
  return step;
}

/// Validated witness of ell -> L.
IntMatrix checked(const QuadraticForm& l, const BinaryForm& ell, const IntMatrix& w) {
  return RepresentationWitness(l.gram(), ell.gram(), w).matrix();
}

ProofStep brute_force_step(const std::string& subject, const QuadraticForm& l, const BinaryForm& ell, i64 p) {
  ProofStep step{subject, p, ell, "brute-force", "", Outcome::kBruteForceOK, "", std::nullopt};
  if (auto w = represent_binary(l, ell)) {
    step.witness = w->matrix();
    return step;
  }
  return fail(std::move(step), "not represented");
}

bool locally_everywhere(const BinaryForm& f, const QuadraticForm& m, const std::vector<i64>& primes, std::string* why) {
  for (i64 q : primes) {
    if (!is_locally_represented(f, m, q)) {
      if (why) *why = "not locally represented at " + std::to_string(q);
      return false;
    }
  }
  return true;
}

const Lemma2CoreResult& lemma_cached(const QuadraticForm& m, const QuadraticForm& mt) {
  static std::mutex mu;
  static std::vector<std::pair<std::pair<IntMatrix, IntMatrix>, Lemma2CoreResult>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& [key, value] : cache)
    if (key.first == m.gram() && key.second == mt.gram()) return value;
  cache.emplace_back(std::make_pair(m.gram(), mt.gram()), verify_lemma_2core(m, mt));
  return cache.back().second;
}

}  // namespace

bool diag123_represents(i64 n) {
  if (n < 1) throw PreconditionViolated("n must be positive");
  const int e = ord_p(n, 2);
  const i64 odd = n >> e;
  return !(e % 2 == 1 && mod_floor(odd, 8) == 5);
}

bool diag225_represents(i64 n) {
  if (n < 1) throw PreconditionViolated("n must be positive");
  return !vectors_of_norm(QuadraticForm::diagonal({2, 2, 5}), n).empty();
}

VerificationReport verify_isolation_bruteforce(const QuadraticForm& l, i64 p_max, const std::string& subject,
                                               int threads) {
  if (l.rank() != 5) throw ShapeMismatch("isolation check expects a quinary lattice");
  VerificationReport report{subject, {}};
  ProofStep i2{subject, 1, BinaryForm{1, 0, 1}, "I2 not represented", "", Outcome::kBruteForceOK, "", std::nullopt};
  if (auto w = represent_binary(l, BinaryForm{1, 0, 1})) {
    i2.witness = w->matrix();
    i2 = fail(std::move(i2), "represents I2");
    i2.witness = w->matrix();
  }
  report.steps.push_back(std::move(i2));
  const auto per_prime = parallel_map(
      primes_up_to(p_max),
      [&](i64 p) {
        std::vector<ProofStep> steps;
        for (const auto& s : index_p_sublattices(p)) steps.push_back(brute_force_step(subject, l, s.form, p));
        return steps;
      },
      threads);
  for (const auto& steps : per_prime) report.steps.insert(report.steps.end(), steps.begin(), steps.end());
  return report;
}

Obstruction find_obstruction(const QuadraticForm& l, i64 p_search_max) {
  std::optional<Obstruction> best;
  for (i64 p : primes_up_to(p_search_max)) {
    for (const auto& s : index_p_sublattices(p)) {
      if (best && std::tie(s.form.c, s.form.a, s.form.b) >= std::tie(best->ell.c, best->ell.a, best->ell.b)) continue;
      if (!represent_binary(l, s.form)) best = Obstruction{s.form, p, s.form.c};
    }
  }
  if (!best) throw NoObstructionFound("every index-p sublattice with p <= " + std::to_string(p_search_max) +
                                      " is represented");
  return *best;
}

ProofStep run_prop_key(const SubtractionRow& row, i64 alpha, i64 beta, const BinaryForm& ell) {
  ProofStep step{row.id, 0, ell, label(row.t, alpha, beta), "", Outcome::kStructuredOK, "", std::nullopt};
  const BinaryTriple sub = subtract(ell, row.t, alpha, beta, false).base;
  if (!sub.is_definite()) return fail(std::move(step), "subtracted form not positive definite");
  const BinaryForm f = sub.form();
  std::string why;
  if (!locally_everywhere(f, row.m, row.local_primes, &why)) return fail(std::move(step), why);
  const auto w = represent_binary(row.m, f);
  if (!w) {
    std::ostringstream os;
    os << f << " is locally represented by " << row.m << " but has no global witness";
    throw InconsistentClassNumber(os.str());
  }
  step.witness = checked(row.l, ell, row.embedding * append_subtraction_row(w->matrix(), alpha, beta));
  return step;
}

IntMatrix n_basis(const std::array<i64, 4>& epsilon) {
  int pivot = -1;
  for (int i = 0; i < 4; ++i)
    if (epsilon[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw PreconditionViolated("epsilon must be nonzero");
  IntMatrix b(4, 4);
  for (int j = 0; j < 4; ++j) {
    if (j == pivot) {
      for (int i = 0; i < 4; ++i) b(i, j) = epsilon[i];
    } else {
      b(j, j) = 2;
    }
  }
  return b;
}

Lemma2CoreResult verify_lemma_2core(const QuadraticForm& m, const QuadraticForm& mt) {
  if (m.rank() != 4 || mt.rank() != 4) throw ShapeMismatch("quaternary lattices expected");
  Lemma2CoreResult out;
  out.ok = true;
  for (int bits = 1; bits < 16; ++bits) {
    const std::array<i64, 4> eps{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1};
    const QuadraticForm n = transform(mt, n_basis(eps));
    const auto w = represent_form(m, n);
    if (!w) {
      out.ok = false;
      if (!out.failing_epsilon) out.failing_epsilon = eps;
      continue;
    }
    out.witnesses.emplace(eps, w->matrix());
  }
  return out;
}

ProofStep run_prop_key2(const SubtractionRow& row, i64 alpha, i64 beta, const BinaryForm& ell) {
  ProofStep step{row.id, 0, ell, "tilde-" + label(row.t, alpha, beta), "", Outcome::kStructuredOK, "", std::nullopt};
  const SubtractedPair pair = subtract(ell, row.t, alpha, beta, true);
  const BinaryTriple& halved = *pair.halved;
  if (!halved.is_definite()) return fail(std::move(step), "halved form not positive definite");
  const BinaryForm f = halved.form();
  std::string why;
  if (!locally_everywhere(f, row.m, row.local_primes, &why)) return fail(std::move(step), why);
  for (const auto& mate : row.mates)
    if (!lemma_cached(row.m, mate).ok) throw ChainBroken("index-8 sublattice of a genus mate not represented by M");

  std::vector<const QuadraticForm*> genus{&row.m};
  for (const auto& mate : row.mates) genus.push_back(&mate);
  for (std::size_t g = 0; g < genus.size(); ++g) {
    const auto wt = represent_binary(*genus[g], f);
    if (!wt) continue;
    // ell(t; alpha, beta) -> mate through the index-2 sublattice of the halved form
    const IntMatrix w = from_halved_witness(wt->matrix());
    IntMatrix into_m = w;
    if (g > 0) {
      std::array<i64, 4> eps{};
      for (int i = 0; i < 4; ++i) eps[i] = mod_floor(w(i, 0), 2);
      if (eps == std::array<i64, 4>{}) eps[0] = 1;
      const IntMatrix b = n_basis(eps);
      // coordinates of w in the basis b of N
      int pivot = 0;
      while (eps[pivot] == 0) ++pivot;
      IntMatrix coords(4, 2);
      for (int c = 0; c < 2; ++c) {
        const i64 lead = w(pivot, c);
        coords(pivot, c) = lead;
        for (int j = 0; j < 4; ++j) {
          if (j == pivot) continue;
          const i64 rest = w(j, c) - lead * eps[j];
          if (mod_floor(rest, 2) != 0) throw ChainBroken("image not contained in N");
          coords(j, c) = rest / 2;
        }
      }
      if (b * coords != w) throw ChainBroken("coordinates in N do not reproduce the witness");
      const Lemma2CoreResult& lemma = lemma_cached(row.m, *genus[g]);
      into_m = lemma.witnesses.at(eps) * coords;
      step.branch += " via mate-" + std::to_string(g);
    }
    const BinaryForm sub = pair.base.form();
    RepresentationWitness(row.m.gram(), sub.gram(), into_m);
    step.witness = checked(row.l, ell, row.embedding * append_subtraction_row(into_m, alpha, beta));
    return step;
  }
  std::ostringstream os;
  os << "no class in gen(M) represents " << f;
  throw ChainBroken(os.str());
}

bool sigma_s_check(i64 a, i64 b, i64 c, i64 s, const std::set<std::pair<i64, i64>>& residues) {
  if (s < 1) throw PreconditionViolated("s must be positive");
  if (a <= 0 || static_cast<i128>(a) * c - static_cast<i128>(b) * b <= 0) return false;
  return residues.count({mod_floor(b, s), mod_floor(c, s)}) > 0;
}

}  // namespace iso2
