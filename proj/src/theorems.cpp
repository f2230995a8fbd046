#include <algorithm>
#include <sstream>

#include "iso2/enumerate.hpp"
#include "iso2/errors.hpp"
#include "iso2/i2lat.hpp"
#include "iso2/padic.hpp"
#include "iso2/parallel.hpp"
#include "iso2/verify.hpp"

namespace iso2 {

namespace {

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> out;
  for (i64 p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

IntMatrix inverse_unimodular_2x2(const IntMatrix& t) {
  const i64 d = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
  if (d != 1 && d != -1) throw Error("transform is not unimodular");
  return IntMatrix{{t(1, 1) * d, -t(0, 1) * d}, {-t(1, 0) * d, t(0, 0) * d}};
}

std::string label(i64 t, i64 alpha, i64 beta) {
  std::ostringstream os;
  os << "ell(" << t << ';' << alpha << ',' << beta << ')';
  return os.str();
}

IntMatrix checked(const QuadraticForm& l, const BinaryForm& ell, const IntMatrix& w) {
  return RepresentationWitness(l.gram(), ell.gram(), w).matrix();
}

struct Variant {
  std::string name;
  BinaryForm form;
  IntMatrix to_ell;
};

std::vector<Variant> variants_of(const BinaryForm& ell) {
  std::vector<Variant> out{{"", ell, IntMatrix::identity(2)}};
  const char* names[] = {"minus", "plus", "flip"};
  int k = 0;
  for (const auto& v : shear_variants(ell)) out.push_back({names[k++], v.form, inverse_unimodular_2x2(v.witness)});
  return out;
}

/// A vector of norm n in diag(d), or nothing.
std::optional<Vec> first_vector(std::initializer_list<i64> d, i64 n) {
  std::optional<Vec> out;
  ShellWalker(QuadraticForm::diagonal(d).gram())
      .walk(n, ShellWalker::Mode::kEqual, ShellWalker::Order::kCentreOut, [&](std::span<const i64> v) {
        out = Vec(v.begin(), v.end());
        return true;
      });
  return out;
}

const QuadraticForm& general_l(int i) { return catalog().general.at(static_cast<std::size_t>(i - 1)).l; }

/// ell = [[2,1],[1,(p^2+1)/2]] into <1,2,3> + [[2,1],[1,i+3]].
ProofStep case_a2(int i, const BinaryForm& ell, i64 p) {
  if (ell.a != 2 || ell.b != 1) throw NoBranchApplies("expected [[2,1],[1,(p^2+1)/2]]");
  const i64 half = (p * p + 1) / 2;
  const i64 n1 = half - (i + 3);
  const i64 n2 = half - (9 * (i + 3) - 4);
  const QuadraticForm& l = general_l(i);
  for (int which = 1; which <= 2; ++which) {
    const i64 n = which == 1 ? n1 : n2;
    if (n < 1 || !diag123_represents(n)) continue;
    const auto v = first_vector({1, 2, 3}, n);
    if (!v) throw Error("<1,2,3> misses " + std::to_string(n) + " despite the criterion");
    IntMatrix w(5, 2);
    w(3, 0) = 1;
    for (int r = 0; r < 3; ++r) w(r, 1) = (*v)[r];
    w(3, 1) = which == 1 ? 0 : -1;
    w(4, 1) = which == 1 ? 1 : 3;
    ProofStep step{"", p, ell, which == 1 ? "exceptional n1" : "exceptional n2", "", Outcome::kStructuredOK, "", std::nullopt};
    step.witness = checked(l, ell, w);
    return step;
  }
  throw NoBranchApplies("neither n1 nor n2 is represented by <1,2,3>");
}

/// ell = <1,p^2> into <1,2,2,5> inside L(4).
ProofStep case_41(const BinaryForm& ell, i64 p) {
  if (ell.a != 1 || ell.b != 0) throw NoBranchApplies("expected <1,p^2>");
  const auto v = first_vector({2, 2, 5}, ell.c);
  if (!v) throw NoBranchApplies("<2,2,5> misses " + std::to_string(ell.c));
  IntMatrix w(5, 2);
  w(0, 0) = 1;
  w(2, 1) = (*v)[0];
  w(3, 1) = (*v)[1];
  w(1, 1) = (*v)[2];
  ProofStep step{"", p, ell, "exceptional <2,2,5>", "", Outcome::kStructuredOK, "", std::nullopt};
  step.witness = checked(general_l(4), ell, w);
  return step;
}

/// Residue-set criterion for N(i) + <t> inside L(i).
ProofStep case_residues(const ExceptionalRow& row, const BinaryForm& ell, i64 p) {
  std::vector<Variant> forms{{"", ell, IntMatrix::identity(2)}};
  if (row.i == 1) {
    // [[1,0],[1,1]] ell [[1,1],[0,1]]
    const IntMatrix up{{1, 1}, {0, 1}};
    const BinaryForm g{ell.a, ell.a + ell.b, ell.a + 2 * ell.b + ell.c};
    forms.push_back({"shifted", g, inverse_unimodular_2x2(up)});
  }
  i64 beta = row.beta;
  if (row.beta_from_k) {
    const auto k = k_value(ell.a, p);
    if (!k) throw NoBranchApplies("k(i,a,p) undefined");
    beta = *k;
  }
  for (const auto& v : forms) {
    const BinaryTriple sub = subtract(v.form, row.t, row.alpha, beta, false).base;
    if (!sigma_s_check(sub.a, sub.b, sub.c, row.s, row.residues)) continue;
    const BinaryForm f = sub.form();
    const auto w = represent_binary(row.n, f);
    ProofStep step{"", p, ell, row.set_id + (v.name.empty() ? "" : ":" + v.name) + ":" + label(row.t, row.alpha, beta),
                   "", Outcome::kStructuredOK, "", std::nullopt};
    if (!w) {
      step.outcome = Outcome::kFail;
      step.reason = "residue criterion holds but N has no witness";
      return step;
    }
    step.witness = checked(general_l(row.i), ell, row.embedding * append_subtraction_row(w->matrix(), row.alpha, beta) * v.to_ell);
    return step;
  }
  throw NoBranchApplies("(B, C) outside " + row.set_id);
}

std::string general_case(int i, const BinaryForm& ell) {
  const i64 a = ell.a, c = ell.c;
  const auto& pairs = catalog().exceptional_pairs;
  if (std::find(pairs.begin(), pairs.end(), std::make_pair(i, a)) != pairs.end())
    return "exceptional (" + std::to_string(i) + "," + std::to_string(a) + ")";
  const i64 t = catalog().general[static_cast<std::size_t>(i - 1)].t;
  if (i <= 2) {
    if (a % 2 == 1) return label(t, 0, 1);
    if (a >= 26) return label(t, 1, 0);
    return "uncovered";
  }
  const i64 bound_c = i == 3 ? 37 : 7;
  const i64 bound_ac = i == 3 ? 37 : 13;
  if (a % 2 == 0) return label(t, 0, 1);
  if (c % 2 == 0 && a >= bound_c) return label(t, 1, 0);
  if (c % 2 == 1 && a >= bound_ac) return "minus:" + label(t, 0, 1);
  return "uncovered";
}

std::string genus_case(const BinaryForm& ell) {
  const i64 a = ell.a, c = ell.c;
  if (a == 2) return "a=2 direct";
  if (mod_floor(a, 4) == 1 && mod_floor(c, 4) == 1) return "a=c=1 mod 4";
  if (mod_floor(a, 4) == 1 && mod_floor(c, 8) == 2) return "a=1 mod 4, c=2 mod 8";
  if (mod_floor(a, 8) == 2 && mod_floor(c, 4) == 1) return "a=2 mod 8, c=1 mod 4";
  return "other";
}

/// Every listed branch on every basis variant, the expected one first.
ProofStep try_all(const SubtractionRow& row, const BinaryForm& ell, i64 p, bool halved, const std::string& expected) {
  struct Attempt {
    const Variant* v;
    AlphaBeta ab;
    bool extra;
  };
  const std::vector<Variant> vars = variants_of(ell);
  std::vector<Attempt> attempts;
  for (const auto& v : vars)
    for (const auto& ab : row.options) attempts.push_back({&v, ab, false});
  for (const auto& v : vars)
    for (const auto& ab : row.supplementary) attempts.push_back({&v, ab, true});
  auto name_of = [&](const Attempt& at) {
    const std::string b = (halved ? "tilde-" : "") + label(row.t, at.ab.first, at.ab.second);
    const std::string n = at.v->name.empty() ? b : at.v->name + ":" + b;
    return at.extra ? "supplementary " + n : n;
  };
  std::stable_partition(attempts.begin(), attempts.end(), [&](const Attempt& at) {
    const std::string n = name_of(at);
    return n == expected || (halved && n.rfind(expected, 0) == 0);
  });
  std::string reasons;
  for (const auto& at : attempts) {
    const std::string name = name_of(at);
    ProofStep s;
    try {
      s = halved ? run_prop_key2(row, at.ab.first, at.ab.second, at.v->form)
                 : run_prop_key(row, at.ab.first, at.ab.second, at.v->form);
    } catch (const DivisibilityViolated&) {
      reasons += name + ": not halvable; ";
      continue;
    } catch (const ChainBroken& e) {
      reasons += name + ": " + e.what() + "; ";
      continue;
    } catch (const InconsistentClassNumber& e) {
      reasons += name + ": " + e.what() + "; ";
      continue;
    }
    if (s.outcome == Outcome::kStructuredOK) {
      ProofStep out{row.id, p, ell, name + s.branch.substr(s.branch.find(')') + 1), "", Outcome::kStructuredOK, "",
                    std::nullopt};
      out.witness = checked(row.l, ell, *s.witness * at.v->to_ell);
      return out;
    }
    reasons += name + ": " + s.reason + "; ";
  }
  return ProofStep{row.id, p, ell, "none", "", Outcome::kFail, reasons, std::nullopt};
}

ProofStep drive_basic(const SubtractionRow& row, const BinaryForm& ell, i64 p) {
  const std::string expected = label(row.t, row.options.front().first, row.options.front().second);
  ProofStep s = try_all(row, ell, p, false, expected);
  s.expected_case = expected;
  return s;
}

ProofStep drive_general(int i, const SubtractionRow& row, const BinaryForm& ell, i64 p) {
  const std::string expected = general_case(i, ell);
  std::string note;
  if (expected.rfind("exceptional", 0) == 0) {
    try {
      ProofStep s = exceptional_case_driver(i, ell, p);
      s.subject = row.id;
      s.expected_case = expected;
      if (s.outcome == Outcome::kStructuredOK) return s;
      note = s.reason;
    } catch (const NoBranchApplies& e) {
      note = e.what();
    }
  }
  ProofStep s = try_all(row, ell, p, false, expected);
  s.expected_case = expected;
  if (s.outcome == Outcome::kFail && !note.empty()) s.reason = "exceptional: " + note + "; " + s.reason;
  return s;
}

ProofStep drive_genus(const SubtractionRow& row, const BinaryForm& ell, i64 p) {
  const std::string expected = genus_case(ell);
  ProofStep s = try_all(row, ell, p, true, "");
  if (s.outcome == Outcome::kFail && ell.a == 2) {
    if (auto w = represent_binary(row.l, ell)) {
      s = ProofStep{row.id, p, ell, "direct a=2", "", Outcome::kStructuredOK, "", checked(row.l, ell, w->matrix())};
    }
  }
  s.expected_case = expected;
  return s;
}

}  // namespace

ProofStep exceptional_case_driver(int i, const BinaryForm& ell, i64 p) {
  const i64 a = ell.a;
  const auto& pairs = catalog().exceptional_pairs;
  if (std::find(pairs.begin(), pairs.end(), std::make_pair(i, a)) == pairs.end())
    throw NoBranchApplies("(" + std::to_string(i) + "," + std::to_string(a) + ") is not an exceptional pair");
  ProofStep s;
  if (a == 2 && (i == 1 || i == 2)) {
    s = case_a2(i, ell, p);
  } else if (i == 4 && a == 1) {
    s = case_41(ell, p);
  } else if (i == 2 && a == 10) {
    s = run_prop_key(*catalog().pair_2_10, 0, 2, ell);
    s.branch = "exceptional M=<1,3>+[[2,1],[1,5]]:" + s.branch;
    if (s.outcome == Outcome::kStructuredOK) s.witness = checked(general_l(2), ell, *s.witness);
  } else {
    const ExceptionalRow* row = catalog().exceptional_row(i, a);
    if (!row) throw NoBranchApplies("no residue data");
    s = case_residues(*row, ell, p);
  }
  s.p = p;
  s.ell = ell;
  s.subject = "T4.1-" + std::to_string(i);
  return s;
}

std::optional<TheoremId> parse_theorem_id(const std::string& s) {
  if (s == "3.4") return TheoremId::kBasic;
  if (s == "4.1") return TheoremId::kGeneral;
  if (s == "5.3") return TheoremId::kGenus;
  return std::nullopt;
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kBasic: return "3.4";
    case TheoremId::kGeneral: return "4.1";
    case TheoremId::kGenus: return "5.3";
  }
  return "";
}

VerificationReport theorem_driver(TheoremId id, i64 p_max, int threads) {
  const Catalog& d = catalog();
  const std::vector<SubtractionRow>& rows =
      id == TheoremId::kBasic ? d.basic : id == TheoremId::kGeneral ? d.general : d.genus;
  struct Item {
    std::size_t row;
    i64 p;
  };
  std::vector<Item> items;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (i64 p : primes_up_to(p_max)) items.push_back({r, p});
  const auto results = parallel_map(
      items,
      [&](const Item& it) {
        const SubtractionRow& row = rows[it.row];
        std::vector<ProofStep> steps;
        for (const auto& cls : index_p_sublattices(it.p)) {
          const BinaryForm& ell = cls.form;
          ProofStep s;
          if (it.p < row.p0) {
            s = ProofStep{row.id, it.p, ell, "brute-force", "", Outcome::kBruteForceOK, "", std::nullopt};
            if (auto w = represent_binary(row.l, ell)) {
              s.witness = w->matrix();
            } else {
              s.outcome = Outcome::kFail;
              s.reason = "not represented";
            }
          } else if (id == TheoremId::kBasic) {
            s = drive_basic(row, ell, it.p);
          } else if (id == TheoremId::kGeneral) {
            s = drive_general(static_cast<int>(it.row) + 1, row, ell, it.p);
          } else {
            s = drive_genus(row, ell, it.p);
          }
          if (s.outcome == Outcome::kFail && it.p >= row.p0)
            s.reason += represent_binary(row.l, ell) ? " [brute force finds a witness]" : " [brute force finds no witness]";
          steps.push_back(std::move(s));
        }
        return steps;
      },
      threads);
  VerificationReport report{"theorem " + to_string(id), {}};
  for (const auto& steps : results) report.steps.insert(report.steps.end(), steps.begin(), steps.end());
  return report;
}

VerificationReport lemma51_report(std::size_t row_index) {
  const Catalog& d = catalog();
  if (row_index >= d.genus.size()) throw OutOfRange("genus row");
  const SubtractionRow& row = d.genus[row_index];
  VerificationReport report{row.id + " index-8 sublattices", {}};
  for (std::size_t g = 0; g < row.mates.size(); ++g) {
    const auto res = verify_lemma_2core(row.m, row.mates[g]);
    for (int bits = 1; bits < 16; ++bits) {
      const std::array<i64, 4> eps{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1};
      std::ostringstream br;
      br << "mate-" << g + 1 << " eps=" << eps[0] << eps[1] << eps[2] << eps[3];
      ProofStep s{row.id, 0, BinaryForm{1, 0, 1}, br.str(), "", Outcome::kStructuredOK, "", std::nullopt};
      auto it = res.witnesses.find(eps);
      if (it == res.witnesses.end()) {
        s.outcome = Outcome::kFail;
        s.reason = "N not represented by M";
      } else {
        s.witness = it->second;
      }
      report.steps.push_back(std::move(s));
    }
  }
  return report;
}

}  // namespace iso2
