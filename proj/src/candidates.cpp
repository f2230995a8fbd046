#include <algorithm>
#include <map>
#include <tuple>

#include "iso2/enumerate.hpp"
#include "iso2/errors.hpp"
#include "iso2/i2lat.hpp"
#include "iso2/padic.hpp"
#include "iso2/parallel.hpp"
#include "iso2/verify.hpp"

namespace iso2 {

namespace {

/// <1> + [[2,s,a1],[s,2,a2],[a1,a2,a3]], with the obstruction bound on the fifth minimum.
struct Section {
  i64 s, a1, a2, a3;
  i64 b4_max = 0;
};

struct Generated {
  i64 s;
  std::array<i64, 3> a;
  std::array<i64, 4> b;
  QuadraticForm form;
};

std::optional<QuadraticForm> try_form(IntMatrix g) {
  try {
    return QuadraticForm(std::move(g));
  } catch (const NotPositiveDefinite&) {
    return std::nullopt;
  }
}

IntMatrix quinary(i64 s, i64 a1, i64 a2, i64 a3, const std::array<i64, 4>& b) {
  return IntMatrix{{1, 0, 0, 0, 0},
                   {0, 2, s, a1, b[0]},
                   {0, s, 2, a2, b[1]},
                   {0, a1, a2, a3, b[2]},
                   {0, b[0], b[1], b[2], b[3]}};
}

bool first_nonzero_positive(std::initializer_list<i64> v) {
  for (i64 x : v)
    if (x != 0) return x > 0;
  return true;
}

/// The generated form written with x2, x3 orthogonal and (a1, a2) in {(1,1), (0,1), (0,0)}.
std::optional<CandidateRecord> table_shape(const Generated& g) {
  if (g.s != 0) return std::nullopt;
  auto a = g.a;
  auto b = g.b;
  if (a[0] == 1 && a[1] == 0) {
    std::swap(a[0], a[1]);
    std::swap(b[0], b[1]);
  }
  return CandidateRecord{a, b, g.form, CandidateStatus::kPlain};
}

auto shape_key(const CandidateRecord& r) {
  return std::make_tuple(r.b_tuple[3], r.a_triple[2], -r.a_triple[0], -r.a_triple[1], r.b_tuple);
}

/// Invariants that isometric forms share.
using Key = std::pair<i64, std::vector<i64>>;
Key invariants(const QuadraticForm& f) { return {determinant(f), theta_prefix(f, 12)}; }

}  // namespace

CandidateSearchResult enumerate_candidates(const CandidateSearchOptions& options) {
  if (options.coverage_max < 2) throw PreconditionViolated("coverage bound");
  CandidateSearchResult result;

  std::vector<BinaryForm> coverage;
  for (i64 p = 2; p <= options.coverage_max; ++p)
    if (is_prime(p))
      for (const auto& s : index_p_sublattices(p)) coverage.push_back(s.form);

  std::vector<Section> sections;
  for (i64 s = 0; s <= 1; ++s) {
    // <2,2> + <1> admits mu_4 <= 5, <1> + A admits mu_4 <= 4
    const i64 a3_max = s == 0 ? 5 : 4;
    for (i64 a3 = 2; a3 <= a3_max; ++a3)
      for (i64 a1 = -1; a1 <= 1; ++a1)
        for (i64 a2 = -1; a2 <= 1; ++a2) {
          if (s == 0 ? (a1 < 0 || a2 < 0) : !first_nonzero_positive({a1, a2})) continue;
          const auto l4 = try_form(IntMatrix{{1, 0, 0, 0}, {0, 2, s, a1}, {0, s, 2, a2}, {0, a1, a2, a3}});
          if (!l4 || represents_i2(*l4)) continue;
          const Obstruction ob = find_obstruction(*l4, options.obstruction_max);
          sections.push_back(Section{s, a1, a2, a3, (5 * ob.mu2) / 4});
        }
  }
  result.sections = sections.size();

  struct Batch {
    std::size_t generated = 0;
    std::vector<Generated> survivors;
  };
  const auto batches = parallel_map(
      sections,
      [&](const Section& sec) {
        Batch out;
        const i64 h = sec.a3 / 2;
        for (i64 b1 = -1; b1 <= 1; ++b1)
          for (i64 b2 = -1; b2 <= 1; ++b2)
            for (i64 b3 = -h; b3 <= h; ++b3) {
              if (!first_nonzero_positive({b1, b2, b3})) continue;
              for (i64 b4 = sec.a3; b4 <= sec.b4_max; ++b4) {
                const std::array<i64, 4> b{b1, b2, b3, b4};
                const auto f = try_form(quinary(sec.s, sec.a1, sec.a2, sec.a3, b));
                if (!f) continue;
                ++out.generated;
                if (represents_i2(*f)) continue;
                bool covered = true;
                for (const auto& ell : coverage)
                  if (!represent_binary(*f, ell)) {
                    covered = false;
                    break;
                  }
                if (covered) out.survivors.push_back(Generated{sec.s, {sec.a1, sec.a2, sec.a3}, b, *f});
              }
            }
        return out;
      },
      options.threads);

  std::vector<Generated> survivors;
  for (const auto& b : batches) {
    result.generated += b.generated;
    survivors.insert(survivors.end(), b.survivors.begin(), b.survivors.end());
  }
  result.survivors = survivors.size();

  // isometry classes, first generated form as representative
  std::map<Key, std::vector<std::size_t>> buckets;
  std::vector<std::size_t> classes;
  std::vector<std::size_t> class_of(survivors.size());
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    auto& bucket = buckets[invariants(survivors[i].form)];
    std::optional<std::size_t> same;
    for (std::size_t j : bucket)
      if (is_isometric(survivors[j].form, survivors[i].form)) {
        same = j;
        break;
      }
    if (same) {
      class_of[i] = class_of[*same];
    } else {
      bucket.push_back(i);
      class_of[i] = classes.size();
      classes.push_back(i);
    }
  }

  // label each class with the tabulated parametrization it is isometric to
  const auto& table = catalog().table1;
  std::map<Key, std::vector<std::size_t>> table_buckets;
  for (std::size_t t = 0; t < table.size(); ++t) table_buckets[invariants(table[t].form)].push_back(t);
  std::vector<std::pair<std::size_t, CandidateRecord>> labelled;
  std::vector<CandidateRecord> unmatched;
  std::vector<bool> used(table.size(), false);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const Generated& g = survivors[classes[k]];
    std::optional<std::size_t> match;
    auto it = table_buckets.find(invariants(g.form));
    if (it != table_buckets.end())
      for (std::size_t t : it->second)
        if (!used[t] && is_isometric(table[t].form, g.form)) {
          match = t;
          break;
        }
    if (match) {
      used[*match] = true;
      labelled.emplace_back(*match, table[*match]);
    } else {
      std::optional<CandidateRecord> best;
      for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (class_of[i] != k) continue;
        auto rec = table_shape(survivors[i]);
        if (rec && (!best || shape_key(*rec) < shape_key(*best))) best = std::move(rec);
      }
      if (!best) best = CandidateRecord{g.a, g.b, g.form, CandidateStatus::kPlain};
      unmatched.push_back(std::move(*best));
    }
  }
  std::sort(labelled.begin(), labelled.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [t, rec] : labelled) result.records.push_back(std::move(rec));
  std::sort(unmatched.begin(), unmatched.end(), [](const CandidateRecord& x, const CandidateRecord& y) {
    return std::tie(x.a_triple, x.b_tuple) < std::tie(y.a_triple, y.b_tuple);
  });
  result.records.insert(result.records.end(), unmatched.begin(), unmatched.end());
  return result;
}

}  // namespace iso2
