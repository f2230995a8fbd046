#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "iso2/enumerate.hpp"
#include "iso2/errors.hpp"
#include "iso2/i2lat.hpp"
#include "iso2/local.hpp"
#include "iso2/catalog.hpp"
#include "iso2/report.hpp"
#include "iso2/verify.hpp"
#include "json.hpp"

using namespace iso2;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsage = 2;

struct Config {
  i64 p_max_bruteforce = 300;
  i64 p_max_driver = 500;
  i64 obstruction_search_max = 50;
  int threads = 1;
  std::string out;
};

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json form_json(const QuadraticForm& f) { return json::parse(form_to_json(f)); }

BinaryForm parse_ell(const std::string& s) {
  std::stringstream in(s);
  std::vector<i64> v;
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw InvalidInput("--ell expects a,b,c");
    } catch (const std::logic_error&) {
      throw InvalidInput("--ell expects a,b,c");
    }
  }
  if (v.size() != 3) throw InvalidInput("--ell expects a,b,c");
  return BinaryForm::make(v[0], v[1], v[2]);
}

QuadraticForm load_form(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return form_from_json(buf.str());
}

QuadraticForm builtin_form(const std::string& id) {
  if (auto f = catalog().builtin(id)) return *f;
  throw InvalidInput("unknown builtin id " + id);
}

/// --form accepts a file path or a builtin id.
QuadraticForm resolve(const std::string& form, const std::string& builtin) {
  if (!builtin.empty()) return builtin_form(builtin);
  if (form.empty()) throw InvalidInput("give --form or --builtin");
  if (catalog().builtin(form)) return builtin_form(form);
  return load_form(form);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw InvalidInput("cannot write " + cfg.out);
  out << text << '\n';
}

void require_bound(i64 v, const char* name) {
  if (v < 29) throw InvalidInput(std::string(name) + " must be at least 29");
}

int report_exit(const Config& cfg, const VerificationReport& r) {
  emit(cfg, to_json(r));
  std::cerr << summary(r);
  return r.failures() == 0 ? kOk : kVerificationFailure;
}

json record_json(const CandidateRecord& r) {
  json j;
  j["a"] = r.a_triple;
  j["b"] = r.b_tuple;
  j["status"] = to_string(r.status);
  j["form"] = form_json(r.form);
  return j;
}

/// Differences between the search result and the stored table.
std::vector<std::string> table_discrepancies(const CandidateSearchResult& r) {
  std::vector<std::string> out;
  const auto& table = catalog().table1;
  if (r.records.size() != table.size())
    out.push_back("found " + std::to_string(r.records.size()) + " classes, table has " + std::to_string(table.size()));
  std::map<std::array<i64, 3>, int> found, expected;
  for (const auto& c : r.records) ++found[c.a_triple];
  for (const auto& c : table) ++expected[c.a_triple];
  for (const auto& [a, n] : expected)
    if (found[a] != n) {
      std::ostringstream os;
      os << "row (" << a[0] << ',' << a[1] << ',' << a[2] << "): " << found[a] << " found, " << n << " tabulated";
      out.push_back(os.str());
    }
  auto tuple = [](const CandidateRecord& c) {
    std::ostringstream os;
    os << '(' << c.a_triple[0] << ',' << c.a_triple[1] << ',' << c.a_triple[2] << ") (" << c.b_tuple[0] << ','
       << c.b_tuple[1] << ',' << c.b_tuple[2] << ',' << c.b_tuple[3] << ')';
    return os.str();
  };
  auto same = [](const CandidateRecord& x, const CandidateRecord& y) {
    return x.a_triple == y.a_triple && x.b_tuple == y.b_tuple;
  };
  for (const auto& t : table)
    if (std::none_of(r.records.begin(), r.records.end(), [&](const auto& c) { return same(c, t); }))
      out.push_back("tabulated " + tuple(t) + " is not a candidate");
  for (const auto& c : r.records)
    if (std::none_of(table.begin(), table.end(), [&](const auto& t) { return same(c, t); }))
      out.push_back("candidate " + tuple(c) + " is not tabulated");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quinary isolations of x^2 + y^2: candidate search and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--threads", cfg.threads, "worker threads (ISO2_THREADS overrides)")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write JSON here instead of stdout");

  std::string ell_text, lattice, builtin, form;
  i64 p = 0;
  std::size_t row = 0;
  std::string theorem_id, emit_path;

  auto* reduce = app.add_subcommand("reduce", "Gauss-reduce a binary form");
  reduce->add_option("--ell", ell_text, "a,b,c")->required();

  auto* represent = app.add_subcommand("represent", "find ell -> L");
  represent->add_option("--ell", ell_text, "a,b,c")->required();
  represent->add_option("--lattice", lattice, "form JSON file");
  represent->add_option("--builtin", builtin, "builtin lattice id");

  auto* sublattices = app.add_subcommand("sublattices", "index-p sublattice classes of I_2");
  sublattices->add_option("--p", p, "prime")->required();

  auto* local = app.add_subcommand("local-check", "ell -> L over Z_p");
  local->add_option("--ell", ell_text, "a,b,c")->required();
  local->add_option("--lattice", lattice, "form JSON file");
  local->add_option("--builtin", builtin, "builtin lattice id");
  local->add_option("--p", p, "prime")->required();

  auto* candidates = app.add_subcommand("candidates", "search for all candidates");
  candidates->add_option("--emit", emit_path, "also write the records to this file");
  candidates->add_option("--obstruction-max", cfg.obstruction_search_max, "prime bound for section obstructions");

  auto* verify = app.add_subcommand("verify", "brute-force isolation check");
  verify->add_option("--form", form, "form JSON file or builtin id");
  verify->add_option("--builtin", builtin, "builtin lattice id");
  verify->add_option("--pmax", cfg.p_max_bruteforce, "largest prime");

  auto* theorem = app.add_subcommand("theorem", "prime-by-prime theorem driver");
  theorem->add_option("--id", theorem_id, "3.4, 4.1 or 5.3")->required();
  theorem->add_option("--pmax", cfg.p_max_driver, "largest prime");

  auto* lemma51 = app.add_subcommand("lemma51", "index-8 sublattices of the genus mates");
  lemma51->add_option("--row", row, "genus row 1..4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (const char* env = std::getenv("ISO2_THREADS")) {
    try {
      cfg.threads = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "ISO2_THREADS must be a positive integer\n";
      return kUsage;
    }
    if (cfg.threads < 1) {
      std::cerr << "ISO2_THREADS must be a positive integer\n";
      return kUsage;
    }
  }

  try {
    if (*reduce) {
      const ReducedBinary r = gauss_reduce(parse_ell(ell_text));
      json j;
      j["form"] = matrix_json(r.form.gram());
      j["transform"] = matrix_json(r.transform);
      emit(cfg, j.dump(2));
      return kOk;
    }
    if (*represent) {
      const BinaryForm ell = parse_ell(ell_text);
      const QuadraticForm l = resolve(lattice, builtin);
      const auto w = represent_binary(l, ell);
      json j;
      j["ell"] = matrix_json(ell.gram());
      j["represented"] = w.has_value();
      j["witness"] = w ? matrix_json(w->matrix()) : json(nullptr);
      emit(cfg, j.dump(2));
      return kOk;
    }
    if (*sublattices) {
      json arr = json::array();
      for (const auto& s : index_p_sublattices(p)) {
        json j;
        j["p"] = s.p;
        j["form"] = matrix_json(s.form.gram());
        j["hnf"] = matrix_json(s.hnf);
        j["basis"] = matrix_json(s.basis);
        arr.push_back(j);
      }
      emit(cfg, arr.dump(2));
      std::cerr << arr.size() << " classes of index " << p << '\n';
      return kOk;
    }
    if (*local) {
      const BinaryForm ell = parse_ell(ell_text);
      const QuadraticForm l = resolve(lattice, builtin);
      const LocalResult r = decide_local(ell, l, p);
      json j;
      j["ell"] = matrix_json(ell.gram());
      j["p"] = p;
      j["represented"] = r.represented;
      j["path"] = to_string(r.path);
      emit(cfg, j.dump(2));
      return kOk;
    }
    if (*candidates) {
      require_bound(cfg.obstruction_search_max, "--obstruction-max");
      CandidateSearchOptions options;
      options.obstruction_max = cfg.obstruction_search_max;
      options.threads = cfg.threads;
      const CandidateSearchResult r = enumerate_candidates(options);
      json arr = json::array();
      for (const auto& c : r.records) arr.push_back(record_json(c));
      const std::string text = arr.dump(2);
      emit(cfg, text);
      if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        if (!out) throw InvalidInput("cannot write " + emit_path);
        out << text << '\n';
      }
      std::cerr << r.sections << " sections, " << r.generated << " forms, " << r.survivors << " survivors, "
                << r.records.size() << " classes\n";
      const auto diffs = table_discrepancies(r);
      for (const auto& d : diffs) std::cerr << "MISMATCH " << d << '\n';
      return diffs.empty() ? kOk : kVerificationFailure;
    }
    if (*verify) {
      require_bound(cfg.p_max_bruteforce, "--pmax");
      const QuadraticForm l = resolve(form, builtin);
      const std::string subject = !builtin.empty() ? builtin : form;
      return report_exit(cfg, verify_isolation_bruteforce(l, cfg.p_max_bruteforce, subject, cfg.threads));
    }
    if (*theorem) {
      require_bound(cfg.p_max_driver, "--pmax");
      const auto id = parse_theorem_id(theorem_id);
      if (!id) throw InvalidInput("--id must be 3.4, 4.1 or 5.3");
      return report_exit(cfg, theorem_driver(*id, cfg.p_max_driver, cfg.threads));
    }
    if (*lemma51) {
      if (row < 1 || row > catalog().genus.size()) throw InvalidInput("--row must be 1..4");
      return report_exit(cfg, lemma51_report(row - 1));
    }
  } catch (const InvalidInput& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const NotPositiveDefinite& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const ShapeMismatch& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolated& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsage;
}
