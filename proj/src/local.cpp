#include "iso2/local.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "iso2/errors.hpp"
#include "iso2/padic.hpp"

namespace iso2 {

namespace {

using Mat128 = std::vector<std::vector<i128>>;

i128 mod_q(i128 v, i128 q) {
  v %= q;
  return v < 0 ? v + q : v;
}

Mat128 congruence_mod(const IntMatrix& g, const Mat128& t, i128 q) {
  const int n = g.rows();
  Mat128 gt(n, std::vector<i128>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      i128 s = 0;
      for (int k = 0; k < n; ++k) s = mod_q(s + mod_q(g(i, k), q) * t[k][j], q);
      gt[i][j] = s;
    }
  Mat128 w(n, std::vector<i128>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      i128 s = 0;
      for (int k = 0; k < n; ++k) s = mod_q(s + t[k][i] * gt[k][j], q);
      w[i][j] = s;
    }
  return w;
}

int delta_of(i64 p) { return p == 2 ? 1 : 0; }

// ---------------------------------------------------------------------------
// Odd primes: exact decisions from Jordan invariants.

using Symbol = std::map<int, std::pair<int, int>>;

std::pair<int, int> component(const Symbol& s, int scale) {
  auto it = s.find(scale);
  return it == s.end() ? std::make_pair(0, 1) : it->second;
}

/// p^c u -> K with chi = (u/p).
bool unary_odd(int c, int chi, Symbol k, i64 p) {
  const int chi_minus_one = p % 4 == 1 ? 1 : -1;
  for (;;) {
    const auto [r0, chi0] = component(k, 0);
    if (c == 0) {
      if (r0 >= 2) return true;
      return r0 == 1 && chi == chi0;
    }
    if (r0 >= 3) return true;
    if (r0 == 2 && chi_minus_one * chi0 == 1) return true;
    // representations with vanishing unimodular part mod p
    Symbol shifted;
    for (const auto& [scale, rc] : k) {
      const int ns = scale == 0 ? 1 : scale - 1;
      auto& slot = shifted[ns];
      if (slot.first == 0) slot = {0, 1};
      slot.first += rc.first;
      slot.second *= rc.second;
    }
    k = std::move(shifted);
    --c;
  }
}

i64 unit_norm_vector_value(const BinaryForm& ell, i64 p) {
  if (ell.a % p != 0) return ell.a;
  if (ell.c % p != 0) return ell.c;
  return ell.a + 2 * ell.b + ell.c;
}

bool unit_split(const BinaryForm& ell, const QuadraticForm& m, i64 p) {
  const i64 alpha = unit_norm_vector_value(ell, p);
  const Symbol s = odd_symbol(m, p).components;
  const auto [r0, chi0] = component(s, 0);
  const int chi_alpha = legendre(alpha, p);
  if (r0 == 0 || (r0 == 1 && chi_alpha != chi0)) return false;
  Symbol k = s;
  if (r0 == 1)
    k.erase(0);
  else
    k[0] = {r0 - 1, chi0 * chi_alpha};
  const i128 d = ell.det();
  return unary_odd(ord_p(d, p), legendre(unit_part(d, p), p) * chi_alpha, k, p);
}

bool rule2(const BinaryForm& ell, const QuadraticForm& m, i64 p) {
  const auto [r0, chi0] = component(odd_symbol(m, p).components, 0);
  if (r0 >= 3) return true;
  return r0 == 2 && legendre(ell.det(), p) == chi0;
}

// ---------------------------------------------------------------------------
// Lifting search for primitive representations X with X^t G X = S over Z_p.
//
// A level-j node is X mod p^j with off-diagonal entries correct mod p^j and
// diagonal entries correct mod p^(j + ord_p 2). With e the largest elementary
// divisor exponent of X^t G, the node lifts to an exact solution as soon as
// j >= 2e + 1 + ord_p 2; for primitive X, e <= max_scale(G).

int min_minor_ord(const std::vector<std::vector<i64>>& a, int k, i64 p, int cap) {
  if (k == 0) return 0;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int best = cap;
  std::vector<int> rsel, csel;
  std::function<void(int)> pick_cols;
  auto eval = [&]() {
    IntMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = a[rsel[i]][csel[j]];
    best = std::min(best, ord_p(determinant_exact(sub), p, cap));
  };
  pick_cols = [&](int start) {
    if (static_cast<int>(csel.size()) == k) {
      eval();
      return;
    }
    for (int c = start; c < cols && best > 0; ++c) {
      csel.push_back(c);
      pick_cols(c + 1);
      csel.pop_back();
    }
  };
  std::function<void(int)> pick_rows = [&](int start) {
    if (static_cast<int>(rsel.size()) == k) {
      pick_cols(0);
      return;
    }
    for (int r = start; r < rows && best > 0; ++r) {
      rsel.push_back(r);
      pick_rows(r + 1);
      rsel.pop_back();
    }
  };
  pick_rows(0);
  return best;
}

class LiftSearch {
 public:
  LiftSearch(const IntMatrix& g, const IntMatrix& s, i64 p, int depth, std::size_t& nodes, std::size_t budget)
      : g_(g), s_(s), p_(p), depth_(depth), delta_(delta_of(p)), n_(g.rows()), m_(s.rows()), nodes_(nodes),
        budget_(budget) {
    for (int k = 0; k <= depth + delta_ + 1; ++k) pw_.push_back(ipow(p, k));
  }

  bool run() {
    x_.assign(static_cast<std::size_t>(m_), Vec(static_cast<std::size_t>(n_), 0));
    return extend(0, 0);
  }

 private:
  i128 bil(const Vec& u, const Vec& v) const {
    i128 s = 0;
    for (int i = 0; i < n_; ++i) {
      if (u[i] == 0) continue;
      i128 row = 0;
      for (int j = 0; j < n_; ++j) row += static_cast<i128>(g_(i, j)) * v[j];
      s += u[i] * row;
    }
    return s;
  }

  bool column_ok(int c, i128 q_diag, i128 q_off) const {
    if (mod_q(bil(x_[c], x_[c]) - s_(c, c), q_diag) != 0) return false;
    for (int i = 0; i < c; ++i)
      if (mod_q(bil(x_[i], x_[c]) - s_(i, c), q_off) != 0) return false;
    return true;
  }

  bool independent_mod_p(int c) const {
    std::vector<Vec> rows;
    for (int i = 0; i <= c; ++i) {
      Vec r(x_[i]);
      for (i64& v : r) v = mod_floor(v, p_);
      rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < n_ && rank <= c; ++col) {
      int piv = -1;
      for (int r = rank; r <= c; ++r)
        if (rows[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      const i64 inv = static_cast<i64>(inverse_mod(rows[rank][col], p_));
      for (int r = 0; r <= c; ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        const i64 f = rows[r][col] * inv % p_;
        for (int k = 0; k < n_; ++k) rows[r][k] = mod_floor(rows[r][k] - f * rows[rank][k], p_);
      }
      ++rank;
    }
    return rank == c + 1;
  }

  bool certified(int level) const {
    const i128 q = pw_[level];
    std::vector<std::vector<i64>> a(static_cast<std::size_t>(m_), std::vector<i64>(static_cast<std::size_t>(n_)));
    for (int c = 0; c < m_; ++c)
      for (int j = 0; j < n_; ++j) {
        i128 s = 0;
        for (int i = 0; i < n_; ++i) s += static_cast<i128>(x_[c][i]) * g_(i, j);
        a[c][j] = static_cast<i64>(mod_q(s, q));
      }
    const int dm = min_minor_ord(a, m_, p_, level);
    if (dm >= level) return false;
    const int e = dm - min_minor_ord(a, m_ - 1, p_, level);
    return level >= 2 * e + 1 + delta_;
  }

  bool extend(int j, int c) {
    if (c == m_) {
      if (++nodes_ > budget_) throw PrecisionExhausted("lifting search exceeded its node budget");
      const int level = j + 1;
      if (certified(level)) return true;
      if (level >= depth_) return false;
      return extend(level, 0);
    }
    const i128 pj = pw_[j];
    const i128 q_diag = pw_[j + 1 + delta_];
    const i128 q_off = pw_[j + 1];
    const Vec saved = x_[c];
    Vec z(static_cast<std::size_t>(n_), 0);
    for (;;) {
      for (int r = 0; r < n_; ++r) x_[c][r] = static_cast<i64>(saved[r] + pj * z[r]);
      if (column_ok(c, q_diag, q_off) && (j > 0 || independent_mod_p(c)) && extend(j, c + 1)) return true;
      int r = n_ - 1;
      while (r >= 0 && z[r] == p_ - 1) z[r--] = 0;
      if (r < 0) break;
      ++z[r];
    }
    x_[c] = saved;
    return false;
  }

  const IntMatrix& g_;
  const IntMatrix& s_;
  i64 p_;
  int depth_;
  int delta_;
  int n_;
  int m_;
  std::vector<i128> pw_;
  std::vector<Vec> x_;
  std::size_t& nodes_;
  std::size_t budget_;
};

std::string memo_key(const IntMatrix& g, const IntMatrix& s, i64 p, i128 q) {
  std::ostringstream os;
  os << p << '|' << g << '|';
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) os << static_cast<i64>(mod_q(s(i, j), q)) << ',';
  return os.str();
}

bool primitive_rep(const IntMatrix& g, const IntMatrix& s, i64 p, std::size_t& nodes, std::size_t budget) {
  const int delta = delta_of(p);
  const int depth = 2 * max_scale(g, p) + 1 + delta;
  thread_local std::unordered_map<std::string, bool> memo;
  const std::string key = memo_key(g, s, p, ipow(p, depth + delta));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  LiftSearch search(g, s, p, depth, nodes, budget);
  const bool found = search.run();
  if (memo.size() > 200'000) memo.clear();
  memo.emplace(key, found);
  return found;
}

bool rep_binary(const IntMatrix& g, const IntMatrix& s, i64 p, std::size_t& nodes, std::size_t budget) {
  if (primitive_rep(g, s, p, nodes, budget)) return true;
  const i128 det = static_cast<i128>(s(0, 0)) * s(1, 1) - static_cast<i128>(s(0, 1)) * s(1, 0);
  if (ord_p(det, p) < 2) return false;
  // integral overlattices of index p: ell = H^t ell' H with H in Hermite form of determinant p
  std::vector<IntMatrix> hs{IntMatrix{{p, 0}, {0, 1}}};
  for (i64 j = 0; j < p; ++j) hs.push_back(IntMatrix{{1, j}, {0, p}});
  const i128 p2 = static_cast<i128>(p) * p;
  for (const IntMatrix& h : hs) {
    const IntMatrix adj{{h(1, 1), -h(0, 1)}, {-h(1, 0), h(0, 0)}};
    const IntMatrix s2 = congruence(s, adj);
    bool integral = true;
    for (int i = 0; i < 2 && integral; ++i)
      for (int j = 0; j < 2; ++j) integral = integral && s2(i, j) % p2 == 0;
    if (!integral) continue;
    IntMatrix s3(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s3(i, j) = static_cast<i64>(s2(i, j) / p2);
    if (rep_binary(g, s3, p, nodes, budget)) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------

IntMatrix JordanDecomposition::gram() const {
  int n = 0;
  for (const auto& b : blocks) n += b.rank();
  IntMatrix g(n, n);
  int at = 0;
  for (const auto& b : blocks) {
    const i64 ps = static_cast<i64>(ipow(p, b.scale));
    switch (b.kind) {
      case JordanBlock::Kind::kDiagonal:
        for (i64 u : b.units) {
          g(at, at) = ps * u;
          ++at;
        }
        break;
      case JordanBlock::Kind::kHyperbolic:
      case JordanBlock::Kind::kA2:
        g(at, at) = ps * b.plane[0];
        g(at, at + 1) = g(at + 1, at) = ps * b.plane[1];
        g(at + 1, at + 1) = ps * b.plane[2];
        at += 2;
        break;
    }
  }
  return g;
}

std::string JordanDecomposition::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& b : blocks) {
    os << (first ? "" : " ") << b.scale << ':';
    first = false;
    switch (b.kind) {
      case JordanBlock::Kind::kHyperbolic:
        os << 'H';
        break;
      case JordanBlock::Kind::kA2:
        os << 'A';
        break;
      case JordanBlock::Kind::kDiagonal:
        os << '<';
        for (std::size_t i = 0; i < b.units.size(); ++i) {
          if (i) os << ',';
          if (p == 2)
            os << mod_floor(b.units[i], 8);
          else
            os << (legendre(b.units[i], p) > 0 ? '+' : '-');
        }
        os << '>';
        break;
    }
  }
  return os.str();
}

JordanDecomposition jordan_decompose(const IntMatrix& g, i64 p) {
  if (!g.is_symmetric()) throw ShapeMismatch("Gram matrix must be symmetric");
  const int n = g.rows();
  const i128 det = determinant_exact(g);
  if (det == 0) throw NotPositiveDefinite("singular Gram matrix");
  const int delta = delta_of(p);
  const int prec = ord_p(det, p) + 3 + 3 * delta;
  const i128 q = ipow(p, prec);
  if (q > (static_cast<i128>(1) << 62)) throw OutOfRange("p-adic precision exceeds 62 bits");

  Mat128 t(n, std::vector<i128>(n, 0));
  for (int i = 0; i < n; ++i) t[i][i] = 1;
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) active[i] = i;

  JordanDecomposition jd;
  jd.p = p;
  jd.precision = prec;
  std::vector<std::pair<JordanBlock, std::vector<int>>> raw;
  while (!active.empty()) {
    const Mat128 w = congruence_mod(g, t, q);
    int m = prec;
    for (int i : active)
      for (int j : active) m = std::min(m, ord_p(w[i][j], p, prec));
    if (m >= prec) throw PrecisionExhausted("Jordan decomposition ran out of precision");
    const i128 pm = ipow(p, m);
    int di = -1;
    for (int i : active)
      if (ord_p(w[i][i], p, prec) == m) {
        di = i;
        break;
      }
    if (di >= 0) {
      const i128 u = w[di][di] / pm;
      for (int k : active) {
        if (k == di) continue;
        const i128 v = w[di][k] / pm;
        for (int r = 0; r < n; ++r) t[r][k] = mod_q(u * t[r][k] - v * t[r][di], q);
      }
      JordanBlock b;
      b.scale = m;
      b.units.push_back(static_cast<i64>(mod_q(u, ipow(p, prec - m))));
      raw.emplace_back(std::move(b), std::vector<int>{di});
      active.erase(std::find(active.begin(), active.end(), di));
      continue;
    }
    int oi = -1, oj = -1;
    for (int i : active)
      for (int j : active)
        if (oi < 0 && i < j && ord_p(w[i][j], p, prec) == m) {
          oi = i;
          oj = j;
        }
    if (p != 2) {
      for (int r = 0; r < n; ++r) t[r][oi] = mod_q(t[r][oi] + t[r][oj], q);
      continue;
    }
    const i128 al = w[oi][oi] / pm, be = w[oi][oj] / pm, ga = w[oj][oj] / pm;
    const i128 d = mod_q(al * ga - be * be, q);
    for (int k : active) {
      if (k == oi || k == oj) continue;
      const i128 gi = w[oi][k] / pm, gj = w[oj][k] / pm;
      const i128 x = mod_q(ga * gi - be * gj, q);
      const i128 y = mod_q(al * gj - be * gi, q);
      for (int r = 0; r < n; ++r) t[r][k] = mod_q(d * t[r][k] - mod_q(x * t[r][oi], q) - y * t[r][oj], q);
    }
    JordanBlock b;
    b.scale = m;
    b.kind = mod_floor(static_cast<i64>(d % 8), 8) == 3 ? JordanBlock::Kind::kA2 : JordanBlock::Kind::kHyperbolic;
    const i128 qm = ipow(p, prec - m);
    b.plane = {static_cast<i64>(mod_q(al, qm)), static_cast<i64>(mod_q(be, qm)), static_cast<i64>(mod_q(ga, qm))};
    raw.emplace_back(std::move(b), std::vector<int>{oi, oj});
    active.erase(std::find(active.begin(), active.end(), oi));
    active.erase(std::find(active.begin(), active.end(), oj));
  }

  std::stable_sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.first.scale < y.first.scale; });
  std::vector<int> order;
  for (auto& [b, cols] : raw) {
    order.insert(order.end(), cols.begin(), cols.end());
    if (!jd.blocks.empty() && b.kind == JordanBlock::Kind::kDiagonal &&
        jd.blocks.back().kind == JordanBlock::Kind::kDiagonal && jd.blocks.back().scale == b.scale) {
      jd.blocks.back().units.push_back(b.units[0]);
    } else {
      jd.blocks.push_back(std::move(b));
    }
  }
  jd.transform = IntMatrix(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) jd.transform(r, c) = static_cast<i64>(t[r][order[c]]);
  return jd;
}

JordanDecomposition jordan_decompose(const QuadraticForm& l, i64 p) { return jordan_decompose(l.gram(), p); }

OddSymbol odd_symbol(const QuadraticForm& l, i64 p) {
  if (p == 2) throw PreconditionViolated("odd symbol needs an odd prime");
  OddSymbol s;
  for (const auto& b : jordan_decompose(l, p).blocks) {
    auto& slot = s.components[b.scale];
    if (slot.first == 0) slot = {0, 1};
    for (i64 u : b.units) {
      ++slot.first;
      slot.second *= legendre(u, p);
    }
  }
  return s;
}

std::string to_string(LocalPath path) {
  switch (path) {
    case LocalPath::kRule1:
      return "rule1";
    case LocalPath::kRule2:
      return "rule2";
    case LocalPath::kUnitSplit:
      return "unit-split";
    case LocalPath::kFallback:
      return "lifting";
  }
  return "?";
}

LocalResult decide_local(const BinaryForm& ell, const QuadraticForm& m, i64 p, std::size_t budget) {
  if (m.rank() < 2) throw PreconditionViolated("target lattice must have rank at least 2");
  if (!is_prime(p)) throw PreconditionViolated("p must be prime");
  if (p != 2) {
    const bool unit_scale = ell.a % p != 0 || ell.b % p != 0 || ell.c % p != 0;
    if (unit_scale) {
      if (m.rank() >= 4 && determinant(m) % p != 0) return {true, LocalPath::kRule1};
      if (ell.det() % p != 0) return {rule2(ell, m, p), LocalPath::kRule2};
      return {unit_split(ell, m, p), LocalPath::kUnitSplit};
    }
  }
  return {fallback_locally_represented(ell, m, p, budget), LocalPath::kFallback};
}

bool is_locally_represented(const BinaryForm& ell, const QuadraticForm& m, i64 p) {
  return decide_local(ell, m, p).represented;
}

bool fallback_locally_represented(const BinaryForm& ell, const QuadraticForm& m, i64 p, std::size_t budget) {
  std::size_t nodes = 0;
  return rep_binary(m.gram(), ell.gram(), p, nodes, budget);
}

bool locally_represents_number(const QuadraticForm& m, i64 n, i64 p, std::size_t budget) {
  if (n <= 0) throw PreconditionViolated("represented number must be positive");
  std::size_t nodes = 0;
  for (i64 k = n;; k /= p * p) {
    if (primitive_rep(m.gram(), IntMatrix{{k}}, p, nodes, budget)) return true;
    if (k % (p * p) != 0) return false;
  }
}

bool same_genus(const QuadraticForm& m, const QuadraticForm& mt, std::size_t budget) {
  if (m.rank() != mt.rank() || determinant(m) != determinant(mt)) return false;
  for (i64 p : prime_factors(determinant(m)))
    if (p != 2 && odd_symbol(m, p) != odd_symbol(mt, p)) return false;
  std::size_t nodes = 0;
  return primitive_rep(mt.gram(), m.gram(), 2, nodes, budget);
}

}  // namespace iso2
