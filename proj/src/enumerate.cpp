#include "iso2/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>
#include <sstream>

#include "iso2/errors.hpp"

namespace iso2 {

namespace {

/// Unimodular U with v^T U = (g, 0, ..., 0), g = gcd(v) >= 0.
IntMatrix unimodular_to_gcd(const Vec& v) {
  const int n = static_cast<int>(v.size());
  IntMatrix u = IntMatrix::identity(n);
  Vec w = v;
  for (int i = 1; i < n; ++i) {
    if (w[i] == 0) continue;
    // extended gcd of (w0, wi)
    i64 old_r = w[0], r = w[i], old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const i64 q = floor_div(old_r, r);
      std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    const i64 g = old_r;
    const i64 p0 = w[0] / g, pi = w[i] / g;
    for (int k = 0; k < n; ++k) {
      const i64 c0 = u(k, 0), ci = u(k, i);
      u(k, 0) = old_s * c0 + old_t * ci;
      u(k, i) = -pi * c0 + p0 * ci;
    }
    w[0] = g;
    w[i] = 0;
  }
  if (w[0] < 0)
    for (int k = 0; k < n; ++k) u(k, 0) = -u(k, 0);
  return u;
}

IntMatrix inverse_2x2_unimodular(const IntMatrix& t) {
  const i64 d = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
  if (d != 1 && d != -1) throw Error("transform is not unimodular");
  return IntMatrix{{t(1, 1) * d, -t(0, 1) * d}, {-t(1, 0) * d, t(0, 0) * d}};
}

/// Unimodular U with U^t G U LLL-reduced (delta = 0.99), on the Gram matrix directly.
IntMatrix lll_transform(const IntMatrix& g0) {
  const int n = g0.rows();
  IntMatrix g = g0;
  IntMatrix u = IntMatrix::identity(n);
  auto swap_cols = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(u(k, i), u(k, j));
    for (int k = 0; k < n; ++k) std::swap(g(k, i), g(k, j));
    for (int k = 0; k < n; ++k) std::swap(g(i, k), g(j, k));
  };
  // b_k <- b_k - q b_j
  auto reduce = [&](int k, int j, i64 q) {
    for (int r = 0; r < n; ++r) u(r, k) -= q * u(r, j);
    const i64 gkk = g(k, k) - 2 * q * g(k, j) + q * q * g(j, j);
    for (int r = 0; r < n; ++r)
      if (r != k) g(r, k) -= q * g(r, j);
    g(k, k) = gkk;
    for (int r = 0; r < n; ++r) g(k, r) = g(r, k);
  };
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
  std::vector<long double> bstar(n, 0);
  auto gram_schmidt = [&](int upto) {
    for (int i = 0; i <= upto; ++i) {
      for (int j = 0; j < i; ++j) {
        long double s = static_cast<long double>(g(i, j));
        for (int l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * bstar[l];
        mu[i][j] = s / bstar[j];
      }
      long double s = static_cast<long double>(g(i, i));
      for (int l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * bstar[l];
      bstar[i] = s;
    }
  };
  int k = 1;
  int guard = 0;
  while (k < n && ++guard < 100000) {
    gram_schmidt(k);
    for (int j = k - 1; j >= 0; --j) {
      const i64 q = static_cast<i64>(std::llround(mu[k][j]));
      if (q != 0) {
        reduce(k, j, q);
        gram_schmidt(k);
      }
    }
    if (bstar[k] >= (0.99L - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      ++k;
    } else {
      swap_cols(k, k - 1);
      k = std::max(k - 1, 1);
    }
  }
  return u;
}

bool first_nonzero_positive(std::span<const i64> v) {
  for (i64 x : v)
    if (x != 0) return x > 0;
  return false;
}

i64 gcd_of(const Vec& v) {
  i64 g = 0;
  for (i64 x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace

RepresentationWitness::RepresentationWitness(const IntMatrix& lattice_gram, const IntMatrix& target_gram,
                                             IntMatrix t)
    : t_(std::move(t)) {
  if (congruence(lattice_gram, t_) != target_gram) {
    std::ostringstream os;
    os << "witness " << t_ << " does not map " << lattice_gram << " onto " << target_gram;
    throw Error(os.str());
  }
}

ShellWalker::ShellWalker(IntMatrix g, Vec h, i64 k0) : g_(std::move(g)), h_(std::move(h)), k0_(k0) {
  const int r = g_.rows();
  // centre c solves G c = -h
  std::vector<std::vector<long double>> a(r, std::vector<long double>(r + 1));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = static_cast<long double>(g_(i, j));
    a[i][r] = -static_cast<long double>(h_[i]);
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    for (int i = col + 1; i < r; ++i)
      if (std::fabs(a[i][col]) > std::fabs(a[piv][col])) piv = i;
    std::swap(a[col], a[piv]);
    for (int i = 0; i < r; ++i) {
      if (i == col) continue;
      const long double f = a[i][col] / a[col][col];
      for (int j = col; j <= r; ++j) a[i][j] -= f * a[col][j];
    }
  }
  center_.resize(r);
  for (int i = 0; i < r; ++i) center_[i] = a[i][r] / a[i][i];
  min_value_ = static_cast<long double>(k0_);
  for (int i = 0; i < r; ++i) min_value_ += static_cast<long double>(h_[i]) * center_[i];

  // Fincke-Pohst factor on reversed coordinates so original index 0 is fixed first.
  chol_.assign(r, std::vector<long double>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) chol_[i][j] = static_cast<long double>(g_(r - 1 - i, r - 1 - j));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      chol_[j][i] = chol_[i][j];
      chol_[i][j] /= chol_[i][i];
    }
    for (int k = i + 1; k < r; ++k)
      for (int l = k; l < r; ++l) chol_[k][l] -= chol_[k][i] * chol_[i][l];
  }
}

bool ShellWalker::walk(i64 target, Mode mode, const VectorVisitor& visit, Order order) const {
  const int r = g_.rows();
  const long double budget = static_cast<long double>(target) - min_value_;
  const long double tol = 1e-9L * (1.0L + std::fabs(budget)) + 1e-9L;
  if (budget < -tol) return false;

  std::vector<long double> w(r, 0);  // w'_i = z'_i - c'_i in reversed coordinates
  Vec z(static_cast<std::size_t>(r), 0);

  auto exact_value = [&]() {
    i128 s = k0_;
    for (int i = 0; i < r; ++i) {
      s += 2 * static_cast<i128>(h_[i]) * z[i];
      for (int j = 0; j < r; ++j) s += static_cast<i128>(z[i]) * g_(i, j) * z[j];
    }
    return s;
  };

  std::function<bool(int, long double)> recurse = [&](int level, long double remaining) -> bool {
    const int orig = r - 1 - level;
    long double u = 0;
    for (int j = level + 1; j < r; ++j) u -= chol_[level][j] * w[j];
    const long double rad = std::sqrt(std::max(remaining, 0.0L) / chol_[level][level]);
    const long double margin = 1e-7L * (1.0L + rad);
    const long double mid = center_[orig] + u;
    const i64 lo = static_cast<i64>(std::ceil(mid - rad - margin));
    const i64 hi = static_cast<i64>(std::floor(mid + rad + margin));
    if (level == 0 && mode == Mode::kEqual) {
      // only the two ends of the interval can hit the shell
      const i64 ends[4] = {lo, lo + 1, hi - 1, hi};
      i64 last = lo - 1;
      for (const i64 v : ends) {
        if (v > hi || v <= last) continue;
        last = v;
        z[orig] = v;
        if (exact_value() == target && visit(std::span<const i64>(z))) return true;
      }
      return false;
    }
    const i64 count = hi - lo + 1;
    const i64 start = std::clamp(static_cast<i64>(std::llround(mid)), lo, hi);
    for (i64 step = 0; step < count; ++step) {
      i64 v = lo + step;
      if (order == Order::kCentreOut) {
        // start, start+1, start-1, start+2, ... clipped to [lo, hi]
        const i64 above = hi - start, below = start - lo;
        const i64 k = (step + 1) / 2;
        if (step == 0) v = start;
        else if (step % 2 == 1 ? k <= above : k <= below) v = step % 2 == 1 ? start + k : start - k;
        else v = k > above ? start - (step - above) : start + (step - below);
      }
      z[orig] = v;
      w[level] = static_cast<long double>(v) - center_[orig];
      const long double d = w[level] - u;
      const long double next = remaining - chol_[level][level] * d * d;
      if (next < -tol) continue;
      if (level == 0) {
        const i128 val = exact_value();
        const bool ok = mode == Mode::kEqual ? val == target : val <= target;
        if (ok && visit(std::span<const i64>(z))) return true;
      } else if (recurse(level - 1, next)) {
        return true;
      }
    }
    return false;
  };
  return recurse(r - 1, budget);
}

bool visit_vectors_of_norm(const QuadraticForm& l, i64 m, const VectorVisitor& visit) {
  if (m < 0) return false;
  return ShellWalker(l.gram()).walk(m, ShellWalker::Mode::kEqual, visit);
}

std::vector<Vec> vectors_of_norm(const QuadraticForm& l, i64 m) {
  std::vector<Vec> out;
  visit_vectors_of_norm(l, m, [&](std::span<const i64> v) {
    out.emplace_back(v.begin(), v.end());
    return false;
  });
  return out;
}

std::vector<Vec> vectors_of_norm_at_most(const QuadraticForm& l, i64 m) {
  std::vector<Vec> out;
  if (m < 0) return out;
  ShellWalker(l.gram()).walk(m, ShellWalker::Mode::kAtMost, [&](std::span<const i64> v) {
    out.emplace_back(v.begin(), v.end());
    return false;
  });
  return out;
}

std::optional<RepresentationWitness> represent_binary(const QuadraticForm& l, const BinaryForm& ell) {
  if (l.rank() < 2) return std::nullopt;
  const ReducedBinary red = gauss_reduce(ell);
  const BinaryForm& f = red.form;
  const IntMatrix& mg = l.gram();
  const int n = l.rank();

  std::optional<IntMatrix> found;
  ShellWalker(mg).walk(f.a, ShellWalker::Mode::kEqual, ShellWalker::Order::kCentreOut, [&](std::span<const i64> x) {
    if (!first_nonzero_positive(x)) return false;
    Vec mx(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mx[i] += mg(i, j) * x[j];
    const i64 g = gcd_of(mx);
    if (f.b % g != 0) return false;
    const IntMatrix u = unimodular_to_gcd(mx);
    Vec y0(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) y0[i] = (f.b / g) * u(i, 0);
    IntMatrix k(n, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 1; j < n; ++j) k(i, j - 1) = u(i, j);
    k = k * lll_transform(k.transpose() * mg * k);
    const IntMatrix mk = mg * k;
    const IntMatrix gk = k.transpose() * mk;
    Vec h(static_cast<std::size_t>(n - 1), 0);
    for (int j = 0; j < n - 1; ++j)
      for (int i = 0; i < n; ++i) h[j] += y0[i] * mk(i, j);
    i128 k0 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) k0 += static_cast<i128>(y0[i]) * mg(i, j) * y0[j];
    ShellWalker walker(gk, h, narrow(k0));
    return walker.walk(f.c, ShellWalker::Mode::kEqual, ShellWalker::Order::kCentreOut, [&](std::span<const i64> z) {
      IntMatrix w(n, 2);
      for (int i = 0; i < n; ++i) {
        w(i, 0) = x[i];
        i64 yi = y0[i];
        for (int j = 0; j < n - 1; ++j) yi += k(i, j) * z[j];
        w(i, 1) = yi;
      }
      found = std::move(w);
      return true;
    });
  });
  if (!found) return std::nullopt;
  IntMatrix w = *found * inverse_2x2_unimodular(red.transform);
  return RepresentationWitness(mg, ell.gram(), std::move(w));
}

bool represents_i2(const QuadraticForm& l) { return represent_binary(l, BinaryForm{1, 0, 1}).has_value(); }

std::optional<RepresentationWitness> represent_form(const QuadraticForm& l, const QuadraticForm& target) {
  const int m = target.rank();
  const int n = l.rank();
  if (m > n) return std::nullopt;
  std::vector<std::vector<Vec>> candidates(m);
  for (int j = 0; j < m; ++j) {
    candidates[j] = vectors_of_norm(l, target(j, j));
    if (candidates[j].empty()) return std::nullopt;
  }
  std::vector<const Vec*> chosen(m, nullptr);
  std::vector<Vec> images(m);  // M_L * column
  const IntMatrix& g = l.gram();

  std::function<bool(int)> place = [&](int j) -> bool {
    if (j == m) return true;
    for (const Vec& c : candidates[j]) {
      if (j == 0 && !first_nonzero_positive(c)) continue;
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) {
        i128 s = 0;
        for (int r = 0; r < n; ++r) s += static_cast<i128>(images[i][r]) * c[r];
        ok = s == target(i, j);
      }
      if (!ok) continue;
      chosen[j] = &c;
      images[j].assign(static_cast<std::size_t>(n), 0);
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) images[j][r] += g(r, s) * c[s];
      if (place(j + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  IntMatrix t(n, m);
  for (int j = 0; j < m; ++j)
    for (int r = 0; r < n; ++r) t(r, j) = (*chosen[j])[r];
  return RepresentationWitness(g, target.gram(), std::move(t));
}

std::optional<IntMatrix> is_isometric(const QuadraticForm& l, const QuadraticForm& m) {
  if (l.rank() != m.rank() || determinant(l) != determinant(m)) return std::nullopt;
  auto w = represent_form(l, m);
  if (!w) return std::nullopt;
  const i128 d = determinant_exact(w->matrix());
  if (d != 1 && d != -1) throw Error("isometry witness is not unimodular");
  return w->matrix();
}

std::vector<i64> successive_minima(const QuadraticForm& l, int k) {
  if (k < 1 || k > l.rank()) throw ShapeMismatch("successive minima index");
  if (l.rank() == 2) {
    const BinaryForm f = gauss_reduce(BinaryForm{l(0, 0), l(0, 1), l(1, 1)}).form;
    std::vector<i64> mu{f.a, f.c};
    mu.resize(static_cast<std::size_t>(k));
    return mu;
  }
  std::vector<i64> mu;
  std::vector<Vec> basis;
  for (i64 m = 1; static_cast<int>(mu.size()) < k; ++m) {
    for (const Vec& v : vectors_of_norm(l, m)) {
      std::vector<Vec> trial = basis;
      trial.push_back(v);
      if (rank_of(IntMatrix::from_columns(trial).transpose()) > static_cast<int>(basis.size())) {
        basis = std::move(trial);
        mu.push_back(m);
      }
    }
  }
  mu.resize(static_cast<std::size_t>(k));
  return mu;
}

std::vector<i64> theta_prefix(const QuadraticForm& l, i64 m) {
  std::vector<i64> counts(static_cast<std::size_t>(m + 1), 0);
  const IntMatrix& g = l.gram();
  ShellWalker(g).walk(m, ShellWalker::Mode::kAtMost, [&](std::span<const i64> v) {
    i128 s = 0;
    for (int i = 0; i < l.rank(); ++i)
      for (int j = 0; j < l.rank(); ++j) s += static_cast<i128>(v[i]) * g(i, j) * v[j];
    ++counts[static_cast<std::size_t>(s)];
    return false;
  });
  return counts;
}

}  // namespace iso2
