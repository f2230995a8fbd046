#include "iso2/i2lat.hpp"

#include <algorithm>

#include "iso2/errors.hpp"

namespace iso2 {

namespace {

bool has_bad_prime_factor(i64 n, i64 p) {
  for (i64 q = 3; q * q <= n; q += 2) {
    if (n % q != 0) continue;
    if (q != p && q % 4 == 3) return true;
    while (n % q == 0) n /= q;
  }
  return n > 2 && n != p && n % 4 == 3;
}

}  // namespace

std::vector<SublatticeClass> index_p_sublattices(i64 p) {
  if (p < 2) throw PreconditionViolated("index must be a prime");
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionViolated("index must be a prime");
  std::vector<IntMatrix> bases{IntMatrix{{p, 0}, {0, 1}}};
  for (i64 j = 0; j < p; ++j) bases.push_back(IntMatrix{{1, 0}, {j, p}});

  std::vector<SublatticeClass> out;
  for (const IntMatrix& h : bases) {
    const IntMatrix g = h.transpose() * h;
    const ReducedBinary r = gauss_reduce(BinaryForm{g(0, 0), g(0, 1), g(1, 1)});
    if (std::any_of(out.begin(), out.end(), [&](const SublatticeClass& s) { return s.form == r.form; })) continue;
    out.push_back(SublatticeClass{p, r.form, h, h * r.transform});
  }
  std::sort(out.begin(), out.end(), [](const SublatticeClass& x, const SublatticeClass& y) { return x.form < y.form; });
  return out;
}

bool check_arith_conditions(const BinaryForm& ell, i64 p) {
  const auto [a, b, c] = ell;
  if (ell.det() != p * p) return false;
  const bool pattern = (mod_floor(a, 8) == 2 && mod_floor(b, 2) == 1 && mod_floor(c, 4) == 1) ||
                       (mod_floor(a, 4) == 1 && mod_floor(b, 2) == 1 && mod_floor(c, 8) == 2) ||
                       (mod_floor(a, 4) == 1 && mod_floor(b, 2) == 0 && mod_floor(c, 4) == 1);
  return pattern && !has_bad_prime_factor(a, p) && !has_bad_prime_factor(c, p);
}

SubtractedPair subtract(const BinaryForm& ell, i64 t, i64 alpha, i64 beta, bool want_halved) {
  if (alpha == 0 && beta == 0) throw PreconditionViolated("alpha^2 + beta^2 must be nonzero");
  SubtractedPair s;
  s.t = t;
  s.alpha = alpha;
  s.beta = beta;
  s.base = BinaryTriple{ell.a - t * alpha * alpha, ell.b - t * alpha * beta, ell.c - t * beta * beta};
  if (want_halved) {
    if (mod_floor(s.base.b, 2) != 0 || mod_floor(s.base.c, 4) != 0)
      throw DivisibilityViolated("halved form needs 2 | b - t alpha beta and 4 | c - t beta^2");
    s.halved = BinaryTriple{s.base.a, s.base.b / 2, s.base.c / 4};
  }
  return s;
}

bool is_definite_by_lemma(const BinaryForm& ell, i64 t, i64 alpha, i64 beta, std::optional<Ratio> u, i64 p) {
  const i128 a = ell.a;
  const i128 n2 = static_cast<i128>(alpha) * alpha + static_cast<i128>(beta) * beta;
  if (3 * a > 4 * t * n2) return true;
  if (!u) return alpha == 0 && 3 * static_cast<i128>(p) > 4 * static_cast<i128>(t) * beta * beta;
  const i128 n = u->num, d = u->den;
  if (3 * n <= d) return false;
  return a * d > (d + n) * t * alpha * alpha && p * (3 * n - d) >= 4 * (d + n) * t * beta * beta;
}

std::vector<ShearVariant> shear_variants(const BinaryForm& ell) {
  const auto [a, b, c] = ell;
  return {
      ShearVariant{BinaryForm{a - 2 * b + c, b - c, c}, IntMatrix{{1, 0}, {-1, 1}}},
      ShearVariant{BinaryForm{a + 2 * b + c, b + c, c}, IntMatrix{{1, 0}, {1, 1}}},
      ShearVariant{BinaryForm{a, a - b, a - 2 * b + c}, IntMatrix{{1, 1}, {0, -1}}},
  };
}

IntMatrix append_subtraction_row(const IntMatrix& w, i64 alpha, i64 beta) {
  if (w.cols() != 2) throw ShapeMismatch("binary witness must have two columns");
  IntMatrix out(w.rows() + 1, 2);
  for (int r = 0; r < w.rows(); ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = w(r, c);
  out(w.rows(), 0) = alpha;
  out(w.rows(), 1) = beta;
  return out;
}

IntMatrix from_halved_witness(const IntMatrix& w) { return w * IntMatrix{{1, 0}, {0, 2}}; }

}  // namespace iso2
