#include "iso2/padic.hpp"

#include <algorithm>
#include <tuple>

#include "iso2/errors.hpp"

namespace iso2 {

int ord_p(i128 n, i64 p, int cap) {
  if (n == 0) return cap;
  int k = 0;
  while (n % p == 0 && k < cap) {
    n /= p;
    ++k;
  }
  return k;
}

i128 unit_part(i128 n, i64 p) {
  if (n == 0) throw PreconditionViolated("unit part of zero");
  while (n % p == 0) n /= p;
  return n;
}

i128 ipow(i64 p, int e) {
  i128 r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

i64 mod_pow(i64 base, i64 e, i64 m) {
  i128 r = 1 % m, b = mod_floor(base % m, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<i64>(r);
}

i128 inverse_mod(i128 u, i128 m) {
  i128 a = u % m, b = m, x0 = 1, x1 = 0;
  if (a < 0) a += m;
  while (b != 0) {
    const i128 q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  if (a != 1) throw PreconditionViolated("not a unit");
  x0 %= m;
  return x0 < 0 ? x0 + m : x0;
}

int legendre(i128 u, i64 p) {
  const i64 r = static_cast<i64>(((u % p) + p) % p);
  if (r == 0) throw PreconditionViolated("Legendre symbol of a non-unit");
  return mod_pow(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int max_scale(const IntMatrix& g, i64 p) {
  const int n = g.rows();
  const i128 det = determinant_exact(g);
  if (det == 0) throw NotPositiveDefinite("singular Gram matrix");
  if (n == 1) return ord_p(det, p);
  int min_cofactor = 1 << 20;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = g(r, c);
        }
        ++rr;
      }
      min_cofactor = std::min(min_cofactor, ord_p(determinant_exact(minor), p));
    }
  return std::max(0, ord_p(det, p) - min_cofactor);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> prime_factors(i128 n) {
  if (n < 0) n = -n;
  std::vector<i64> out;
  for (i64 d = 2; static_cast<i128>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<i64>(n));
  return out;
}

}  // namespace iso2
