#pragma once

#include "iso2/matrix.hpp"

namespace iso2 {

/// p-adic valuation; returns cap for zero.
int ord_p(i128 n, i64 p, int cap = 1 << 20);
/// n with all factors of p removed (n != 0).
i128 unit_part(i128 n, i64 p);
i128 ipow(i64 p, int e);
i64 mod_pow(i64 base, i64 e, i64 m);
/// Inverse of a unit u modulo m.
i128 inverse_mod(i128 u, i128 m);
/// Legendre symbol (u/p) for odd prime p and p-unit u; returns +1 or -1.
int legendre(i128 u, i64 p);
/// Smallest s with p^s G^{-1} integral.
int max_scale(const IntMatrix& g, i64 p);
bool is_prime(i64 n);
std::vector<i64> prime_factors(i128 n);

}  // namespace iso2
