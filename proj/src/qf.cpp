#include "iso2/qf.hpp"

#include <cstdlib>
#include <sstream>

#include "iso2/errors.hpp"

namespace iso2 {

namespace {

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

}  // namespace

QuadraticForm::QuadraticForm(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw ShapeMismatch("Gram matrix must be square");
  if (gram_.rows() < 1 || gram_.rows() > kMaxRank) throw OutOfRange("rank must be in 1..5");
  if (!gram_.is_symmetric()) throw ShapeMismatch("Gram matrix must be symmetric: " + to_string(gram_));
  for (int i = 0; i < gram_.rows(); ++i)
    for (int j = 0; j < gram_.cols(); ++j)
      if (std::llabs(gram_(i, j)) > kMaxEntry) throw OutOfRange("Gram entry exceeds 10^6");
  for (int k = 1; k <= gram_.rows(); ++k) {
    IntMatrix minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = gram_(i, j);
    if (determinant_exact(minor) <= 0) throw NotPositiveDefinite(to_string(gram_));
  }
}

QuadraticForm QuadraticForm::diagonal(std::initializer_list<i64> entries) {
  const int n = static_cast<int>(entries.size());
  IntMatrix g(n, n);
  int i = 0;
  for (i64 e : entries) {
    g(i, i) = e;
    ++i;
  }
  return QuadraticForm(std::move(g));
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f) { return os << f.gram(); }

BinaryForm BinaryForm::make(i64 a, i64 b, i64 c) {
  if (a <= 0 || static_cast<i128>(a) * c - static_cast<i128>(b) * b <= 0) {
    std::ostringstream os;
    os << "[[" << a << ',' << b << "],[" << b << ',' << c << "]]";
    throw NotPositiveDefinite(os.str());
  }
  return BinaryForm{a, b, c};
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
  return os << "[[" << f.a << ',' << f.b << "],[" << f.b << ',' << f.c << "]]";
}

QuadraticForm identity_form(int n) { return QuadraticForm(IntMatrix::identity(n)); }

IntMatrix hyperbolic_plane() { return IntMatrix{{0, 1}, {1, 0}}; }

QuadraticForm a2_plane() { return QuadraticForm(IntMatrix{{2, 1}, {1, 2}}); }

QuadraticForm assemble_candidate(i64 a1, i64 a2, i64 a3, i64 b1, i64 b2, i64 b3, i64 b4) {
  IntMatrix g{{1, 0, 0, 0, 0},
              {0, 2, 0, a1, b1},
              {0, 0, 2, a2, b2},
              {0, a1, a2, a3, b3},
              {0, b1, b2, b3, b4}};
  return QuadraticForm(std::move(g));
}

i64 determinant(const QuadraticForm& f) { return narrow(determinant_exact(f.gram())); }

ReducedBinary gauss_reduce(const BinaryForm& f) {
  i64 a = f.a, b = f.b, c = f.c;
  // Columns (p, q) and (r, s) of the running transform.
  i64 t00 = 1, t01 = 0, t10 = 0, t11 = 1;
  for (;;) {
    // b <- b - q a with |b| <= a/2
    const i64 q = floor_div(2 * b + a, 2 * a);
    if (q != 0) {
      c = c - 2 * q * b + q * q * a;
      b = b - q * a;
      t01 -= q * t00;
      t11 -= q * t10;
    }
    if (a > c) {
      std::swap(a, c);
      std::swap(t00, t01);
      std::swap(t10, t11);
      continue;
    }
    break;
  }
  if (b < 0) {
    b = -b;
    t01 = -t01;
    t11 = -t11;
  }
  return ReducedBinary{BinaryForm{a, b, c}, IntMatrix{{t00, t01}, {t10, t11}}};
}

IntMatrix congruence(const IntMatrix& g, const IntMatrix& t) {
  if (g.rows() != t.rows()) throw ShapeMismatch("transform rows must match rank");
  return t.transpose() * g * t;
}

QuadraticForm orthogonal_sum(const QuadraticForm& l, const QuadraticForm& m) {
  const int n = l.rank() + m.rank();
  if (n > kMaxRank) throw OutOfRange("orthogonal sum exceeds rank 5");
  IntMatrix g(n, n);
  for (int i = 0; i < l.rank(); ++i)
    for (int j = 0; j < l.rank(); ++j) g(i, j) = l(i, j);
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.rank(); ++j) g(l.rank() + i, l.rank() + j) = m(i, j);
  return QuadraticForm(std::move(g));
}

QuadraticForm transform(const QuadraticForm& l, const IntMatrix& t) {
  return QuadraticForm(congruence(l.gram(), t));
}

QuadraticForm section(const QuadraticForm& l, int k) {
  if (k < 1 || k > l.rank()) throw ShapeMismatch("section size");
  IntMatrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = l(i, j);
  return QuadraticForm(std::move(g));
}

i64 bilinear(const QuadraticForm& l, std::span<const i64> u, std::span<const i64> v) {
  if (static_cast<int>(u.size()) != l.rank() || static_cast<int>(v.size()) != l.rank())
    throw ShapeMismatch("vector length");
  i128 s = 0;
  for (int i = 0; i < l.rank(); ++i)
    for (int j = 0; j < l.rank(); ++j) s += static_cast<i128>(u[i]) * l(i, j) * v[j];
  return narrow(s);
}

i64 evaluate(const QuadraticForm& l, std::span<const i64> v) { return bilinear(l, v, v); }

}  // namespace iso2
