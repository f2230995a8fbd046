#include "iso2/matrix.hpp"

#include <limits>
#include <utility>

#include "iso2/errors.hpp"

namespace iso2 {

IntMatrix::IntMatrix(int rows, int cols, i64 fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<i64>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw ShapeMismatch("ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const Vec> cols) {
  if (cols.empty()) return {};
  const int n = static_cast<int>(cols[0].size());
  IntMatrix m(n, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != n) throw ShapeMismatch("column length");
    for (int r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec IntMatrix::column(int c) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product");
  IntMatrix p(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      i128 s = 0;
      for (int k = 0; k < a.cols(); ++k) s += static_cast<i128>(a(r, k)) * b(k, c);
      p(r, c) = narrow(s);
    }
  return p;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw OutOfRange("value exceeds 64-bit range");
  return static_cast<i64>(v);
}

i128 determinant_exact(const IntMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = m(r, c);
  int sign = 1;
  i128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c) a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int rank_of(const IntMatrix& m) {
  std::vector<std::vector<i128>> a(m.rows(), std::vector<i128>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  auto normalize = [](std::vector<i128>& row) {
    i128 g = 0;
    for (i128 x : row) {
      i128 y = x < 0 ? -x : x;
      while (y != 0) {
        i128 t = g % y;
        g = y;
        y = t;
      }
    }
    if (g > 1)
      for (i128& x : row) x /= g;
  };
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      const i128 f = a[r][c];
      const i128 g = a[rank][c];
      for (int k = 0; k < m.cols(); ++k) a[r][k] = a[r][k] * g - a[rank][k] * f;
      normalize(a[r]);
    }
    ++rank;
  }
  return rank;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace iso2
