#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace iso2 {

using i64 = std::int64_t;
using i128 = __int128;
using Vec = std::vector<i64>;

/// Dense row-major integer matrix. Small (rank <= 5) by construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, i64 fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<i64>> rows);

  static IntMatrix identity(int n);
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(std::span<const Vec> cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  i64& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  i64 operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  Vec column(int c) const;
  IntMatrix transpose() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<i64> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination in 128-bit arithmetic.
i128 determinant_exact(const IntMatrix& m);

/// Rank over the rationals.
int rank_of(const IntMatrix& m);

/// Checked narrowing of a 128-bit value; throws OutOfRange.
i64 narrow(i128 v);

i64 floor_div(i64 a, i64 b);
i64 mod_floor(i64 a, i64 m);

}  // namespace iso2
