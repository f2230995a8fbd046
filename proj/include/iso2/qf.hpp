#pragma once

#include <compare>
#include <string>
#include <utility>

#include "iso2/matrix.hpp"

namespace iso2 {

inline constexpr int kMaxRank = 5;
inline constexpr i64 kMaxEntry = 1'000'000;

/// Positive definite integral quadratic form given by its Gram matrix
/// (diagonal = Q(x_i), off-diagonal = B(x_i, x_j)). Immutable.
class QuadraticForm {
 public:
  /// Validates symmetry, rank 1..5, |entries| <= 10^6 and positive definiteness.
  explicit QuadraticForm(IntMatrix gram);

  static QuadraticForm diagonal(std::initializer_list<i64> entries);

  int rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  i64 operator()(int i, int j) const { return gram_(i, j); }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  IntMatrix gram_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f);

/// Binary form [[a, b], [b, c]]. Always positive definite.
struct BinaryForm {
  i64 a = 1;
  i64 b = 0;
  i64 c = 1;

  /// Throws NotPositiveDefinite unless a > 0 and ac - b^2 > 0.
  static BinaryForm make(i64 a, i64 b, i64 c);

  i64 det() const { return a * c - b * b; }
  /// Minkowski reduced: 0 <= 2b <= a <= c.
  bool is_reduced() const { return 0 <= 2 * b && 2 * b <= a && a <= c; }
  IntMatrix gram() const { return IntMatrix{{a, b}, {b, c}}; }
  QuadraticForm form() const { return QuadraticForm(gram()); }

  friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

/// Plain triple without the definiteness requirement, for subtracted forms
/// whose definiteness is checked separately.
struct BinaryTriple {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;
  i64 det() const { return a * c - b * b; }
  bool is_definite() const { return a > 0 && det() > 0; }
  BinaryForm form() const { return BinaryForm::make(a, b, c); }
  friend auto operator<=>(const BinaryTriple&, const BinaryTriple&) = default;
};

struct ReducedBinary {
  BinaryForm form;
  IntMatrix transform;  ///< T with T^t * M_in * T = M_form, det T = +-1
};

// Named constants.
QuadraticForm identity_form(int n);
IntMatrix hyperbolic_plane();
QuadraticForm a2_plane();

QuadraticForm assemble_candidate(i64 a1, i64 a2, i64 a3, i64 b1, i64 b2, i64 b3, i64 b4);

i64 determinant(const QuadraticForm& f);
ReducedBinary gauss_reduce(const BinaryForm& f);

QuadraticForm orthogonal_sum(const QuadraticForm& l, const QuadraticForm& m);
/// Gram of the sublattice spanned by the columns of t (full column rank).
QuadraticForm transform(const QuadraticForm& l, const IntMatrix& t);
/// Leading k x k block.
QuadraticForm section(const QuadraticForm& l, int k);
i64 evaluate(const QuadraticForm& l, std::span<const i64> v);
i64 bilinear(const QuadraticForm& l, std::span<const i64> u, std::span<const i64> v);

/// Symmetric Gram congruence T^t G T without definiteness checks.
IntMatrix congruence(const IntMatrix& g, const IntMatrix& t);

}  // namespace iso2
