#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "iso2/qf.hpp"

namespace iso2 {

struct JordanBlock {
  enum class Kind { kDiagonal, kHyperbolic, kA2 };
  int scale = 0;
  Kind kind = Kind::kDiagonal;
  /// Diagonal units (residues mod p^(precision - scale)); empty for the planes.
  std::vector<i64> units;
  /// Plane entries (a, b, c) of the unscaled 2x2 block.
  std::array<i64, 3> plane{};

  int rank() const { return kind == Kind::kDiagonal ? static_cast<int>(units.size()) : 2; }
};

struct JordanDecomposition {
  i64 p = 2;
  int precision = 0;                ///< congruences hold modulo p^precision
  std::vector<JordanBlock> blocks;  ///< ascending scale
  IntMatrix transform;              ///< T^t G T = block diagonal mod p^precision, det T a p-unit

  /// The block diagonal Gram matrix (p^scale times each block).
  IntMatrix gram() const;
  /// Printable descriptor such as "1:<1,3> 2:H"; units mod 8 at p = 2, Legendre signs otherwise.
  std::string describe() const;
};

JordanDecomposition jordan_decompose(const IntMatrix& g, i64 p);
JordanDecomposition jordan_decompose(const QuadraticForm& l, i64 p);

/// Rank and determinant square class (Legendre symbol of the unit part) per scale, odd p.
struct OddSymbol {
  std::map<int, std::pair<int, int>> components;  ///< scale -> (rank, chi)
  bool operator==(const OddSymbol&) const = default;
};
OddSymbol odd_symbol(const QuadraticForm& l, i64 p);

enum class LocalPath { kRule1, kRule2, kUnitSplit, kFallback };
std::string to_string(LocalPath path);

struct LocalResult {
  bool represented = false;
  LocalPath path = LocalPath::kFallback;
};

/// Default node budget for the lifting search.
inline constexpr std::size_t kLiftBudget = 20'000'000;

/// Layered decision for ell -> M over Z_p. Throws PrecisionExhausted if the
/// lifting search exceeds its node budget.
LocalResult decide_local(const BinaryForm& ell, const QuadraticForm& m, i64 p, std::size_t budget = kLiftBudget);
bool is_locally_represented(const BinaryForm& ell, const QuadraticForm& m, i64 p);

/// The lifting search alone, valid for every prime.
bool fallback_locally_represented(const BinaryForm& ell, const QuadraticForm& m, i64 p,
                                  std::size_t budget = kLiftBudget);

/// n -> M over Z_p by the lifting search.
bool locally_represents_number(const QuadraticForm& m, i64 n, i64 p, std::size_t budget = kLiftBudget);

/// Locally isometric at every prime dividing 2 det.
bool same_genus(const QuadraticForm& m, const QuadraticForm& mt, std::size_t budget = kLiftBudget);

}  // namespace iso2
