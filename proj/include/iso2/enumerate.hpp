#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "iso2/qf.hpp"

namespace iso2 {

/// Integer matrix T with T^t M_L T = M_ell; checked on construction.
class RepresentationWitness {
 public:
  /// Throws Error if the identity does not hold exactly.
  RepresentationWitness(const IntMatrix& lattice_gram, const IntMatrix& target_gram, IntMatrix t);

  const IntMatrix& matrix() const { return t_; }

 private:
  IntMatrix t_;
};

/// Visitor over enumerated vectors; return true to stop.
using VectorVisitor = std::function<bool(std::span<const i64>)>;

/// Exact shell walker for z^T G z + 2 h^T z + k0 over z in Z^r.
/// Coordinate 0 is outermost, values ascend, last coordinate innermost.
/// Bounds come from a long-double Cholesky factor widened by a safety margin;
/// every emitted vector is re-checked in integer arithmetic.
class ShellWalker {
 public:
  enum class Mode { kEqual, kAtMost };
  /// kCentreOut visits each coordinate nearest the centre first; used for first-hit searches.
  enum class Order { kAscending, kCentreOut };

  ShellWalker(IntMatrix g, Vec h, i64 k0);
  ShellWalker(const IntMatrix& g) : ShellWalker(g, Vec(static_cast<std::size_t>(g.rows()), 0), 0) {}

  /// Returns true if the visitor requested a stop.
  bool walk(i64 target, Mode mode, const VectorVisitor& visit, Order order = Order::kAscending) const;
  bool walk(i64 target, Mode mode, Order order, const VectorVisitor& visit) const { return walk(target, mode, visit, order); }

 private:
  IntMatrix g_;
  Vec h_;
  i64 k0_;
  std::vector<long double> center_;              // minimiser of the affine form
  std::vector<std::vector<long double>> chol_;  // q_ij in reversed coordinates
  long double min_value_ = 0;                    // value at the centre
};

std::vector<Vec> vectors_of_norm(const QuadraticForm& l, i64 m);
std::vector<Vec> vectors_of_norm_at_most(const QuadraticForm& l, i64 m);
bool visit_vectors_of_norm(const QuadraticForm& l, i64 m, const VectorVisitor& visit);

std::optional<RepresentationWitness> represent_binary(const QuadraticForm& l, const BinaryForm& ell);
bool represents_i2(const QuadraticForm& l);

/// General representation search for a target form of rank <= rank(L),
/// column by column.
std::optional<RepresentationWitness> represent_form(const QuadraticForm& l, const QuadraticForm& target);

std::optional<IntMatrix> is_isometric(const QuadraticForm& l, const QuadraticForm& m);

std::vector<i64> successive_minima(const QuadraticForm& l, int k);

/// Number of vectors of each norm 0..m (theta series prefix).
std::vector<i64> theta_prefix(const QuadraticForm& l, i64 m);

}  // namespace iso2
