#pragma once

#include <optional>
#include <vector>

#include "iso2/qf.hpp"

namespace iso2 {

/// Index-p sublattice of Z^2 up to isometry.
struct SublatticeClass {
  i64 p = 0;
  BinaryForm form;  ///< reduced, determinant p^2
  IntMatrix hnf;    ///< column basis in Hermite normal form
  IntMatrix basis;  ///< hnf times the reducing transform; basis^t basis = form
};

/// ell(t; alpha, beta) and, when the divisibility conditions hold, its halved overlattice.
struct SubtractedPair {
  BinaryTriple base;
  std::optional<BinaryTriple> halved;
  i64 t = 0;
  i64 alpha = 0;
  i64 beta = 0;
};

/// Positive rational num/den.
struct Ratio {
  i64 num = 1;
  i64 den = 1;
};

/// Sorted by (a, b, c).
std::vector<SublatticeClass> index_p_sublattices(i64 p);

bool check_arith_conditions(const BinaryForm& ell, i64 p);

/// Throws PreconditionViolated if alpha = beta = 0, DivisibilityViolated if the
/// halved form is requested but not integral.
SubtractedPair subtract(const BinaryForm& ell, i64 t, i64 alpha, i64 beta, bool want_halved);

/// Sufficient definiteness test for ell(t; alpha, beta). With u empty only the
/// first condition and the alpha = 0 shortcut 3p > 4 t beta^2 are tried.
bool is_definite_by_lemma(const BinaryForm& ell, i64 t, i64 alpha, i64 beta, std::optional<Ratio> u, i64 p);

struct ShearVariant {
  BinaryForm form;
  IntMatrix witness;  ///< W^t M_ell W = M_form, det W = +-1
};

/// [[a-2b+c, b-c],[b-c, c]], [[a+2b+c, b+c],[b+c, c]] and [[a, a-b],[a-b, a-2b+c]].
std::vector<ShearVariant> shear_variants(const BinaryForm& ell);

/// Witness of ell -> M + <t> from a witness of ell(t; alpha, beta) -> M.
IntMatrix append_subtraction_row(const IntMatrix& w, i64 alpha, i64 beta);

/// Witness of ell(t; alpha, beta) -> M from a witness of the halved form -> M.
IntMatrix from_halved_witness(const IntMatrix& w);

}  // namespace iso2
