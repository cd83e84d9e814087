#pragma once

#include <optional>
#include <vector>

#include "twb/integer_matrix.hpp"

namespace twb {

/// S = U * A * V with U, V unimodular, S diagonal with nonnegative entries
/// s_1 | s_2 | ... . u_inverse is U^-1, kept so cokernel representatives can
/// be pulled back without a second inversion.
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  IntegerMatrix u_inverse;

  std::vector<BigInt> diagonal() const;
};

/// Smallest-absolute-value pivoting with every row and column operation
/// recorded in U and V. The result is checked by multiplication.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Throws InternalDefect if any decomposition invariant fails.
void verify_smith(const IntegerMatrix& a, const SmithDecomposition& snf);

/// Lower-triangular basis H (n x n, positive diagonal) of the lattice spanned
/// by the columns of `generators` (n rows). nullopt if the lattice does not
/// have full rank.
std::optional<IntegerMatrix> hermite_basis(const IntegerMatrix& generators);

/// Canonical representative of x modulo the lattice with lower-triangular
/// basis h: the unique point of x + L with 0 <= x_i < h_ii.
std::vector<BigInt> reduce_mod_lattice(const IntegerMatrix& h, std::vector<BigInt> x);

}  // namespace twb
