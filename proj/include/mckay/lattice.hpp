#pragma once

#include "mckay/numeric.hpp"

namespace mckay {

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Only the nonzero rows are returned. Pivots are positive, pivot columns
/// strictly increase, and entries above a pivot lie in [0, pivot). Two
/// generating sets span the same lattice iff their forms are equal.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t cols);

/// Lattice basis of ker_Z(A) = {x in Z^cols : A x = 0}, by unimodular
/// column elimination of A.
IntMatrix integer_kernel_basis(const IntMatrix& a, std::size_t cols);

/// True when the rows span Z^cols.
bool spans_unit_lattice(const IntMatrix& rows, std::size_t cols);

}  // namespace mckay
