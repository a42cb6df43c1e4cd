#ifndef PYBX_LINALG_HPP
#define PYBX_LINALG_HPP

#include "pybx/tensor.hpp"

namespace pybx {

/// Exact rank via fraction-free Bareiss elimination on an integerized copy.
std::size_t rank(const Matrix& m);

/// Exact inverse; throws Error(SingularMatrix) when det = 0 and
/// Error(DimMismatch) for non-square input.
Matrix matrix_inverse(const Matrix& m);

/// Solves M x = b for square nonsingular M.
Vec solve(const Matrix& m, const Vec& b);

Scalar determinant(const Matrix& m);

}  // namespace pybx

#endif
