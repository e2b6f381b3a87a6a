#pragma once

#include "tgv/matrix.hpp"

// OpenMP-parallel numeric kernels. Every kernel computes each output element
// with a fixed sequential inner reduction, so results are bit-identical to
// the serial reference in tgv/serial.hpp for any thread count.

namespace tgv::kernels {

/// C = A * B^T.  A: n x k, B: m x k  ->  n x m.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

/// C = A * B.  A: n x k, B: k x m  ->  n x m.
Matrix matmul_nn(const Matrix& a, const Matrix& b);

/// C = A^T * B.  A: n x k, B: n x m  ->  k x m.
Matrix matmul_tn(const Matrix& a, const Matrix& b);

/// y = A * x.  A: r x d, x: d  ->  r.
Vector matvec(const Matrix& a, const Vector& x);

/// Pairwise Euclidean distances between rows. X: n x m -> n x n symmetric,
/// zero diagonal.
Matrix pairwise_distances(const Matrix& x);

/// Pairwise cosine similarity between rows. X: n x m -> n x n symmetric,
/// unit diagonal. Rows must have non-zero norm (caller checks).
Matrix cosine_similarity(const Matrix& x);

/// Column sums of A -> vector of length cols.
Vector col_sums(const Matrix& a);

}  // namespace tgv::kernels
