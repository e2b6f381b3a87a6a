#pragma once

#include "tgv/matrix.hpp"

#include <cstddef>
#include <vector>

// Serial reference implementations: plain double loops, no OpenMP, written
// independently of the kernels. The test suites compare the parallel kernels
// against these, and the benchmark times both.

namespace tgv::serial {

Matrix matmul_nt(const Matrix& a, const Matrix& b);
Matrix matmul_nn(const Matrix& a, const Matrix& b);
Matrix matmul_tn(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);
Matrix pairwise_distances(const Matrix& x);
Matrix cosine_similarity(const Matrix& x);
Vector col_sums(const Matrix& a);

/// Full-sort top-k by descending value, ties broken by ascending index.
std::vector<std::size_t> topk_by_value(const Vector& values, std::size_t k);

}  // namespace tgv::serial
