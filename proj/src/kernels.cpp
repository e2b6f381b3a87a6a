#include "tgv/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace tgv::kernels {

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  const std::int64_t n = static_cast<std::int64_t>(a.rows());
  const std::size_t k = a.cols();
  const std::size_t m = b.rows();
  Matrix c(a.rows(), m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* ai = a.row(static_cast<std::size_t>(i));
    double* ci = c.row(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < m; ++j) {
      const double* bj = b.row(j);
      double acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += ai[l] * bj[l];
      ci[j] = acc;
    }
  }
  return c;
}

Matrix matmul_nn(const Matrix& a, const Matrix& b) {
  const std::int64_t n = static_cast<std::int64_t>(a.rows());
  const std::size_t k = a.cols();
  const std::size_t m = b.cols();
  Matrix c(a.rows(), m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* ai = a.row(static_cast<std::size_t>(i));
    double* ci = c.row(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < k; ++l) acc += ai[l] * b(l, j);
      ci[j] = acc;
    }
  }
  return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  const std::int64_t k = static_cast<std::int64_t>(a.cols());
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  Matrix c(a.cols(), m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < k; ++i) {
    double* ci = c.row(static_cast<std::size_t>(i));
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < n; ++l) acc += a(l, static_cast<std::size_t>(i)) * b(l, j);
      ci[j] = acc;
    }
  }
  return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
  const std::int64_t r = static_cast<std::int64_t>(a.rows());
  const std::size_t d = a.cols();
  Vector y(a.rows(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < r; ++i) {
    const double* ai = a.row(static_cast<std::size_t>(i));
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += ai[j] * x[j];
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

Matrix pairwise_distances(const Matrix& x) {
  const std::int64_t n = static_cast<std::int64_t>(x.rows());
  const std::size_t m = x.cols();
  Matrix d(x.rows(), x.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    const double* xi = x.row(ui);
    for (std::size_t j = ui + 1; j < x.rows(); ++j) {
      const double* xj = x.row(j);
      double acc = 0.0;
      for (std::size_t l = 0; l < m; ++l) {
        const double diff = xi[l] - xj[l];
        acc += diff * diff;
      }
      const double dist = std::sqrt(acc);
      d(ui, j) = dist;
      d(j, ui) = dist;
    }
  }
  return d;
}

Matrix cosine_similarity(const Matrix& x) {
  const std::int64_t n = static_cast<std::int64_t>(x.rows());
  const std::size_t m = x.cols();
  Vector norms(x.rows(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* xi = x.row(static_cast<std::size_t>(i));
    double acc = 0.0;
    for (std::size_t l = 0; l < m; ++l) acc += xi[l] * xi[l];
    norms[static_cast<std::size_t>(i)] = std::sqrt(acc);
  }
  Matrix s(x.rows(), x.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    const double* xi = x.row(ui);
    s(ui, ui) = 1.0;
    for (std::size_t j = ui + 1; j < x.rows(); ++j) {
      const double* xj = x.row(j);
      double acc = 0.0;
      for (std::size_t l = 0; l < m; ++l) acc += xi[l] * xj[l];
      const double sim = acc / (norms[ui] * norms[j]);
      s(ui, j) = sim;
      s(j, ui) = sim;
    }
  }
  return s;
}

Vector col_sums(const Matrix& a) {
  const std::int64_t m = static_cast<std::int64_t>(a.cols());
  Vector s(a.cols(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < m; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, static_cast<std::size_t>(j));
    s[static_cast<std::size_t>(j)] = acc;
  }
  return s;
}

}  // namespace tgv::kernels
