#include "tgv/serial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tgv::serial {

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc += a(i, l) * b(j, l);
      c(i, j) = acc;
    }
  return c;
}

Matrix matmul_nn(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, j);
      c(i, j) = acc;
    }
  return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  Matrix c(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < a.rows(); ++l) acc += a(l, i) * b(l, j);
      c(i, j) = acc;
    }
  return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Matrix pairwise_distances(const Matrix& x) {
  Matrix d(x.rows(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.rows(); ++j) {
      double acc = 0.0;
      for (std::size_t l = 0; l < x.cols(); ++l) {
        const double diff = x(i, l) - x(j, l);
        acc += diff * diff;
      }
      d(i, j) = std::sqrt(acc);
    }
  return d;
}

Matrix cosine_similarity(const Matrix& x) {
  Matrix s(x.rows(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.rows(); ++j) {
      if (i == j) {
        s(i, j) = 1.0;
        continue;
      }
      double dot = 0.0, ni = 0.0, nj = 0.0;
      for (std::size_t l = 0; l < x.cols(); ++l) {
        dot += x(i, l) * x(j, l);
        ni += x(i, l) * x(i, l);
        nj += x(j, l) * x(j, l);
      }
      s(i, j) = dot / (std::sqrt(ni) * std::sqrt(nj));
    }
  }
  return s;
}

Vector col_sums(const Matrix& a) {
  Vector s(a.cols(), 0.0);
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) s[j] += a(i, j);
  return s;
}

std::vector<std::size_t> topk_by_value(const Vector& values, std::size_t k) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });
  order.resize(std::min(k, order.size()));
  return order;
}

}  // namespace tgv::serial
