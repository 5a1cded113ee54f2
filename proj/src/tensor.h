#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "common.h"

namespace mdlab {

// Dense row-major tensor. float for training/sampling, double for the
// verification build of the same graph.
template <typename T>
struct Tensor {
  std::vector<int64_t> shape;
  std::vector<T> data;

  Tensor() = default;

  static Tensor zeros(std::vector<int64_t> s) {
    Tensor t;
    t.shape = std::move(s);
    t.data.assign(t.numel_of(t.shape), T(0));
    return t;
  }

  static Tensor full(std::vector<int64_t> s, T v) {
    Tensor t = zeros(std::move(s));
    std::fill(t.data.begin(), t.data.end(), v);
    return t;
  }

  static Tensor from(std::vector<int64_t> s, std::vector<T> d) {
    Tensor t;
    t.shape = std::move(s);
    t.data = std::move(d);
    require(t.data.size() == static_cast<size_t>(t.numel_of(t.shape)),
            ErrorCode::invalid_argument,
            "tensor data length does not match shape");
    return t;
  }

  int64_t numel() const { return numel_of(shape); }

  static int64_t numel_of(const std::vector<int64_t>& s) {
    int64_t n = 1;
    for (int64_t d : s) {
      require(d > 0, ErrorCode::invalid_argument, "non-positive dimension");
      n *= d;
    }
    return n;
  }

  int64_t rows() const { return shape.size() == 2 ? shape[0] : numel(); }
  int64_t cols() const { return shape.size() == 2 ? shape[1] : 1; }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  T& at(int64_t r, int64_t c) { return data[r * shape[1] + c]; }
  T at(int64_t r, int64_t c) const { return data[r * shape[1] + c]; }

  void zero() { std::fill(data.begin(), data.end(), T(0)); }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.shape = shape;
    out.data.resize(data.size());
    for (size_t i = 0; i < data.size(); ++i)
      out.data[i] = static_cast<U>(data[i]);
    return out;
  }
};

std::string shape_str(const std::vector<int64_t>& s);

// Worker threads used inside row-parallel kernels. Results are bit-identical
// for any thread count: every output element is a fixed reduction chain.
void set_kernel_threads(int n);
int kernel_threads();

namespace kernels {

// C[M,N] (+)= A[M,K] * B[K,N]
template <typename T>
void matmul_nn(const T* a, const T* b, T* c, int64_t m, int64_t n, int64_t k,
               bool accumulate);

// C[M,N] (+)= A[M,K] * B[N,K]^T
template <typename T>
void matmul_nt(const T* a, const T* b, T* c, int64_t m, int64_t n, int64_t k,
               bool accumulate);

// C[K,N] (+)= A[M,K]^T * B[M,N]
template <typename T>
void matmul_tn(const T* a, const T* b, T* c, int64_t m, int64_t n, int64_t k,
               bool accumulate);

// rows x cols, numerically stabilized by row-max subtraction
template <typename T>
void softmax_rows(const T* x, T* y, int64_t rows, int64_t cols);

// per-row: y = log softmax(x); also writes logsumexp per row when lse != null
template <typename T>
void log_softmax_rows(const T* x, T* y, int64_t rows, int64_t cols,
                      T* lse = nullptr);

// backward of y = softmax(x) given dy: dx = (dy - sum(dy*y)) * y
template <typename T>
void softmax_rows_backward(const T* y, const T* dy, T* dx, int64_t rows,
                           int64_t cols);

// y = (x - mean) / sqrt(var + eps) * gamma + beta, per row; caches rstd/mean
template <typename T>
void layernorm(const T* x, const T* gamma, const T* beta, T* y, T* mean,
               T* rstd, int64_t rows, int64_t cols, T eps);

template <typename T>
void layernorm_backward(const T* x, const T* gamma, const T* mean,
                        const T* rstd, const T* dy, T* dx, T* dgamma,
                        T* dbeta, int64_t rows, int64_t cols);

template <typename T>
void gelu(const T* x, T* y, int64_t n_rows, int64_t cols);

template <typename T>
void gelu_backward(const T* x, const T* dy, T* dx, int64_t n_rows,
                   int64_t cols);

// exp with float fast path (polynomial, vectorizes deterministically)
float fast_exp(float x);
double fast_exp(double x);

}  // namespace kernels

// Tensor-level helpers over the kernels (shape-checked).
template <typename T>
Tensor<T> matmul(const Tensor<T>& a, const Tensor<T>& b);

template <typename T>
Tensor<T> softmax_rows(const Tensor<T>& x);

}  // namespace mdlab
