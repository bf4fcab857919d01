#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace stc {

// Dense row-major tensor of doubles. Rank 1 and 2 cover almost everything
// the model needs; rank 3 holds the CNN filter bank. Training runs in
// 64-bit floats throughout so finite-difference checks can be tight.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> s);
  Tensor(std::vector<std::size_t> s, std::vector<double> d);

  static Tensor vec(std::initializer_list<double> values);

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  std::size_t rows() const { return shape[0]; }
  std::size_t cols() const { return shape[1]; }

  double& operator()(std::size_t i) { return data[i]; }
  double operator()(std::size_t i) const { return data[i]; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * shape[1] + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * shape[1] + j]; }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }
};

enum class Activation { kSigmoid, kTanh, kRelu };

Tensor zeros(std::vector<std::size_t> shape);
Tensor zeros_like(const Tensor& t);
Tensor identity(std::size_t n);

/// Element-wise sigmoid / tanh / relu. Rejects non-finite input.
Tensor apply_activation(Activation kind, const Tensor& t);

/// w (k x n) * x (n) + b (k). Throws DimensionError naming the operands.
Tensor affine(const Tensor& w, const Tensor& x, const Tensor& b);

/// Max-subtracted softmax over a non-empty vector. Entries positive,
/// summing to 1.
Tensor softmax(const Tensor& v);

// y += x
void add_inplace(Tensor& y, const Tensor& x);
// y += alpha * x
void axpy(Tensor& y, double alpha, const Tensor& x);
// element-wise product
Tensor emul(const Tensor& a, const Tensor& b);
// w (k x n) * x (n)
Tensor matvec(const Tensor& w, const Tensor& x);
// w^T y for w (k x n), y (k): returns an n-vector
Tensor matvec_t(const Tensor& w, const Tensor& y);
// m += a * b^T  with m (|a| x |b|)
void add_outer(Tensor& m, const Tensor& a, const Tensor& b);

std::size_t argmax(const Tensor& v);

/// Throws NumericError naming `name` if any entry is NaN or infinite.
void check_finite(const Tensor& t, const std::string& name);

}  // namespace stc
