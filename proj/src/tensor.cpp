#include "stc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "stc/errors.hpp"

namespace stc {

namespace {

std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> s)
    : shape(std::move(s)), data(shape_product(shape), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> s, std::vector<double> d)
    : shape(std::move(s)), data(std::move(d)) {
  if (shape_product(shape) != data.size())
    throw DimensionError("Tensor: shape does not match data length");
}

Tensor Tensor::vec(std::initializer_list<double> values) {
  return Tensor({values.size()}, std::vector<double>(values));
}

Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }

Tensor zeros_like(const Tensor& t) { return Tensor(t.shape); }

Tensor identity(std::size_t n) {
  Tensor m({n, n});
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Tensor apply_activation(Activation kind, const Tensor& t) {
  check_finite(t, "activation input");
  Tensor out(t.shape);
  switch (kind) {
    case Activation::kSigmoid:
      for (std::size_t i = 0; i < t.size(); ++i) out.data[i] = 1.0 / (1.0 + std::exp(-t.data[i]));
      break;
    case Activation::kTanh:
      for (std::size_t i = 0; i < t.size(); ++i) out.data[i] = std::tanh(t.data[i]);
      break;
    case Activation::kRelu:
      for (std::size_t i = 0; i < t.size(); ++i) out.data[i] = t.data[i] > 0.0 ? t.data[i] : 0.0;
      break;
  }
  return out;
}

Tensor affine(const Tensor& w, const Tensor& x, const Tensor& b) {
  if (w.rank() != 2 || x.rank() != 1 || b.rank() != 1)
    throw DimensionError("affine: expected matrix w, vector x, vector b");
  if (w.cols() != x.size() || w.rows() != b.size())
    throw DimensionError("affine: w is " + std::to_string(w.rows()) + "x" +
                         std::to_string(w.cols()) + ", x has " + std::to_string(x.size()) +
                         " entries, b has " + std::to_string(b.size()));
  Tensor out = b;
  const std::size_t k = w.rows(), n = w.cols();
  for (std::size_t i = 0; i < k; ++i) {
    const double* row = &w.data[i * n];
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x.data[j];
    out.data[i] += acc;
  }
  return out;
}

Tensor softmax(const Tensor& v) {
  if (v.rank() != 1 || v.size() == 0) throw DimensionError("softmax: needs a non-empty vector");
  check_finite(v, "softmax input");
  const double peak = *std::max_element(v.data.begin(), v.data.end());
  Tensor out(v.shape);
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.data[i] = std::exp(v.data[i] - peak);
    total += out.data[i];
  }
  for (double& e : out.data) e /= total;
  return out;
}

void add_inplace(Tensor& y, const Tensor& x) {
  if (!y.same_shape(x)) throw DimensionError("add_inplace: shape mismatch");
  for (std::size_t i = 0; i < y.size(); ++i) y.data[i] += x.data[i];
}

void axpy(Tensor& y, double alpha, const Tensor& x) {
  if (!y.same_shape(x)) throw DimensionError("axpy: shape mismatch");
  for (std::size_t i = 0; i < y.size(); ++i) y.data[i] += alpha * x.data[i];
}

Tensor emul(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) throw DimensionError("emul: shape mismatch");
  Tensor out(a.shape);
  for (std::size_t i = 0; i < a.size(); ++i) out.data[i] = a.data[i] * b.data[i];
  return out;
}

Tensor matvec(const Tensor& w, const Tensor& x) {
  if (w.rank() != 2 || x.rank() != 1 || w.cols() != x.size())
    throw DimensionError("matvec: w is " + std::to_string(w.shape.empty() ? 0 : w.rows()) + "x" +
                         std::to_string(w.rank() == 2 ? w.cols() : 0) + ", x has " +
                         std::to_string(x.size()) + " entries");
  Tensor out({w.rows()});
  const std::size_t k = w.rows(), n = w.cols();
  for (std::size_t i = 0; i < k; ++i) {
    const double* row = &w.data[i * n];
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x.data[j];
    out.data[i] = acc;
  }
  return out;
}

Tensor matvec_t(const Tensor& w, const Tensor& y) {
  if (w.rank() != 2 || y.rank() != 1 || w.rows() != y.size())
    throw DimensionError("matvec_t: w is " + std::to_string(w.shape.empty() ? 0 : w.rows()) +
                         "x" + std::to_string(w.rank() == 2 ? w.cols() : 0) + ", y has " +
                         std::to_string(y.size()) + " entries");
  Tensor out({w.cols()});
  const std::size_t k = w.rows(), n = w.cols();
  for (std::size_t i = 0; i < k; ++i) {
    const double* row = &w.data[i * n];
    const double yi = y.data[i];
    for (std::size_t j = 0; j < n; ++j) out.data[j] += row[j] * yi;
  }
  return out;
}

void add_outer(Tensor& m, const Tensor& a, const Tensor& b) {
  if (m.rank() != 2 || m.rows() != a.size() || m.cols() != b.size())
    throw DimensionError("add_outer: shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    double* row = &m.data[i * b.size()];
    const double ai = a.data[i];
    for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b.data[j];
  }
}

std::size_t argmax(const Tensor& v) {
  if (v.size() == 0) throw DimensionError("argmax: empty vector");
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v.data[i] > v.data[best]) best = i;
  return best;
}

void check_finite(const Tensor& t, const std::string& name) {
  for (double e : t.data)
    if (!std::isfinite(e)) throw NumericError("non-finite value in " + name);
}

}  // namespace stc
