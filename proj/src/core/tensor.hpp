// Copyright (c) the ViT-LSLA authors.
//
// This source code is licensed under the Apache License, Version 2.0
// found in the LICENSE file in the root directory of this source tree.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsla {

class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

int64_t shape_numel(const std::vector<int64_t>& shape);
std::string shape_str(const std::vector<int64_t>& shape);

class Tensor;

namespace detail {

struct TensorNode {
  std::vector<int64_t> shape;
  std::vector<double> data;
  std::vector<double> grad;  // empty until first accumulation
  bool requires_grad = false;
  std::vector<std::shared_ptr<TensorNode>> parents;
  std::function<void(TensorNode&)> backward_fn;  // scatters this->grad into parents

  int64_t numel() const { return static_cast<int64_t>(data.size()); }
  void ensure_grad();
};

}  // namespace detail

/// Dense row-major float64 tensor with reverse-mode differentiation.
/// Copies are shallow (shared storage). Ops record a graph; backward()
/// walks it once, accumulating into the .grad buffers of requires_grad
/// leaves. Gradients add across uses; the caller zeroes between steps.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(std::vector<int64_t> shape, bool requires_grad = false);
  static Tensor full(std::vector<int64_t> shape, double value, bool requires_grad = false);
  static Tensor from_data(std::vector<int64_t> shape, std::vector<double> data,
                          bool requires_grad = false);
  static Tensor scalar(double value);

  bool defined() const { return node_ != nullptr; }
  const std::vector<int64_t>& shape() const;
  int rank() const;
  int64_t dim(int axis) const;  // supports negative indexing
  int64_t numel() const;

  double* data();
  const double* data() const;
  double item() const;  // scalar tensors only

  bool requires_grad() const;
  void set_requires_grad(bool v);
  double* grad();
  const double* grad() const;
  void ensure_grad();
  void zero_grad();

  /// Reverse-mode sweep from a scalar root (seeds d(root)/d(root) = 1).
  void backward();

  std::shared_ptr<detail::TensorNode> node() const { return node_; }

 private:
  explicit Tensor(std::shared_ptr<detail::TensorNode> node) : node_(std::move(node)) {}
  std::shared_ptr<detail::TensorNode> node_;

  friend Tensor make_node(std::vector<int64_t>, std::vector<double>,
                          const std::vector<Tensor>&,
                          std::function<void(detail::TensorNode&)>);
};

/// Op-construction helper: wraps forward results in a graph node. The
/// backward_fn is dropped when no parent carries requires_grad.
Tensor make_node(std::vector<int64_t> shape, std::vector<double> data,
                 const std::vector<Tensor>& parents,
                 std::function<void(detail::TensorNode&)> backward_fn);

}  // namespace lsla
