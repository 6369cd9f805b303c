// Copyright (c) the ViT-LSLA authors.
//
// This source code is licensed under the Apache License, Version 2.0
// found in the LICENSE file in the root directory of this source tree.

#include "core/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace lsla {

int64_t shape_numel(const std::vector<int64_t>& shape) {
  int64_t n = 1;
  for (int64_t d : shape) {
    if (d < 1) throw ShapeError("shape entries must be >= 1, got " + shape_str(shape));
    n *= d;
  }
  return n;
}

std::string shape_str(const std::vector<int64_t>& shape) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ",";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

namespace detail {

void TensorNode::ensure_grad() {
  if (grad.empty()) grad.assign(data.size(), 0.0);
}

}  // namespace detail

Tensor Tensor::zeros(std::vector<int64_t> shape, bool requires_grad) {
  auto node = std::make_shared<detail::TensorNode>();
  node->data.assign(static_cast<size_t>(shape_numel(shape)), 0.0);
  node->shape = std::move(shape);
  node->requires_grad = requires_grad;
  return Tensor(std::move(node));
}

Tensor Tensor::full(std::vector<int64_t> shape, double value, bool requires_grad) {
  Tensor t = zeros(std::move(shape), requires_grad);
  std::fill(t.node_->data.begin(), t.node_->data.end(), value);
  return t;
}

Tensor Tensor::from_data(std::vector<int64_t> shape, std::vector<double> data,
                         bool requires_grad) {
  if (shape_numel(shape) != static_cast<int64_t>(data.size())) {
    throw ShapeError("data length " + std::to_string(data.size()) +
                     " does not match shape " + shape_str(shape));
  }
  auto node = std::make_shared<detail::TensorNode>();
  node->shape = std::move(shape);
  node->data = std::move(data);
  node->requires_grad = requires_grad;
  return Tensor(std::move(node));
}

Tensor Tensor::scalar(double value) { return from_data({1}, {value}); }

const std::vector<int64_t>& Tensor::shape() const { return node_->shape; }

int Tensor::rank() const { return static_cast<int>(node_->shape.size()); }

int64_t Tensor::dim(int axis) const {
  int r = rank();
  if (axis < 0) axis += r;
  if (axis < 0 || axis >= r) throw ShapeError("axis out of range for " + shape_str(shape()));
  return node_->shape[axis];
}

int64_t Tensor::numel() const { return node_->numel(); }

double* Tensor::data() { return node_->data.data(); }
const double* Tensor::data() const { return node_->data.data(); }

double Tensor::item() const {
  if (numel() != 1) throw ShapeError("item() requires a scalar, got " + shape_str(shape()));
  return node_->data[0];
}

bool Tensor::requires_grad() const { return node_->requires_grad; }
void Tensor::set_requires_grad(bool v) { node_->requires_grad = v; }

double* Tensor::grad() { return node_->grad.empty() ? nullptr : node_->grad.data(); }
const double* Tensor::grad() const {
  return node_->grad.empty() ? nullptr : node_->grad.data();
}

void Tensor::ensure_grad() { node_->ensure_grad(); }

void Tensor::zero_grad() {
  if (!node_->grad.empty()) std::fill(node_->grad.begin(), node_->grad.end(), 0.0);
}

void Tensor::backward() {
  if (!defined()) throw NumericError("backward() on undefined tensor");
  if (numel() != 1) throw NumericError("backward() requires a scalar root");

  // Iterative post-order DFS; traversal order is structural, hence
  // deterministic, which keeps gradient accumulation bit-reproducible.
  std::vector<detail::TensorNode*> topo;
  std::vector<std::pair<detail::TensorNode*, size_t>> stack;
  std::vector<detail::TensorNode*> seen;
  auto visited = [&seen](detail::TensorNode* n) {
    return std::find(seen.begin(), seen.end(), n) != seen.end();
  };
  // A sorted membership structure keyed by pointer would be faster but
  // pointer order is nondeterministic; linear scan is fine for graphs of
  // a few thousand nodes per step.
  stack.emplace_back(node_.get(), 0);
  seen.push_back(node_.get());
  while (!stack.empty()) {
    auto& [n, next] = stack.back();
    if (next < n->parents.size()) {
      detail::TensorNode* p = n->parents[next++].get();
      if (!visited(p)) {
        seen.push_back(p);
        stack.emplace_back(p, 0);
      }
    } else {
      topo.push_back(n);
      stack.pop_back();
    }
  }

  node_->ensure_grad();
  node_->grad[0] += 1.0;
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    detail::TensorNode* n = *it;
    if (n->backward_fn && !n->grad.empty()) n->backward_fn(*n);
  }
}

Tensor make_node(std::vector<int64_t> shape, std::vector<double> data,
                 const std::vector<Tensor>& parents,
                 std::function<void(detail::TensorNode&)> backward_fn) {
  Tensor out = Tensor::from_data(std::move(shape), std::move(data));
  bool needs_grad = false;
  for (const Tensor& p : parents) needs_grad = needs_grad || p.requires_grad();
  if (needs_grad) {
    out.node_->requires_grad = true;
    out.node_->parents.reserve(parents.size());
    for (const Tensor& p : parents) out.node_->parents.push_back(p.node());
    out.node_->backward_fn = std::move(backward_fn);
  }
  return out;
}

}  // namespace lsla
