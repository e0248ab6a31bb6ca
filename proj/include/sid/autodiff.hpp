// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "sid/tensor.hpp"

namespace sid {

// Reverse-mode autodiff over Tensor. Each op allocates a Node holding the
// eagerly computed value plus a closure that scatters the node's gradient
// into its parents. There is no global tape: backward() walks the graph in
// reverse topological order starting from a scalar root, so independent
// forward passes (e.g. the frozen source model) never share state.
struct Node;
using Var = std::shared_ptr<Node>;

struct Node {
  Tensor value;
  Tensor grad;  // allocated lazily; same shape as value
  bool requires_grad = false;
  std::vector<Var> parents;
  std::function<void(Node&)> backward_fn;  // nullptr for leaves

  Tensor& ensure_grad() {
    if (grad.numel() != value.numel()) grad = Tensor::zeros(value.shape());
    return grad;
  }
  void zero_grad() {
    if (grad.numel()) grad.fill(0.0);
  }
};

inline Var make_leaf(Tensor value, bool requires_grad = false) {
  auto n = std::make_shared<Node>();
  n->value = std::move(value);
  n->requires_grad = requires_grad;
  return n;
}

inline Var make_op(Tensor value, std::vector<Var> parents,
                   std::function<void(Node&)> backward_fn) {
  auto n = std::make_shared<Node>();
  n->value = std::move(value);
  n->parents = std::move(parents);
  for (const auto& p : n->parents) {
    if (p && p->requires_grad) {
      n->requires_grad = true;
      break;
    }
  }
  if (n->requires_grad) n->backward_fn = std::move(backward_fn);
  return n;
}

// Backpropagates from a scalar root (seeds d(root)/d(root) = 1).
void backward(const Var& root);

}  // namespace sid
