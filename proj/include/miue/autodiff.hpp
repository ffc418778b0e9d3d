#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "miue/tensor.hpp"

namespace miue {

// Reverse-mode autodiff over a recorded tape of tensor operations. Values
// are computed eagerly as nodes are appended; grad() runs one reverse sweep
// from a scalar root. The op set is exactly what the MLP losses need:
// matmul, broadcast add/div, relu, exp, log, sqrt, reductions.
//
// Leaves registered via leaf() own a gradient slot; constant() nodes do not
// participate in the backward pass (useful for data, masks, detached
// maxima). A leaf that does not influence the root reports a zero gradient
// of matching shape.
class Tape {
 public:
  using Var = std::int32_t;

  Var leaf(Tensor value);
  Var constant(Tensor value);

  // Elementwise on equal shapes.
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var mul(Var a, Var b);
  Var div(Var a, Var b);

  // Broadcasts over a rank-2 left operand.
  Var add_row(Var m, Var v);  // {r,c} + {c}, per-row bias add
  Var add_col(Var m, Var v);  // {r,c} + {r}, per-column
  Var div_col(Var m, Var v);  // {r,c} / {r}, row scaling

  Var matmul(Var a, Var b);     // {m,k} x {k,n}
  Var matmul_nt(Var a, Var b);  // {m,k} x {n,k}^T

  Var relu(Var a);  // derivative at 0 defined as 0
  Var exp(Var a);
  Var log(Var a);
  Var sqrt(Var a);  // derivative at 0 defined as 0

  Var scale(Var a, double c);
  Var add_scalar(Var a, double c);

  Var sum(Var a);   // -> {1}
  Var mean(Var a);  // -> {1}
  Var row_sum(Var a);  // {r,c} -> {r}

  // Detached per-row / global maxima: constants of the current values, no
  // gradient path. Used for stable softmax / log-sum-exp.
  Var row_max_detached(Var a);  // {r,c} -> {r}
  Var max_detached(Var a);      // -> {1}

  // Composite helpers.
  Var dot(Var a, Var b) { return sum(mul(a, b)); }
  Var l2_norm(Var a) { return sqrt(sum(mul(a, a))); }

  const Tensor& value(Var v) const { return nodes_[static_cast<std::size_t>(v)].value; }

  // d(root)/d(leaf) for each requested leaf; root must be scalar.
  std::vector<Tensor> grad(Var root, const std::vector<Var>& leaves);

  std::size_t size() const { return nodes_.size(); }

 private:
  enum class Op : std::uint8_t {
    kLeaf, kConst,
    kAdd, kSub, kMul, kDiv,
    kAddRow, kAddCol, kDivCol,
    kMatMul, kMatMulNT,
    kRelu, kExp, kLog, kSqrt,
    kScale, kAddScalar,
    kSum, kMean, kRowSum,
    kDetached,
  };

  struct Node {
    Op op;
    Var a = -1;
    Var b = -1;
    double c = 0.0;
    Tensor value;
  };

  Var push(Node n);
  const Tensor& val(Var v) const { return nodes_[static_cast<std::size_t>(v)].value; }
  void backward_node(std::size_t idx, std::vector<Tensor>& grads,
                     std::vector<bool>& needed);

  std::vector<Node> nodes_;
};

// Central-difference gradient oracle: (f(x + h e_i) - f(x - h e_i)) / 2h
// per coordinate. f must evaluate finite near x; the offending coordinate
// is named otherwise. Independent of the tape on purpose.
Tensor finite_diff_grad(const std::function<double(const Tensor&)>& f,
                        const Tensor& x, double h);

}  // namespace miue
