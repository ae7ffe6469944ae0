#pragma once

#include "seasoncast/kernels.hpp"
#include "seasoncast/tensor.hpp"

#include <functional>
#include <vector>

namespace seasoncast {

/// Minimal reverse-mode differentiation tape over dense tensors.
///
/// Operations append nodes in creation order (which is therefore already
/// topological); backward() walks the nodes in reverse, accumulating
/// gradients through each node's stored closure. Gradients are only
/// materialized for nodes reachable from a flagged input, and every partial
/// derivative matches central finite differences within 1e-4 relative.
class Tape {
public:
    using Ref = int;

    explicit Tape(Exec exec = Exec::parallel) : exec_(exec) {}

    /// Registers a leaf tensor. Gradients flow into it only when
    /// `needs_grad` is set.
    Ref input(Tensor value, bool needs_grad = false);

    Ref matmul(Ref a, Ref b);
    Ref add(Ref a, Ref b);          // elementwise, same shape
    Ref sub(Ref a, Ref b);          // elementwise, same shape
    Ref mul(Ref a, Ref b);          // Hadamard product, same shape
    Ref affine(Ref a, double alpha, double beta); // alpha * a + beta, elementwise
    Ref add_rowvec(Ref a, Ref bias);              // bias is 1 x cols, broadcast over rows
    Ref relu(Ref a);
    Ref tanh_op(Ref a);
    Ref sigmoid(Ref a);
    /// Output column j is input column cols[j] (duplicates allowed).
    Ref gather_cols(Ref a, std::vector<int> cols);
    /// Horizontal concatenation; all parts share the row count.
    Ref concat_cols(const std::vector<Ref>& parts);
    /// Scalar mean of squared residuals against a constant target (n x 1).
    Ref mse_loss(Ref pred, const Tensor& target);
    /// Scalar mean over all entries.
    Ref mean_all(Ref a);

    /// Reverse pass from a scalar loss node. Throws NonScalarLoss otherwise.
    void backward(Ref loss);

    const Tensor& value(Ref id) const { return nodes_[id].val; }
    /// Gradient of the last backward()'s loss w.r.t. node `id` (empty tensor
    /// when the node does not require grad).
    const Tensor& grad(Ref id) const { return nodes_[id].grad; }
    bool needs_grad(Ref id) const { return nodes_[id].needs_grad; }
    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        Tensor val;
        Tensor grad;
        bool needs_grad = false;
        std::function<void(Tape&, const Node&)> back; // empty for leaves
    };

    Ref push(Tensor val, bool needs_grad, std::function<void(Tape&, const Node&)> back);
    void accumulate(Ref id, const Tensor& g);
    /// Adds `g` scaled into parent gradient storage (no-op when the parent
    /// does not require grad).
    Tensor& grad_slot(Ref id) { return nodes_[id].grad; }

    std::vector<Node> nodes_;
    Exec exec_;
};

} // namespace seasoncast
