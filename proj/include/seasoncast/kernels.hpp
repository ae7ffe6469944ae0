#pragma once

#include "seasoncast/parallel.hpp"
#include "seasoncast/tensor.hpp"

namespace seasoncast::kernels {

// Matrix products. Each output element is an independent dot product
// accumulated in fixed index order, so the parallel path is bitwise equal
// to the serial one regardless of scheduling.

/// out = a * b
void matmul(const Tensor& a, const Tensor& b, Tensor& out, Exec exec = Exec::parallel);
/// out = a^T * b
void matmul_at_b(const Tensor& a, const Tensor& b, Tensor& out, Exec exec = Exec::parallel);
/// out = a * b^T
void matmul_a_bt(const Tensor& a, const Tensor& b, Tensor& out, Exec exec = Exec::parallel);

/// out += a * b (accumulating variants used by the backward pass)
void matmul_acc(const Tensor& a, const Tensor& b, Tensor& out, Exec exec = Exec::parallel);
void matmul_at_b_acc(const Tensor& a, const Tensor& b, Tensor& out, Exec exec = Exec::parallel);
void matmul_a_bt_acc(const Tensor& a, const Tensor& b, Tensor& out, Exec exec = Exec::parallel);

// Elementwise maps (cheap; always serial).
void relu(const Tensor& a, Tensor& out);
void tanh_map(const Tensor& a, Tensor& out);
void sigmoid_map(const Tensor& a, Tensor& out);

/// out(r, c) = a(r, c) + bias(0, c)
void add_rowvec(const Tensor& a, const Tensor& bias, Tensor& out);

} // namespace seasoncast::kernels
