#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace seasoncast {

/// Dense row-major matrix of doubles. Vectors are 1 x n or n x 1 tensors.
struct Tensor {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Tensor() = default;
    Tensor(int r, int c, double fill = 0.0) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {}
    Tensor(int r, int c, std::vector<double> data) : rows(r), cols(c), v(std::move(data)) {
        assert(static_cast<std::size_t>(rows) * cols == v.size());
    }

    double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
    const double* row(int r) const { return v.data() + static_cast<std::size_t>(r) * cols; }
    double* row(int r) { return v.data() + static_cast<std::size_t>(r) * cols; }

    std::size_t size() const { return v.size(); }
    bool same_shape(const Tensor& o) const { return rows == o.rows && cols == o.cols; }
};

using Matrix = Tensor;

} // namespace seasoncast
