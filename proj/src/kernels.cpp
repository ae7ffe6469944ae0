#include "seasoncast/kernels.hpp"

#include "seasoncast/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seasoncast {

int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    static const int cap = [] {
        const char* env = std::getenv("SEASONCAST_THREADS");
        if (env == nullptr) return 0;
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end == env || value <= 0) return 0;
        return static_cast<int>(value);
    }();
    if (cap > 0 && cap < n) n = cap;
    return n;
}

namespace kernels {

namespace {

void check_mul(int ak, int bk, const char* what) {
    if (ak != bk) {
        throw DimensionMismatch(std::string(what) + ": inner dimensions " + std::to_string(ak) +
                                " vs " + std::to_string(bk));
    }
}

} // namespace

void matmul(const Tensor& a, const Tensor& b, Tensor& out, Exec exec) {
    check_mul(a.cols, b.rows, "matmul");
    out = Tensor(a.rows, b.cols);
    const int n = a.rows, k = a.cols, m = b.cols;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads()) if (exec == Exec::parallel)
#endif
    for (int i = 0; i < n; ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (int t = 0; t < k; ++t) {
            const double av = arow[t];
            const double* brow = b.row(t);
            for (int j = 0; j < m; ++j) orow[j] += av * brow[j];
        }
    }
    (void)exec;
}

void matmul_acc(const Tensor& a, const Tensor& b, Tensor& out, Exec exec) {
    Tensor tmp;
    matmul(a, b, tmp, exec);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += tmp.v[i];
}

void matmul_at_b(const Tensor& a, const Tensor& b, Tensor& out, Exec exec) {
    check_mul(a.rows, b.rows, "matmul_at_b");
    out = Tensor(a.cols, b.cols);
    const int n = a.rows, k = a.cols, m = b.cols;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads()) if (exec == Exec::parallel)
#endif
    for (int i = 0; i < k; ++i) {
        double* orow = out.row(i);
        for (int t = 0; t < n; ++t) {
            const double av = a.at(t, i);
            const double* brow = b.row(t);
            for (int j = 0; j < m; ++j) orow[j] += av * brow[j];
        }
    }
    (void)exec;
}

void matmul_at_b_acc(const Tensor& a, const Tensor& b, Tensor& out, Exec exec) {
    Tensor tmp;
    matmul_at_b(a, b, tmp, exec);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += tmp.v[i];
}

void matmul_a_bt(const Tensor& a, const Tensor& b, Tensor& out, Exec exec) {
    check_mul(a.cols, b.cols, "matmul_a_bt");
    out = Tensor(a.rows, b.rows);
    const int n = a.rows, k = a.cols, m = b.rows;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads()) if (exec == Exec::parallel)
#endif
    for (int i = 0; i < n; ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (int j = 0; j < m; ++j) {
            const double* brow = b.row(j);
            double acc = 0.0;
            for (int t = 0; t < k; ++t) acc += arow[t] * brow[t];
            orow[j] = acc;
        }
    }
    (void)exec;
}

void matmul_a_bt_acc(const Tensor& a, const Tensor& b, Tensor& out, Exec exec) {
    Tensor tmp;
    matmul_a_bt(a, b, tmp, exec);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += tmp.v[i];
}

void relu(const Tensor& a, Tensor& out) {
    out = Tensor(a.rows, a.cols);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i] > 0.0 ? a.v[i] : 0.0;
}

void tanh_map(const Tensor& a, Tensor& out) {
    out = Tensor(a.rows, a.cols);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = std::tanh(a.v[i]);
}

void sigmoid_map(const Tensor& a, Tensor& out) {
    out = Tensor(a.rows, a.cols);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = 1.0 / (1.0 + std::exp(-a.v[i]));
}

void add_rowvec(const Tensor& a, const Tensor& bias, Tensor& out) {
    if (bias.rows != 1 || bias.cols != a.cols) {
        throw DimensionMismatch("add_rowvec: bias shape");
    }
    out = Tensor(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (int j = 0; j < a.cols; ++j) orow[j] = arow[j] + bias.v[j];
    }
}

} // namespace kernels
} // namespace seasoncast
