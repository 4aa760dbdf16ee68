#include "occ/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace occ::kernels {

// The serial and OpenMP variants share the per-element code through these
// inline helpers; the omp lane only adds a `parallel for` over outputs.

namespace {

inline double dot(const double* a, const double* b, std::size_t k) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += a[i] * b[i];
    return s;
}

inline void softmax_row(double* row, std::size_t k) {
    double mx = row[0];
    for (std::size_t j = 1; j < k; ++j) mx = std::max(mx, row[j]);
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        row[j] = std::exp(row[j] - mx);
        sum += row[j];
    }
    for (std::size_t j = 0; j < k; ++j) row[j] /= sum;
}

inline void normalize_row(const double* x, std::size_t k, double* out,
                          double* norm) {
    double s = 0.0;
    for (std::size_t j = 0; j < k; ++j) s += x[j] * x[j];
    const double n = std::sqrt(s);
    *norm = n;
    if (n == 0.0) {
        for (std::size_t j = 0; j < k; ++j) out[j] = x[j];
    } else {
        for (std::size_t j = 0; j < k; ++j) out[j] = x[j] / n;
    }
}

inline void sign_row(const double* g, std::size_t stride, double eps,
                     double* delta, bool masked) {
    if (!masked) {
        for (std::size_t j = 0; j < stride; ++j) delta[j] = 0.0;
        return;
    }
    for (std::size_t j = 0; j < stride; ++j) {
        delta[j] = g[j] > 0.0 ? eps : (g[j] < 0.0 ? -eps : 0.0);
    }
}

// Pool blocks: [floor(gy*h/grid), floor((gy+1)*h/grid)) per axis.
inline void pool_one(const double* plane, std::size_t h, std::size_t w,
                     std::size_t grid, double* out) {
    for (std::size_t gy = 0; gy < grid; ++gy) {
        const std::size_t y0 = gy * h / grid, y1 = (gy + 1) * h / grid;
        for (std::size_t gx = 0; gx < grid; ++gx) {
            const std::size_t x0 = gx * w / grid, x1 = (gx + 1) * w / grid;
            double s = 0.0;
            for (std::size_t y = y0; y < y1; ++y)
                for (std::size_t x = x0; x < x1; ++x) s += plane[y * w + x];
            out[gy * grid + gx] = s / static_cast<double>((y1 - y0) * (x1 - x0));
        }
    }
}

inline void unpool_one(const double* dfeat, std::size_t h, std::size_t w,
                       std::size_t grid, double* dplane) {
    for (std::size_t gy = 0; gy < grid; ++gy) {
        const std::size_t y0 = gy * h / grid, y1 = (gy + 1) * h / grid;
        for (std::size_t gx = 0; gx < grid; ++gx) {
            const std::size_t x0 = gx * w / grid, x1 = (gx + 1) * w / grid;
            const double g =
                dfeat[gy * grid + gx] / static_cast<double>((y1 - y0) * (x1 - x0));
            for (std::size_t y = y0; y < y1; ++y)
                for (std::size_t x = x0; x < x1; ++x) dplane[y * w + x] = g;
        }
    }
}

inline std::size_t clamp_idx(std::ptrdiff_t i, std::size_t n) {
    if (i < 0) return 0;
    if (i >= static_cast<std::ptrdiff_t>(n)) return n - 1;
    return static_cast<std::size_t>(i);
}

// 25-tap blur per output pixel, taps in fixed order.
inline double blur_at(const double* plane, std::size_t h, std::size_t w,
                      std::size_t y, std::size_t x, const double w5[5]) {
    double s = 0.0;
    for (int dy = -2; dy <= 2; ++dy) {
        const std::size_t yy = clamp_idx(static_cast<std::ptrdiff_t>(y) + dy, h);
        for (int dx = -2; dx <= 2; ++dx) {
            const std::size_t xx = clamp_idx(static_cast<std::ptrdiff_t>(x) + dx, w);
            s += w5[dy + 2] * w5[dx + 2] * plane[yy * w + xx];
        }
    }
    return s;
}

}  // namespace

// ------------------------------ serial lane ------------------------------

namespace serial {

void gemm_nt(const double* a, std::size_t n, std::size_t k, const double* b,
             std::size_t m, double* out) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out[i * m + j] = dot(a + i * k, b + j * k, k);
}

void gemm_nn(const double* a, std::size_t n, std::size_t k, const double* b,
             std::size_t m, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < k; ++l) s += a[i * k + l] * b[l * m + j];
            out[i * m + j] = s;
        }
    }
}

void gemm_tn(const double* a, std::size_t k, std::size_t n, const double* b,
             std::size_t m, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < k; ++l) s += a[l * n + i] * b[l * m + j];
            out[i * m + j] = s;
        }
    }
}

void softmax_rows(double* x, std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) softmax_row(x + i * k, k);
}

void l2_normalize_rows(const double* x, std::size_t n, std::size_t k,
                       double* out, double* norms) {
    for (std::size_t i = 0; i < n; ++i)
        normalize_row(x + i * k, k, out + i * k, norms + i);
}

void sign_perturb(const double* grad, const unsigned char* mask, std::size_t n,
                  std::size_t stride, double eps, double* delta) {
    for (std::size_t i = 0; i < n; ++i)
        sign_row(grad + i * stride, stride, eps, delta + i * stride,
                 mask[i] != 0);
}

void avgpool(const double* in, std::size_t n, std::size_t c, std::size_t h,
             std::size_t w, std::size_t grid, double* out) {
    const std::size_t plane = h * w, feat = grid * grid;
    for (std::size_t i = 0; i < n * c; ++i)
        pool_one(in + i * plane, h, w, grid, out + i * feat);
}

void avgpool_backward(const double* dfeat, std::size_t n, std::size_t c,
                      std::size_t h, std::size_t w, std::size_t grid,
                      double* dimg) {
    const std::size_t plane = h * w, feat = grid * grid;
    for (std::size_t i = 0; i < n * c; ++i)
        unpool_one(dfeat + i * feat, h, w, grid, dimg + i * plane);
}

void gaussian_blur5(const double* in, std::size_t n, std::size_t c,
                    std::size_t h, std::size_t w, const double w5[5],
                    double* out) {
    const std::size_t plane = h * w;
    for (std::size_t i = 0; i < n * c; ++i) {
        const double* src = in + i * plane;
        double* dst = out + i * plane;
        for (std::size_t y = 0; y < h; ++y)
            for (std::size_t x = 0; x < w; ++x)
                dst[y * w + x] = blur_at(src, h, w, y, x, w5);
    }
}

}  // namespace serial

// ------------------------------- omp lane --------------------------------

namespace omp {

void gemm_nt(const double* a, std::size_t n, std::size_t k, const double* b,
             std::size_t m, double* out) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        for (std::size_t j = 0; j < m; ++j)
            out[i * m + j] = dot(a + i * k, b + j * k, k);
}

void gemm_nn(const double* a, std::size_t n, std::size_t k, const double* b,
             std::size_t m, double* out) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < k; ++l) s += a[i * k + l] * b[l * m + j];
            out[i * m + j] = s;
        }
    }
}

void gemm_tn(const double* a, std::size_t k, std::size_t n, const double* b,
             std::size_t m, double* out) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < k; ++l) s += a[l * n + i] * b[l * m + j];
            out[i * m + j] = s;
        }
    }
}

void softmax_rows(double* x, std::size_t n, std::size_t k) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        softmax_row(x + i * k, k);
}

void l2_normalize_rows(const double* x, std::size_t n, std::size_t k,
                       double* out, double* norms) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        normalize_row(x + i * k, k, out + i * k, norms + i);
}

void sign_perturb(const double* grad, const unsigned char* mask, std::size_t n,
                  std::size_t stride, double eps, double* delta) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        sign_row(grad + i * stride, stride, eps, delta + i * stride,
                 mask[i] != 0);
}

void avgpool(const double* in, std::size_t n, std::size_t c, std::size_t h,
             std::size_t w, std::size_t grid, double* out) {
    const std::size_t plane = h * w, feat = grid * grid;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n * c); ++i)
        pool_one(in + i * plane, h, w, grid, out + i * feat);
}

void avgpool_backward(const double* dfeat, std::size_t n, std::size_t c,
                      std::size_t h, std::size_t w, std::size_t grid,
                      double* dimg) {
    const std::size_t plane = h * w, feat = grid * grid;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n * c); ++i)
        unpool_one(dfeat + i * feat, h, w, grid, dimg + i * plane);
}

void gaussian_blur5(const double* in, std::size_t n, std::size_t c,
                    std::size_t h, std::size_t w, const double w5[5],
                    double* out) {
    const std::size_t plane = h * w;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n * c); ++i) {
        const double* src = in + i * plane;
        double* dst = out + i * plane;
        for (std::size_t y = 0; y < h; ++y)
            for (std::size_t x = 0; x < w; ++x)
                dst[y * w + x] = blur_at(src, h, w, y, x, w5);
    }
}

}  // namespace omp

}  // namespace occ::kernels
