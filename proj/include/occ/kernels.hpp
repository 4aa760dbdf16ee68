#pragma once

#include <cstddef>
#include <cstdint>

namespace occ::kernels {

// Data-parallel inner loops of the toolkit. Every kernel exists twice:
// kernels::serial is the reference implementation kept for testing, and
// kernels::omp is the OpenMP version used in production. Both compute each
// output element with the same serial inner loop, so results are bit-identical
// to the reference for any thread count. Reductions that would reorder
// floating-point sums are deliberately left serial elsewhere.
//
// tools/bench_kernels compares the two lanes.

namespace serial {

/// out[n x m] = A[n x k] * B[m x k]^T  (similarity-style product)
void gemm_nt(const double* a, std::size_t n, std::size_t k,
             const double* b, std::size_t m, double* out);

/// out[n x m] = A[n x k] * B[k x m]
void gemm_nn(const double* a, std::size_t n, std::size_t k,
             const double* b, std::size_t m, double* out);

/// out[n x m] = A[k x n]^T * B[k x m]
void gemm_tn(const double* a, std::size_t k, std::size_t n,
             const double* b, std::size_t m, double* out);

/// Row-wise softmax in place over an [n x k] matrix (max-subtracted).
void softmax_rows(double* x, std::size_t n, std::size_t k);

/// Row-wise L2 normalization: out = x / ||x||, norms[i] = ||row i||.
/// Zero rows are passed through unchanged with norm reported as 0.
void l2_normalize_rows(const double* x, std::size_t n, std::size_t k,
                       double* out, double* norms);

/// delta = eps * sign(grad) on rows where mask is nonzero, 0 elsewhere.
/// sign(0) = 0. Rows are `stride` values long.
void sign_perturb(const double* grad, const unsigned char* mask,
                  std::size_t n, std::size_t stride, double eps, double* delta);

/// Average-pool each channel of each image down to a grid x grid summary.
/// in is [n][c][h][w]; out is [n x (c*grid*grid)] row-major features.
/// Block boundaries are floor(i*h/grid), so any h, w >= grid works.
void avgpool(const double* in, std::size_t n, std::size_t c, std::size_t h,
             std::size_t w, std::size_t grid, double* out);

/// Adjoint of avgpool: distribute feature gradients back over pixels.
void avgpool_backward(const double* dfeat, std::size_t n, std::size_t c,
                      std::size_t h, std::size_t w, std::size_t grid,
                      double* dimg);

/// 5x5 separable Gaussian blur per channel, clamp-to-edge padding.
/// w5 holds the normalized 1D kernel.
void gaussian_blur5(const double* in, std::size_t n, std::size_t c,
                    std::size_t h, std::size_t w, const double w5[5],
                    double* out);

}  // namespace serial

namespace omp {

void gemm_nt(const double* a, std::size_t n, std::size_t k,
             const double* b, std::size_t m, double* out);
void gemm_nn(const double* a, std::size_t n, std::size_t k,
             const double* b, std::size_t m, double* out);
void gemm_tn(const double* a, std::size_t k, std::size_t n,
             const double* b, std::size_t m, double* out);
void softmax_rows(double* x, std::size_t n, std::size_t k);
void l2_normalize_rows(const double* x, std::size_t n, std::size_t k,
                       double* out, double* norms);
void sign_perturb(const double* grad, const unsigned char* mask,
                  std::size_t n, std::size_t stride, double eps, double* delta);
void avgpool(const double* in, std::size_t n, std::size_t c, std::size_t h,
             std::size_t w, std::size_t grid, double* out);
void avgpool_backward(const double* dfeat, std::size_t n, std::size_t c,
                      std::size_t h, std::size_t w, std::size_t grid,
                      double* dimg);
void gaussian_blur5(const double* in, std::size_t n, std::size_t c,
                    std::size_t h, std::size_t w, const double w5[5],
                    double* out);

}  // namespace omp

// Production entry points resolve to the OpenMP lane.
using omp::avgpool;
using omp::avgpool_backward;
using omp::gaussian_blur5;
using omp::gemm_nn;
using omp::gemm_nt;
using omp::gemm_tn;
using omp::l2_normalize_rows;
using omp::sign_perturb;
using omp::softmax_rows;

}  // namespace occ::kernels
