#pragma once

#include <cstddef>

namespace miue::kernels {

// Data-parallel inner loops used by the autodiff engine and the MI
// estimators. Every kernel has a serial reference (_serial suffix) and an
// OpenMP variant; each output element is produced by exactly one loop
// iteration with a fixed-order inner accumulation, so the two variants are
// bit-identical for any thread count.

// C (m x n) = A (m x k) * B (k x n)
void matmul_serial(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n);
void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n);

// C (m x n) = A (m x k) * B^T, B given as (n x k)
void matmul_nt_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n);
void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);

// C (m x n) = A^T * B, A given as (k x m), B as (k x n)
void matmul_tn_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n);
void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n);

// KSG neighborhood statistics under the max-norm. For each point i the
// joint distance is max(d_x, d_y) with per-space Chebyshev distances;
// rho_i is the k-th nearest joint distance (self excluded) and nx/ny count
// marginal neighbors strictly inside rho_i.
void ksg_counts_serial(const double* x, const double* y, std::size_t n,
                       std::size_t dx, std::size_t dy, std::size_t k,
                       std::size_t* nx, std::size_t* ny);
void ksg_counts(const double* x, const double* y, std::size_t n,
                std::size_t dx, std::size_t dy, std::size_t k,
                std::size_t* nx, std::size_t* ny);

// Per-sample terms log p(x_i, y_i) - log p(x_i) - log p(y_i) of the 1-D
// resubstitution KDE mutual-information estimate with Gaussian kernels and
// per-axis bandwidths hx, hy.
void kde_mi_terms_serial(const double* xs, const double* ys, std::size_t n,
                         double hx, double hy, double* terms);
void kde_mi_terms(const double* xs, const double* ys, std::size_t n,
                  double hx, double hy, double* terms);

bool openmp_enabled();
int max_threads();

}  // namespace miue::kernels
