#include "miue/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace miue::kernels {

namespace {

inline void matmul_row(const double* a, const double* b, double* c,
                       std::size_t i, std::size_t k, std::size_t n) {
  double* ci = c + i * n;
  std::fill(ci, ci + n, 0.0);
  const double* ai = a + i * k;
  for (std::size_t p = 0; p < k; ++p) {
    const double av = ai[p];
    const double* bp = b + p * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] += av * bp[j];
  }
}

inline void matmul_nt_row(const double* a, const double* b, double* c,
                          std::size_t i, std::size_t k, std::size_t n) {
  const double* ai = a + i * k;
  double* ci = c + i * n;
  for (std::size_t j = 0; j < n; ++j) {
    const double* bj = b + j * k;
    double s = 0.0;
    for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
    ci[j] = s;
  }
}

inline void matmul_tn_row(const double* a, const double* b, double* c,
                          std::size_t i, std::size_t k, std::size_t m,
                          std::size_t n) {
  // c row i (of m rows) = sum_p a[p][i] * b[p][:]
  double* ci = c + i * n;
  std::fill(ci, ci + n, 0.0);
  for (std::size_t p = 0; p < k; ++p) {
    const double av = a[p * m + i];
    const double* bp = b + p * n;
    for (std::size_t j = 0; j < n; ++j) ci[j] += av * bp[j];
  }
}

inline double cheb_dist(const double* u, const double* v, std::size_t d) {
  double m = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    double a = std::fabs(u[c] - v[c]);
    if (a > m) m = a;
  }
  return m;
}

void ksg_point(const double* x, const double* y, std::size_t n,
               std::size_t dx, std::size_t dy, std::size_t k, std::size_t i,
               std::vector<double>& scratch, std::size_t* nx,
               std::size_t* ny) {
  const double* xi = x + i * dx;
  const double* yi = y + i * dy;
  scratch.clear();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    double djx = cheb_dist(xi, x + j * dx, dx);
    double djy = cheb_dist(yi, y + j * dy, dy);
    scratch.push_back(std::max(djx, djy));
  }
  std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end());
  const double rho = scratch[k - 1];
  std::size_t cx = 0, cy = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    if (cheb_dist(xi, x + j * dx, dx) < rho) ++cx;
    if (cheb_dist(yi, y + j * dy, dy) < rho) ++cy;
  }
  nx[i] = cx;
  ny[i] = cy;
}

inline double kde_term(const double* xs, const double* ys, std::size_t n,
                       double hx, double hy, std::size_t i) {
  // Joint uses the product kernel, so all three sums share the per-pair
  // exponents. Self term j == i keeps every sum strictly positive.
  double sx = 0.0, sy = 0.0, sxy = 0.0;
  const double xi = xs[i], yi = ys[i];
  for (std::size_t j = 0; j < n; ++j) {
    double ux = (xi - xs[j]) / hx;
    double uy = (yi - ys[j]) / hy;
    double kx = std::exp(-0.5 * ux * ux);
    double ky = std::exp(-0.5 * uy * uy);
    sx += kx;
    sy += ky;
    sxy += kx * ky;
  }
  // The 1/(sqrt(2 pi) h n) normalizations cancel except for the joint's
  // extra 1/(sqrt(2 pi) hx hy n) vs the marginals' product.
  const double ln_sqrt2pi = 0.9189385332046727;
  double log_px = std::log(sx) - std::log(static_cast<double>(n)) - std::log(hx) - ln_sqrt2pi;
  double log_py = std::log(sy) - std::log(static_cast<double>(n)) - std::log(hy) - ln_sqrt2pi;
  double log_pxy = std::log(sxy) - std::log(static_cast<double>(n)) - std::log(hx) -
                   std::log(hy) - 2.0 * ln_sqrt2pi;
  return log_pxy - log_px - log_py;
}

}  // namespace

void matmul_serial(const double* a, const double* b, double* c,
                   std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) matmul_row(a, b, c, i, k, n);
}

void matmul(const double* a, const double* b, double* c,
            std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static) if (m * k * n > 32768)
  for (long long i = 0; i < static_cast<long long>(m); ++i) {
    matmul_row(a, b, c, static_cast<std::size_t>(i), k, n);
  }
}

void matmul_nt_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) matmul_nt_row(a, b, c, i, k, n);
}

void matmul_nt(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static) if (m * k * n > 32768)
  for (long long i = 0; i < static_cast<long long>(m); ++i) {
    matmul_nt_row(a, b, c, static_cast<std::size_t>(i), k, n);
  }
}

void matmul_tn_serial(const double* a, const double* b, double* c,
                      std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) matmul_tn_row(a, b, c, i, k, m, n);
}

void matmul_tn(const double* a, const double* b, double* c,
               std::size_t m, std::size_t k, std::size_t n) {
#pragma omp parallel for schedule(static) if (m * k * n > 32768)
  for (long long i = 0; i < static_cast<long long>(m); ++i) {
    matmul_tn_row(a, b, c, static_cast<std::size_t>(i), k, m, n);
  }
}

void ksg_counts_serial(const double* x, const double* y, std::size_t n,
                       std::size_t dx, std::size_t dy, std::size_t k,
                       std::size_t* nx, std::size_t* ny) {
  std::vector<double> scratch;
  scratch.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ksg_point(x, y, n, dx, dy, k, i, scratch, nx, ny);
  }
}

void ksg_counts(const double* x, const double* y, std::size_t n,
                std::size_t dx, std::size_t dy, std::size_t k,
                std::size_t* nx, std::size_t* ny) {
#pragma omp parallel
  {
    std::vector<double> scratch;
    scratch.reserve(n);
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      ksg_point(x, y, n, dx, dy, k, static_cast<std::size_t>(i), scratch, nx, ny);
    }
  }
}

void kde_mi_terms_serial(const double* xs, const double* ys, std::size_t n,
                         double hx, double hy, double* terms) {
  for (std::size_t i = 0; i < n; ++i) terms[i] = kde_term(xs, ys, n, hx, hy, i);
}

void kde_mi_terms(const double* xs, const double* ys, std::size_t n,
                  double hx, double hy, double* terms) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    terms[i] = kde_term(xs, ys, n, hx, hy, static_cast<std::size_t>(i));
  }
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace miue::kernels
