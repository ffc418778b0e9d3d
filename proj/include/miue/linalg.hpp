#pragma once

#include "miue/rng.hpp"
#include "miue/tensor.hpp"

namespace miue {

// Lower-triangular Cholesky factor L with M = L L^T. M must be symmetric
// within tol 1e-10 and positive-definite; otherwise throws.
Tensor cholesky(const Tensor& m);

// log det of a symmetric positive-definite matrix via its Cholesky factor.
double logdet_spd(const Tensor& m);

// n samples (n x d) from N(mu, sigma): mu + L z with z standard normal.
Tensor sample_gaussian(RngState& rng, const Tensor& mu, const Tensor& sigma,
                       std::size_t n);

// Uniform direction on the (d-1)-sphere (normalized Gaussian vector).
Tensor sample_unit_sphere(RngState& rng, std::size_t d);

// Random SPD matrix Q diag(lambda) Q^T with eigenvalues uniform in
// [lo, hi] and Q a random orthogonal matrix.
Tensor random_spd(RngState& rng, std::size_t d, double lo, double hi);

}  // namespace miue
