#include "miue/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace miue {

namespace {

void require_square_symmetric(const Tensor& m, const char* who) {
  if (m.rank() != 2 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": square matrix required");
  }
  const std::size_t d = m.rows();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (std::fabs(m.at(i, j) - m.at(j, i)) > 1e-10) {
        throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
      }
    }
  }
}

}  // namespace

Tensor cholesky(const Tensor& m) {
  require_square_symmetric(m, "cholesky");
  const std::size_t d = m.rows();
  Tensor l({d, d});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = m.at(i, j);
      for (std::size_t p = 0; p < j; ++p) s -= l.at(i, p) * l.at(j, p);
      if (i == j) {
        if (s <= 0.0) {
          throw std::runtime_error(
              "cholesky: matrix not positive-definite (consider adding a "
              "small ridge to the diagonal)");
        }
        l.at(i, i) = std::sqrt(s);
      } else {
        l.at(i, j) = s / l.at(j, j);
      }
    }
  }
  return l;
}

double logdet_spd(const Tensor& m) {
  Tensor l = cholesky(m);
  const std::size_t d = m.rows();
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) acc += std::log(l.at(i, i));
  return 2.0 * acc;
}

Tensor sample_gaussian(RngState& rng, const Tensor& mu, const Tensor& sigma,
                       std::size_t n) {
  if (mu.rank() != 1) {
    throw std::invalid_argument("sample_gaussian: mu must be a vector");
  }
  const std::size_t d = mu.size();
  if (sigma.rank() != 2 || sigma.rows() != d || sigma.cols() != d) {
    throw std::invalid_argument("sample_gaussian: sigma shape mismatch");
  }
  Tensor l = cholesky(sigma);
  Tensor out({n, d});
  std::vector<double> z(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < d; ++c) z[c] = rng.normal();
    for (std::size_t r = 0; r < d; ++r) {
      double s = mu[r];
      for (std::size_t c = 0; c <= r; ++c) s += l.at(r, c) * z[c];
      out.at(i, r) = s;
    }
  }
  return out;
}

Tensor sample_unit_sphere(RngState& rng, std::size_t d) {
  if (d == 0) {
    throw std::domain_error("sample_unit_sphere: dimension must be >= 1");
  }
  Tensor v({d});
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = rng.normal();
      norm2 += v[i] * v[i];
    }
  } while (norm2 < 1e-24);
  const double inv = 1.0 / std::sqrt(norm2);
  for (std::size_t i = 0; i < d; ++i) v[i] *= inv;
  return v;
}

Tensor random_spd(RngState& rng, std::size_t d, double lo, double hi) {
  if (d == 0) throw std::domain_error("random_spd: dimension must be >= 1");
  // Gram-Schmidt on a Gaussian matrix; redraw columns that collapse.
  Tensor q({d, d});
  for (std::size_t col = 0; col < d; ++col) {
    while (true) {
      std::vector<double> v(d);
      for (std::size_t r = 0; r < d; ++r) v[r] = rng.normal();
      for (std::size_t prev = 0; prev < col; ++prev) {
        double dot = 0.0;
        for (std::size_t r = 0; r < d; ++r) dot += v[r] * q.at(r, prev);
        for (std::size_t r = 0; r < d; ++r) v[r] -= dot * q.at(r, prev);
      }
      double norm2 = 0.0;
      for (double x : v) norm2 += x * x;
      if (norm2 > 1e-12) {
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < d; ++r) q.at(r, col) = v[r] * inv;
        break;
      }
    }
  }
  std::vector<double> lambda(d);
  for (std::size_t i = 0; i < d; ++i) lambda[i] = rng.uniform(lo, hi);
  Tensor out({d, d});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double s = 0.0;
      for (std::size_t p = 0; p < d; ++p) s += q.at(i, p) * lambda[p] * q.at(j, p);
      out.at(i, j) = s;
      out.at(j, i) = s;
    }
  }
  return out;
}

}  // namespace miue
