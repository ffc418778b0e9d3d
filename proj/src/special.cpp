#include "miue/special.hpp"

#include <cmath>
#include <stdexcept>

namespace miue {

double digamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("digamma: requires x > 0");
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_{2n} / (2n x^{2n})
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = std::log(x) - 0.5 * inv;
  double p = inv2;
  series -= p / 12.0;       // B_2 / 2
  p *= inv2;
  series += p / 120.0;      // B_4 / 4
  p *= inv2;
  series -= p / 252.0;      // B_6 / 6
  p *= inv2;
  series += p / 240.0;      // B_8 / 8
  p *= inv2;
  series -= p / 132.0;      // B_10 / 10
  p *= inv2;
  series += p * 691.0 / 32760.0;  // B_12 / 12
  return acc + series;
}

}  // namespace miue
