#pragma once

namespace miue {

// Digamma psi(x) for x > 0, absolute error <= 1e-10. Recurrence
// psi(x+1) = psi(x) + 1/x below the asymptotic threshold, then the
// Bernoulli series. Throws std::domain_error for x <= 0.
double digamma(double x);

}  // namespace miue
