#pragma once

#include <complex>
#include <functional>

namespace uhp {

// Adaptive Gauss-Kronrod 7/15 with recursive bisection. The error estimate
// per panel is |K15 - G7|; panels split until it drops under the local
// budget. Kronrod nodes are interior, so integrable endpoint singularities
// (square- and cube-root edges show up in the density work) never get
// sampled at the singular point itself.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double a, double b, double tol);

double integrate_real(const std::function<double(double)>& f, double a, double b, double tol);

} // namespace uhp
