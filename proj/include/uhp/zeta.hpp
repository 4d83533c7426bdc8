#pragma once

#include <complex>
#include <vector>

namespace uhp {

struct ZetaConfig {
    // geometric ladder 1e-1 ... 1e-12 of imaginary offsets for real theta
    static std::vector<double> default_descent();

    int max_fixed_point_iters = 200;
    double newton_tol = 1e-14;
    std::vector<double> boundary_descent = default_descent();
};

struct ZetaValue {
    std::complex<double> zeta;
    double residual = 0.0;
    int iterations_used = 0;
};

// The unique solution of zeta - t tan(zeta) = theta in the closed upper half
// plane, for t > 0 and Im theta >= 0. Interior points run the fixed-point
// iteration zeta <- theta + t tan(zeta) started at theta + it, polished by
// damped Newton; real theta is reached by continuation along the descending
// imaginary offsets, warm-starting each step. Within ~1e-6 of a support edge
// (where d/dzeta vanishes) the accepted residual is relaxed to 1e-10.
ZetaValue zeta(double t, std::complex<double> theta, const ZetaConfig& cfg = {});

// The unique positive root ytilde of y - t coth(y) = tau (t > 0, tau >= 0):
// an independent one-dimensional oracle for zeta on the line Re theta = -pi/2,
// where zeta(t, -pi/2 + i tau) = -pi/2 + i ytilde.
double zeta_boundary_line(double t, double tau);

} // namespace uhp
