#pragma once

#include "uhp/zeta.hpp"

#include <complex>
#include <cstddef>

namespace uhp {

struct FreeNormalParams {
    double s2 = 1.0;  // sigma^2 > 0
    ZetaConfig zeta_cfg{};
    double quad_tol = 1e-10;
};

// Density with respect to arclength on the unit circle, evaluated at angle
// theta (taken mod 2pi): (2/(pi s2)) Im zeta_{s2/4}((|theta| - pi)/2).
// Exactly zero outside the support arc when s2 < 4.
double density(const FreeNormalParams& p, double theta);

// Half-width of the support arc about angle 0: 2 asin(sigma/2) +
// (sigma/2) sqrt(4 - sigma^2) for s2 < 4, pi otherwise (full circle).
double support_halfwidth(const FreeNormalParams& p);

// q_m(x) = sum_{j=0}^m x^j/j! C(m+1, j+1), evaluated in log-scale arithmetic
// so large |x| cannot overflow.
double q_poly(std::size_t m, double x);

// Closed-form moment: m_ell = (1/ell) e^{-ell s2/2} q_{ell-1}(-ell s2) for
// ell >= 1, m_0 = 1, m_{-ell} = m_ell. The alternating q-sum is assembled in
// extended precision because it cancels by a factor ~ e^{ell(1 + ln s2 - s2/2)}.
double moment(const FreeNormalParams& p, long long ell);

// Truncated Fourier series 1/(2pi) + (1/pi) sum m_ell cos(ell theta); an
// independent oracle against density(). Stops early once the coefficient
// magnitude falls under 1e-14.
double density_series(const FreeNormalParams& p, double theta, std::size_t terms);

// Fourier series summed to 320 terms in extended precision and extrapolated
// with Wynn's epsilon algorithm on the complex partial sums. The raw series
// decays too slowly near square-root edges (coefficients ~ ell^{-3/2}) to
// reach 1e-8 by truncation; the extrapolated value is good to far better
// than that everywhere off the support edges.
double density_series_accelerated(const FreeNormalParams& p, double theta);

// Integral of the density over [-pi, theta], clamped to [0, 1]. Quadrature
// panels never straddle a support edge, respecting the root singularities.
double cdf(const FreeNormalParams& p, double theta);

// psi-transform at z = -e^{i theta}: i(theta - 2 zeta_{s2/4}(theta/2))/s2 - 1/2.
std::complex<double> psi(const FreeNormalParams& p, std::complex<double> theta);

// S-transform: exp(s2 (z + 1/2)).
std::complex<double> s_transform(const FreeNormalParams& p, std::complex<double> z);

} // namespace uhp
