#pragma once

#include <complex>
#include <cstddef>

namespace uhp {

// Critical-point data of the exponent in the integral representation of
// H_n(z; s2/n): the unique critical point in the left half-plane, the
// exponent value there, and the second t-derivative there.
struct SaddleData {
    std::complex<double> t0;
    std::complex<double> S_at_saddle;
    std::complex<double> d2S;
};

// Exponent of the integral representation,
// S(t; z) = log(1 - z e^t) - (t/sigma + sigma/2)^2 / 2 with sigma = sqrt(s2).
// The principal log is safe because |z e^t| < 1 on the required domain
// |z| < 1, Re t < 0; violations throw std::domain_error, as does s2 <= 0.
std::complex<double> saddle_exponent(std::complex<double> t, std::complex<double> z, double s2);

// Solves the critical-point equation of the exponent. Writing z = -e^{i theta}
// with the principal angle (Im theta > 0 inside the disk) and
// zeta = zeta_{s2/4}(theta/2), the point is t0 = i (s2/2) tan(zeta), and the
// value and curvature follow in w = e^{2 i zeta}:
//   S_at_saddle = log(1 + w) - s2 w^2 / (2 (1 + w)^2)
//   d2S         = w / (1 + w)^2 - 1/s2.
// z = 0 degenerates to {-s2/2, 0, -1/s2}. The angle enters only through
// tan(zeta) and e^{2 i zeta}, so theta and theta + 2 pi give the same data.
SaddleData saddle_point(std::complex<double> z, double s2);

// Large-n limit of (1/n) log(H_n(z; s2/n) / (-1)^n), via the closed form
// above; saddle_exponent(t0, z, s2) reproduces it.
std::complex<double> limit_log_hermite(std::complex<double> z, double s2);

// Large-n limit of H_n'(z; s2/n) / (n H_n(z; s2/n)):
// -e^{-i theta} / (1 + e^{-2 i zeta}), which tends to -e^{-s2/2} at z = 0.
std::complex<double> limit_log_hermite_derivative(std::complex<double> z, double s2);

// H_n(z; s2/n) by adaptive quadrature of the real-line representation
//   (-1)^n sqrt(n/(2 pi s2)) \int (1 - z e^t)^n e^{-(n/2)(t/sigma + sigma/2)^2} dt
// over a window wide enough that the discarded Gaussian tails sit far below
// 1e-20 of the peak even after the polynomial factor shifts the maximum.
// This route never touches the coefficients, so it can arbitrate against
// the coefficient sum; capped at n <= 200 where the integrand stays tame.
std::complex<double> hermite_integral(std::size_t n, double s2, std::complex<double> z);

// Saddle-point estimate sqrt(-1 / (s2 d2S)) e^{n S_at_saddle} of
// H_n(z; s2/n) / (-1)^n. Principal square root: the radicand is 1 at z = 0
// and stays in the right half-plane on the radii exercised here, so no
// branch tracking is needed.
std::complex<double> hermite_saddle_estimate(std::size_t n, double s2, std::complex<double> z);

} // namespace uhp
