#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace uhp {

// Mean-field ferromagnet: n spins, inverse temperature beta > 0, external
// field h (complex fields are allowed, the partition function is entire).
struct CWParams {
    double beta = 1.0;
    std::complex<double> h{0.0, 0.0};
};

// log of Z_n = sum_{j=0}^{n} C(n,j) exp(beta (2j-n)^2 / (2n) + h (2j-n)).
//
// The term assembly is symmetric under j <-> n-j (canonical log-binomials,
// pairwise bracketed summation), so log_partition(n, {beta, -h}) equals
// log_partition(n, {beta, h}) bitwise. The imaginary part of h is reduced
// by an exact multiple of pi before exponentiation; the multiple re-enters
// as a global sign, so shifting Im h by pi changes the result by exactly
// i pi (2j-n and n share parity) for odd n and not at all for even n. The
// imaginary part of the result is therefore not clamped to (-pi, pi].
//
// Throws PoleError when the sum cancels to below 1e-12 of its total term
// mass, which happens exactly when h sits on a zero of Z_n.
std::complex<double> log_partition(std::size_t n, const CWParams& p);

// Limit of (1/n) log Z_n for Re h > 0 (other fields throw domain_error):
// beta/2 + h + log(1+w) - 2 beta w^2 / (1+w)^2 with w = e^{2 i zeta} for
// the inverse boundary map zeta at parameter beta and argument i h; |w| < 1
// there, so the principal log is the right branch.
std::complex<double> free_energy(const CWParams& p);

// Z_n(beta, .) vanishes only at purely imaginary fields. This returns the
// n values of Im h in (-pi/2, pi/2] (one period; the zero set repeats with
// period pi), sorted ascending, as certified root angles of the degree-n
// circle polynomial that Z_n normalizes to.
std::vector<double> lee_yang_zeros(std::size_t n, double beta);

// n -> infinity density of the zeros above with respect to y = Im h,
// normalized to total mass one on (-pi/2, pi/2].
double lee_yang_density(double beta, double y);

// Half-width of the density's support about y = +-pi/2: the zeros fill
// pi/2 - w <= |y| <= pi/2. Equals asin(sqrt(beta)) + sqrt(beta - beta^2)
// for beta < 1 and pi/2 (zeros dense through y = 0) once beta >= 1.
double lee_yang_support(double beta);

} // namespace uhp
