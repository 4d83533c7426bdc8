#pragma once

#include "uhp/bigfloat.hpp"
#include "uhp/scaled.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace uhp {

// Fills `out` (already sized n+1, entries carrying their target precision)
// with the monic-normalized coefficients, i.e. it re-derives them from the
// closed-form construction at arbitrary precision. A stored double ln_mag
// only retains ~19 significant digits; root certification deep inside a
// cancellation needs far more, so constructions attach one of these and
// convolutions compose them.
using CoeffModel = std::function<void(std::vector<BigC>&)>;

struct CirclePoly {
    std::size_t n = 0;
    // coeffs[j] multiplies z^j; monic normalized so coeffs[n] is exactly one.
    std::vector<SSComplex> coeffs;
    // Global multiplier pulled out by the normalization. Convolutions only
    // ever touch this by multiplication, never by renormalizing mid-stream.
    SignedScaled scale{+1, 0.0L};
    // coeffs[j] = (-1)^n conj(coeffs[n-j]) for all j.
    bool self_inversive = false;
    CoeffModel model;
    // Root angles when the construction pins them exactly (s2 = 0 gives n
    // copies of angle 0); lets the root finder skip the search.
    std::optional<std::vector<double>> known_roots;
};

// Real-coefficient counterpart of CoeffModel: fills a pre-sized row of Big
// values (entries carrying their target precision) with the coefficients
// re-derived from the construction.
using RealCoeffModel = std::function<void(std::vector<Big>&)>;

struct RealPoly {
    std::size_t n = 0;
    std::vector<SignedScaled> coeffs;  // coeffs[j] multiplies z^j; coeffs[n] nonzero
    RealCoeffModel model;
};

// Monic polynomial with coefficient on z^j equal to
// (-1)^{n-j} C(n,j) exp(-s2 * j(n-j)/2); all roots lie on the unit circle.
CirclePoly unitary_hermite(std::size_t n, double s2);

// Probabilist Hermite polynomial He_n.
RealPoly classical_hermite(std::size_t n);

// Additive convolution at degree n: coefficient l of the result is
// (1/(n! l!)) sum_{i+j=n+l} i! j! a_i b_j over 0 <= i,j <= n.
// Inputs of stated degree below n are zero-padded; degree above n throws.
RealPoly finite_free_add(const RealPoly& p, const RealPoly& q, std::size_t n);

// Multiplicative convolution at degree n: coefficient j of the result is
// (-1)^{n-j} p_j q_j / C(n,j). Both inputs must have stated degree n.
CirclePoly finite_free_mult(const CirclePoly& p, const CirclePoly& q, std::size_t n);

// The degree-2d factor (z^2 - 2 cos(sigma/sqrt(N)) z + 1)^d whose N-fold
// multiplicative self-convolution approaches unitary_hermite(2d, sigma^2/(2d-1)).
CirclePoly demoivre_base(std::size_t d, double sigma, std::size_t N);

// N-fold multiplicative self-convolution of demoivre_base, computed
// coefficientwise: coefficient j is (-1)^{(n-j)(N-1)} q_j^N / C(n,j)^{N-1}.
// Chaining N-1 finite_free_mult calls over the base factor gives the same
// polynomial; tests hold the two routes against each other.
CirclePoly demoivre_laplace_product(std::size_t d, double sigma, std::size_t N);

// Plain Horner evaluation with max-log prescaling; overflows to inf when the
// true value exceeds double range. The certified evaluator lives in the root
// finder; this one serves ratio-type quantities where scales cancel.
std::complex<double> poly_eval(const CirclePoly& p, std::complex<double> z);

CirclePoly poly_derivative(const CirclePoly& p);

// log of the represented value scale * sum_j coeffs[j] z^j, imaginary part
// reduced to (-pi, pi]. Coefficients are materialized at escalating
// precision (through the model when present, from the stored logs
// otherwise) until the Horner sum clears a rigorous rounding bound, so
// values cancelling hundreds of digits below the coefficient scale still
// come out accurate. Throws CertificationError when the top precision
// cannot separate the value from zero (z sits on a root, or an unmodeled
// input has run out of stored accuracy).
std::complex<double> poly_log_eval(const CirclePoly& p, std::complex<double> z);

// {"n": int, "coeffs": [[re_sign, re_ln_mag, im_sign, im_ln_mag], ...]}
// with the global scale folded into the effective coefficients.
std::string circle_poly_to_json(const CirclePoly& p);

// Parses the schema above. The leading coefficient must be real and nonzero
// (everything this library serializes satisfies that); the self-inversive
// flag is recovered by checking the identity on the parsed array. Parsed
// polynomials carry no coefficient model, so downstream evaluation is
// honestly limited to the precision a double ln_mag retains.
CirclePoly circle_poly_from_json(const std::string& text);

} // namespace uhp
