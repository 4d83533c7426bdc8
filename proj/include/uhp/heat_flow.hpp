#pragma once

#include "uhp/circle_roots.hpp"
#include "uhp/poly.hpp"
#include "uhp/precision.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace uhp {

// Real-valued trigonometric polynomial sum_{l=-d}^{d} c_l e^{i l theta},
// stored as the full coefficient row with c[l + d] holding c_l. Consumers
// validate c_{-l} == conj(c_l) (exactly; symmetric constructions preserve
// this bitwise) and c_d != 0.
struct TrigPoly {
    std::size_t d = 0;                    // half-degree
    std::vector<std::complex<double>> c;  // size 2d+1, index l + d
    // Optional arbitrary-precision materializer for the same row (out[l + d]
    // receives c_l). Constructions attach one and the flow composes it; root
    // certification deep inside a coefficient cancellation needs far more
    // accuracy than the double row retains.
    CoeffModel model;

    std::complex<double> coeff(long long l) const {
        return c[static_cast<std::size_t>(l + static_cast<long long>(d))];
    }
};

// (sin(theta/2))^{2d} in Fourier form: c_l = 4^{-d} (-1)^l C(2d, d+l).
TrigPoly sin_half_power(std::size_t d);

// Fourier view of an even-degree self-inversive P: c_l = f a_{l+d} with
// f = 1 when the coefficient row satisfies a_{n-j} = conj(a_j) and f = i
// when it satisfies a_{n-j} = -conj(a_j) (multiplying by i restores the
// symmetric row without moving any root). The row is symmetrized bitwise
// after a tolerance check so consumers can verify conjugate symmetry
// exactly; an attached coefficient model carries over, index for index.
// Rows fitting neither sign, odd degrees, and coefficients outside double
// range are rejected with std::invalid_argument.
TrigPoly trig_from_circle(const CirclePoly& p);

// exp(-(s/2) d^2/dz^2) applied to P for s >= 0: the output coefficient on
// z^j is sum_m (-s/2)^m/m! (j+2m)!/j! a_{j+2m}. Log-scale arithmetic for
// the stored row; the attached model recomputes the sum at the caller's
// precision from the input model (or, absent one, from the values the
// stored input row denotes). Degree and leading coefficient are untouched.
RealPoly backward_heat_algebraic(const RealPoly& p, double s);

// exp(-(s/2) d^2/dtheta^2) applied to T for s >= 0: c_l scales by
// e^{(s/2) l^2}, which preserves the conjugate symmetry bitwise. The output
// model applies the scaling at the caller's precision.
TrigPoly backward_heat_trig(const TrigPoly& t, double s);

// The flow of the pure power z^n: s^{n/2} He_n(z / sqrt(s)) for s > 0 and
// z^n itself at s = 0.
RealPoly hermite_flow_kernel(std::size_t n, double s);

// All n real roots of a real-rooted P, ascending, polished to 1e-12. Scans
// [-B, B] with B from the coefficient bound 2 max_j |a_j/a_n|^{1/(n-j)},
// certifying node signs against a rigorous evaluation error bound and
// escalating grid resolution until n sign changes appear. Throws
// CertificationError when that never happens (complex roots, multiple
// roots, or spacing below the certifiable resolution). Without a model the
// coefficients are pinned to the ~19 digits a long double ln_mag retains,
// which caps how deep a cancellation the certification can see; with one
// they are re-materialized at every precision rung.
std::vector<double> real_roots_algebraic(const RealPoly& p);

// Root angles of a real-rooted TrigPoly via the associated degree-2d
// algebraic polynomial on the circle. The variable is rotated so the root
// product becomes one (the normal form the circle machinery stores), roots
// are certified there, and the angles are rotated back.
EmpiricalCircleMeasure trig_roots(const TrigPoly& t, const EvalPrecision& prec = {});

// kappa_1..kappa_K from m_1..m_K and back, K <= 8, via the triangular
// recursion m_n = sum_k kappa_k sum_{i_1+...+i_k = n-k} m_{i_1}...m_{i_k}.
std::vector<double> free_cumulants_from_moments(const std::vector<double>& m);
std::vector<double> moments_from_free_cumulants(const std::vector<double>& k);

} // namespace uhp
