#pragma once

#include "uhp/detail/dd.hpp"
#include "uhp/poly.hpp"
#include "uhp/precision.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace uhp {

// Certified root angles on (-pi, pi]; every angle is within
// enclosure_width of a sign change of the circle profile (0 when the
// construction pinned the roots exactly).
struct EmpiricalCircleMeasure {
    std::vector<double> angles;
    double enclosure_width = 0.0;
};

// One evaluation of the circle profile: value, slope, and an absolute bound
// on the value's accumulated rounding error. The sign of `value` is
// trustworthy exactly when |value| > error.
struct CircleEval {
    double value = 0.0;
    double derivative = 0.0;
    double error = 0.0;
};

// For coeffs[j] = (-1)^n conj(coeffs[n-j]), the rotated boundary value
// P(e^{i theta}) e^{-i n theta/2} equals i^{n mod 2} r(theta) with r real,
// and r has the same circle zeros as P. This evaluator prepares normalized
// coefficient tables once (a double-double table plus one MPFR table per
// precision rung) and evaluates r and r' in a single Horner pass per call.
//
// Values carry a fixed positive scaling (the coefficient peak is divided
// out and the polynomial's global scale is dropped), which changes neither
// signs nor zeros nor the ratio value/derivative; `error` bounds the scaled
// value. Construction does all table work up front, so eval() is const and
// reentrant.
class CircleScaledEvaluator {
  public:
    explicit CircleScaledEvaluator(const CirclePoly& p, const EvalPrecision& cfg = {});

    // Evaluate at the cheapest rung offering at least `digits` digits
    // (clamped to the top rung). Rungs of 32 digits or fewer run in
    // double-double, the rest in MPFR.
    CircleEval eval(double theta, int digits) const;

    const std::vector<int>& rungs() const { return rungs_; }
    std::size_t degree() const { return n_; }

  private:
    CircleEval eval_dd(double theta) const;
    CircleEval eval_mpfr(double theta, std::size_t rung) const;

    std::size_t n_ = 0;
    int kappa_ = 0;            // n mod 2
    double sum_abs_ = 0.0;     // sum of normalized coefficient magnitudes
    double coef_noise_ = 0.0;  // relative storage error of the coefficients
    std::vector<int> rungs_;
    std::vector<detail::ddc> ddcoef_;
    std::vector<std::vector<BigC>> mp_;  // per rung; empty for dd rungs
};

// Convenience wrapper: build the evaluator and evaluate once.
CircleEval circle_function(const CirclePoly& p, double theta, int digits = 32);

// All n zeros of a self-inversive polynomial as certified angles. Scans a
// midpoint grid (grid_multiplier nodes per expected root), brackets sign
// changes cyclically (the profile flips sign over a full turn when n is
// odd), bisects and Newton-polishes each bracket, and certifies every root
// by opposite signs at +-5e-13. Node signs escalate through the precision
// ladder individually; if the scan cannot certify exactly n simple zeros
// the grid is refined a few times and then CertificationError is thrown
// (zeros off the circle or multiple zeros land here by design).
EmpiricalCircleMeasure find_roots(const CirclePoly& p, const EvalPrecision& cfg = {},
                                  std::size_t grid_multiplier = 8);

// (1/N) sum_j e^{i k theta_j}, compensated summation.
std::complex<double> empirical_moment(const EmpiricalCircleMeasure& mu, long long k);

// Power sums p_k / n for k = 1..K straight from the coefficients via the
// Newton identities, no root finding involved; this is the algebraic
// cross-check for empirical_moment. Runs in MPFR sized to survive the
// identities' cancellation (the coefficient peak sets the loss). Without a
// coefficient model the result is limited by stored-coefficient noise.
std::vector<std::complex<double>> newton_girard_reference(const CirclePoly& p, std::size_t K);

// (1/N) sum_j u/(1-u) with u = z e^{i theta_j}; requires |z| < 1.
std::complex<double> psi_empirical(const EmpiricalCircleMeasure& mu, std::complex<double> z);

// sup_x |F_N(x) - F(x)| for a continuous reference cdf F, evaluated exactly
// via the one-sided limits at each atom.
double kolmogorov_distance(const EmpiricalCircleMeasure& mu,
                           const std::function<double(double)>& cdf);

} // namespace uhp
