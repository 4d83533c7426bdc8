#include "uhp/free_normal.hpp"

#include "uhp/bigfloat.hpp"
#include "uhp/quadrature.hpp"
#include "uhp/scaled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace uhp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_params(const FreeNormalParams& p) {
    if (!(p.s2 > 0.0)) throw std::domain_error("free normal: s2 must be positive");
}

double wrap_angle(double theta) {
    double w = std::remainder(theta, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

// sum of C(ell, j+1) x^j / j! over j = 0..ell-1 at precision `prec`
void q_sum_at(double s2, unsigned long ell, mpfr_prec_t prec, Big& acc) {
    const std::vector<Big> binrow = binomial_row(ell, prec);
    Big x(prec), pw(prec), t(prec);
    x.set(s2);
    bmul_ui(x, x, ell);
    bneg(x, x);
    pw.set(1ul);
    acc.set_zero();
    for (unsigned long j = 0; j < ell; ++j) {
        if (j > 0) {
            bmul(pw, pw, x);
            bdiv_ui(pw, pw, j);
        }
        bmul(t, pw, binrow[j + 1]);
        badd(acc, acc, t);
    }
}

// m_ell into `out`, accurate to out's precision (relative), or to about
// e^{-140} absolutely when the moment itself all but vanishes.  The q-sum
// alternates with terms peaking far above the result, so the working
// precision is sized from the exact peak-term magnitude; a pass whose sum
// lands too close to its own rounding floor is repeated with the measured
// deficit added.
void moment_big(double s2, unsigned long ell, Big& out) {
    const double lx = std::log((double)ell * s2);
    double peak_ln = 0.0;
    for (unsigned long j = 0; j < ell; ++j)
        peak_ln = std::max(peak_ln, (double)log_binomial(ell, j + 1) + (double)j * lx -
                                        (double)log_factorial(j));

    const double kLn2 = 0.6931471805599453;
    const double slack_ln = std::log(2.0 * (double)ell);  // one rounding per term
    const double want_bits = (double)out.prec() + 16.0;
    // plausible size of the sum; refined from the computed value on retry
    double target_ln = 0.5 * s2 * (double)ell - 2.5 * std::log((double)ell + 1.0) - 8.0;
    // noise floor at which |m_ell| <= e^{-140} is already settled
    const double give_up_ln = 0.5 * s2 * (double)ell + std::log((double)ell) - 322.0;

    mpfr_prec_t prec = out.prec() + 32;
    Big acc(prec);
    for (;;) {
        const double floor_ln = std::max(target_ln, give_up_ln);
        prec = std::max<mpfr_prec_t>(
            out.prec() + 32,
            (mpfr_prec_t)std::ceil((peak_ln + slack_ln - floor_ln) / kLn2 + want_bits));
        acc.set_prec_destructive(prec);
        q_sum_at(s2, ell, prec, acc);
        if (acc.is_zero()) break;  // terms cancelled exactly
        const double noise_ln = peak_ln + slack_ln - (double)prec * kLn2;
        if ((double)acc.ln_abs() - noise_ln >= want_bits * kLn2) break;
        if (noise_ln <= give_up_ln) break;
        target_ln = (double)acc.ln_abs() - 8.0;
    }

    Big e(prec);
    e.set(s2);
    bmul_ui(e, e, ell);
    bdiv_ui(e, e, 2ul);
    bneg(e, e);
    bexp(e, e);
    bmul(e, acc, e);
    bdiv_ui(e, e, ell);
    out.set(e);
}

} // namespace

double support_halfwidth(const FreeNormalParams& p) {
    check_params(p);
    if (p.s2 >= 4.0) return kPi;
    const double s = std::sqrt(p.s2);
    return 2.0 * std::asin(s / 2.0) + (s / 2.0) * std::sqrt(4.0 - p.s2);
}

double density(const FreeNormalParams& p, double theta) {
    check_params(p);
    const double a = std::fabs(wrap_angle(theta));
    if (p.s2 < 4.0 && a > support_halfwidth(p)) return 0.0;
    const auto zv = zeta(p.s2 / 4.0, {(a - kPi) / 2.0, 0.0}, p.zeta_cfg);
    return std::max(0.0, 2.0 / (kPi * p.s2) * zv.zeta.imag());
}

double q_poly(std::size_t m, double x) {
    const SignedScaled xs = SignedScaled::from_double(x);
    SignedScaled acc = SignedScaled::zero();
    for (std::size_t j = 0; j <= m; ++j) {
        SignedScaled term;
        if (j == 0) {
            term = SignedScaled::from_log(+1, log_binomial(m + 1, 1));
        } else {
            if (xs.is_zero()) continue;
            const int sign = (xs.sign < 0 && j % 2 != 0) ? -1 : +1;
            term = SignedScaled::from_log(
                sign, (long double)j * xs.ln_mag - log_factorial(j) + log_binomial(m + 1, j + 1));
        }
        acc = ss_add(acc, term);
    }
    return acc.to_double();
}

double moment(const FreeNormalParams& p, long long ell) {
    check_params(p);
    if (ell == 0) return 1.0;
    const unsigned long l = (unsigned long)(ell < 0 ? -ell : ell);
    Big m(128);
    moment_big(p.s2, l, m);
    return m.to_double();
}

double density_series(const FreeNormalParams& p, double theta, std::size_t terms) {
    check_params(p);
    if (terms < 1) throw std::domain_error("density_series: terms must be >= 1");
    Big m(128);
    double sum = 1.0 / (2.0 * kPi);
    for (std::size_t l = 1; l <= terms; ++l) {
        moment_big(p.s2, (unsigned long)l, m);
        const double ml = m.to_double();
        sum += ml * std::cos((double)l * theta) / kPi;
        if (std::fabs(ml) < 1e-14) break;  // uniform tail bound reached
    }
    return sum;
}

double density_series_accelerated(const FreeNormalParams& p, double theta) {
    check_params(p);
    const std::size_t K = 320;  // partial sums taken this far
    const std::size_t W = 61;   // epsilon-table window (odd: final column is even)
    const mpfr_prec_t prec = 340;

    BigC S(prec);
    Big ml(prec), ang(prec), c(prec), s(prec), t(prec);
    std::vector<BigC> tail;
    tail.reserve(W);
    for (std::size_t l = 1; l <= K; ++l) {
        moment_big(p.s2, (unsigned long)l, ml);
        ang.set(theta);
        bmul_ui(ang, ang, (unsigned long)l);
        bsincos(s, c, ang);
        bmul(t, ml, c);
        badd(S.re, S.re, t);
        bmul(t, ml, s);
        badd(S.im, S.im, t);
        if (l > K - W) tail.push_back(S);
    }

    // Wynn epsilon on the last W partial sums of sum m_ell e^{i ell theta}
    std::vector<BigC> older(W + 1, BigC(prec));  // column -1: zeros
    std::vector<BigC> cur = tail;                // column 0
    BigC best = cur.back();
    BigC one(prec), diff(prec), inv(prec);
    one.re.set(1ul);
    Big t1(prec), t2(prec), t3(prec);
    for (std::size_t m = 1; m < W; ++m) {
        std::vector<BigC> next;
        next.reserve(W - m);
        bool degenerate = false;
        for (std::size_t j = 0; j + m < W; ++j) {
            bsub(diff.re, cur[j + 1].re, cur[j].re);
            bsub(diff.im, cur[j + 1].im, cur[j].im);
            if (diff.re.is_zero() && diff.im.is_zero()) {
                degenerate = true;  // series terminated exactly; keep best so far
                break;
            }
            cdiv(inv, one, diff, t1, t2, t3);
            BigC e(prec);
            badd(e.re, older[j + 1].re, inv.re);
            badd(e.im, older[j + 1].im, inv.im);
            next.push_back(e);
        }
        if (degenerate) break;
        older = std::move(cur);
        cur = std::move(next);
        if (m % 2 == 0) best = cur.back();
    }

    // f = (1 + 2 Re sum)/(2 pi)
    Big num(prec), pi(prec);
    bmul_ui(num, best.re, 2ul);
    badd_ui(num, num, 1ul);
    bconst_pi(pi);
    bmul_ui(pi, pi, 2ul);
    bdiv(num, num, pi);
    return num.to_double();
}

double cdf(const FreeNormalParams& p, double theta) {
    check_params(p);
    if (std::fabs(theta) > kPi + 1e-9) throw std::domain_error("cdf: theta must lie in [-pi, pi]");
    const double th = std::clamp(theta, -kPi, kPi);
    const double m = support_halfwidth(p);
    const double lo = -m;                 // nothing accumulates below the arc
    const double hi = std::min(th, m);
    if (hi <= lo) return 0.0;
    const double v =
        integrate_real([&](double x) { return density(p, x); }, lo, hi, p.quad_tol);
    return std::clamp(v, 0.0, 1.0);
}

std::complex<double> psi(const FreeNormalParams& p, std::complex<double> theta) {
    check_params(p);
    const auto zv = zeta(p.s2 / 4.0, theta / 2.0, p.zeta_cfg);
    const std::complex<double> num = std::complex<double>(0.0, 1.0) * (theta - 2.0 * zv.zeta);
    return num / p.s2 - 0.5;
}

std::complex<double> s_transform(const FreeNormalParams& p, std::complex<double> z) {
    check_params(p);
    return std::exp(p.s2 * (z + 0.5));
}

} // namespace uhp
