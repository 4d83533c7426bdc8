#include "uhp/circle_roots.hpp"

#include "uhp/errors.hpp"
#include "uhp/scaled.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace uhp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// split an MPFR value into hi + lo doubles (value must fit double range)
detail::dd split_big(const Big& x, Big& scratch) {
    const double hi = x.to_double();
    scratch.set(hi);
    bsub(scratch, x, scratch);
    return {hi, scratch.to_double()};
}

detail::dd split_ld(long double v) {
    const double hi = static_cast<double>(v);
    return {hi, static_cast<double>(v - static_cast<long double>(hi))};
}

detail::dd dd_of(const SignedScaled& s, long double peak) {
    if (s.sign == 0) return {0.0, 0.0};
    return split_ld(static_cast<long double>(s.sign) * std::exp(s.ln_mag - peak));
}

void set_from_ss(Big& out, const SignedScaled& s, long double peak, Big& scratch) {
    if (s.sign == 0) {
        out.set_zero();
        return;
    }
    scratch.set(s.ln_mag - peak);
    bexp(out, scratch);
    if (s.sign < 0) bneg(out, out);
}

} // namespace

CircleScaledEvaluator::CircleScaledEvaluator(const CirclePoly& p, const EvalPrecision& cfg)
    : n_(p.n), kappa_(static_cast<int>(p.n & 1)), rungs_(precision_rungs(cfg)) {
    if (!p.self_inversive)
        throw std::domain_error("circle evaluator: polynomial is not self-inversive");
    if (p.n < 1 || p.coeffs.size() != p.n + 1)
        throw std::invalid_argument("circle evaluator: coefficient array does not match degree");

    long double peak = 0.0L;  // the monic leading coefficient has log 0
    for (const auto& c : p.coeffs) peak = std::max(peak, c.ln_max());

    coef_noise_ = p.model ? 0.0 : 1.1e-19;

    // double-double table (used by rungs of <= 32 digits)
    ddcoef_.resize(n_ + 1);
    if (p.model) {
        std::vector<BigC> hi(n_ + 1, BigC(128));
        p.model(hi);
        Big f(128), scratch(128);
        f.set(peak);
        bneg(f, f);
        bexp(f, f);
        for (std::size_t j = 0; j <= n_; ++j) {
            bmul(hi[j].re, hi[j].re, f);
            bmul(hi[j].im, hi[j].im, f);
            ddcoef_[j] = {split_big(hi[j].re, scratch), split_big(hi[j].im, scratch)};
        }
    } else {
        for (std::size_t j = 0; j <= n_; ++j)
            ddcoef_[j] = {dd_of(p.coeffs[j].re, peak), dd_of(p.coeffs[j].im, peak)};
    }

    // |re| + |im| overestimates |c| by at most sqrt(2): fine for a bound
    for (const auto& c : ddcoef_) sum_abs_ += std::fabs(c.re.hi) + std::fabs(c.im.hi);
    sum_abs_ *= 1.0 + 1e-12;

    // MPFR tables for the higher rungs
    mp_.resize(rungs_.size());
    for (std::size_t k = 0; k < rungs_.size(); ++k) {
        if (rungs_[k] <= 32) continue;
        const mpfr_prec_t prec = bits_for_digits(rungs_[k]);
        mp_[k].assign(n_ + 1, BigC(prec));
        if (p.model) {
            p.model(mp_[k]);
            Big f(prec);
            f.set(peak);
            bneg(f, f);
            bexp(f, f);
            for (auto& c : mp_[k]) {
                bmul(c.re, c.re, f);
                bmul(c.im, c.im, f);
            }
        } else {
            Big scratch(prec);
            for (std::size_t j = 0; j <= n_; ++j) {
                set_from_ss(mp_[k][j].re, p.coeffs[j].re, peak, scratch);
                set_from_ss(mp_[k][j].im, p.coeffs[j].im, peak, scratch);
            }
        }
    }
}

CircleEval CircleScaledEvaluator::eval(double theta, int digits) const {
    std::size_t k = rungs_.size() - 1;
    for (std::size_t i = 0; i < rungs_.size(); ++i) {
        if (rungs_[i] >= digits) {
            k = i;
            break;
        }
    }
    return rungs_[k] <= 32 ? eval_dd(theta) : eval_mpfr(theta, k);
}

CircleEval CircleScaledEvaluator::eval_dd(double theta) const {
    using namespace detail;
    // trig comes from one 128-bit pass so the double-double stage is not
    // capped by libm's double-precision sin/cos
    Big th(128), ang(128), s(128), c(128), scratch(128);
    th.set(theta);
    bsincos(s, c, th);
    const ddc w{split_big(c, scratch), split_big(s, scratch)};
    bmul_ui(ang, th, static_cast<unsigned long>(n_));
    bdiv_ui(ang, ang, 2ul);
    bneg(ang, ang);
    bsincos(s, c, ang);
    const ddc rot{split_big(c, scratch), split_big(s, scratch)};

    ddc acc = ddcoef_[n_];
    ddc dacc{};
    for (std::size_t j = n_; j-- > 0;) {
        dacc = ddc_add(ddc_mul(dacc, w), acc);
        acc = ddc_add(ddc_mul(acc, w), ddcoef_[j]);
    }

    const ddc T = ddc_mul(rot, acc);
    const dd half_n = dd_from(0.5 * static_cast<double>(n_));
    ddc u = ddc_mul(w, dacc);
    u.re = dd_sub(u.re, dd_mul(acc.re, half_n));
    u.im = dd_sub(u.im, dd_mul(acc.im, half_n));
    const ddc v = ddc_mul(rot, u);  // derivative is i times this

    CircleEval out;
    out.value = kappa_ ? T.im.hi + T.im.lo : T.re.hi + T.re.lo;
    out.derivative = kappa_ ? v.re.hi + v.re.lo : -(v.im.hi + v.im.lo);
    out.error =
        (std::ldexp(1.0, -99) * (2.0 * static_cast<double>(n_) + 4.0) +
         coef_noise_ * (static_cast<double>(n_) + 2.0)) *
        sum_abs_;
    return out;
}

CircleEval CircleScaledEvaluator::eval_mpfr(double theta, std::size_t rung) const {
    const mpfr_prec_t prec = bits_for_digits(rungs_[rung]);
    const std::vector<BigC>& coef = mp_[rung];
    Big th(prec), ang(prec), t1(prec), t2(prec);
    BigC w(prec), rot(prec), acc(prec), dacc(prec), tmp(prec), u(prec);

    th.set(theta);
    bsincos(w.im, w.re, th);
    bmul_ui(ang, th, static_cast<unsigned long>(n_));
    bdiv_ui(ang, ang, 2ul);
    bneg(ang, ang);
    bsincos(rot.im, rot.re, ang);

    acc.re.set(coef[n_].re);
    acc.im.set(coef[n_].im);
    for (std::size_t j = n_; j-- > 0;) {
        cmul(tmp, dacc, w, t1, t2);
        cadd(dacc, tmp, acc);
        cmul(tmp, acc, w, t1, t2);
        cadd(acc, tmp, coef[j]);
    }

    CircleEval out;
    cmul(tmp, rot, acc, t1, t2);
    out.value = kappa_ ? tmp.im.to_double() : tmp.re.to_double();

    cmul(u, w, dacc, t1, t2);
    bmul_ui(t1, acc.re, static_cast<unsigned long>(n_));
    bdiv_ui(t1, t1, 2ul);
    bsub(u.re, u.re, t1);
    bmul_ui(t1, acc.im, static_cast<unsigned long>(n_));
    bdiv_ui(t1, t1, 2ul);
    bsub(u.im, u.im, t1);
    cmul(tmp, rot, u, t1, t2);
    out.derivative = kappa_ ? tmp.re.to_double() : -tmp.im.to_double();

    out.error =
        (std::ldexp(1.0, 1 - static_cast<int>(prec)) * (2.0 * static_cast<double>(n_) + 4.0) +
         coef_noise_ * (static_cast<double>(n_) + 2.0)) *
        sum_abs_;
    return out;
}

CircleEval circle_function(const CirclePoly& p, double theta, int digits) {
    return CircleScaledEvaluator(p).eval(theta, digits);
}

namespace {

// sign certified against the evaluation error bound, escalating through the
// rungs; 0 means undecidable at the top of the ladder
int certified_sign(const CircleScaledEvaluator& ev, double theta) {
    for (int digits : ev.rungs()) {
        const CircleEval e = ev.eval(theta, digits);
        if (std::fabs(e.value) > e.error) return e.value > 0.0 ? +1 : -1;
    }
    return 0;
}

// bisect a certified bracket to 1e-4, Newton-polish, certify +-5e-13
bool refine_root(const CircleScaledEvaluator& ev, double lo, double hi, int sign_lo,
                 double* root) {
    while (hi - lo > 1e-4) {
        double mid = 0.5 * (lo + hi);
        int sm = certified_sign(ev, mid);
        if (sm == 0) {
            // the midpoint can sit exactly on the zero; retry off-center
            mid = lo + 0.6180339887498949 * (hi - lo);
            sm = certified_sign(ev, mid);
            if (sm == 0) return false;
        }
        if (sm == sign_lo)
            lo = mid;
        else
            hi = mid;
    }

    double x = 0.5 * (lo + hi);
    for (int digits : ev.rungs()) {
        for (int it = 0; it < 30; ++it) {
            const CircleEval e = ev.eval(x, digits);
            if (e.derivative == 0.0) break;
            double xn = x - e.value / e.derivative;
            // roots can sit at the bracket edge to within an ulp, so clamp
            // to the closed interval rather than re-centering
            if (!std::isfinite(xn)) break;
            if (xn < lo) xn = lo;
            if (xn > hi) xn = hi;
            const double step = std::fabs(xn - x);
            x = xn;
            if (step < 1e-16) break;
        }
        const int sm = certified_sign(ev, x - 5e-13);
        const int sp = certified_sign(ev, x + 5e-13);
        if (sm != 0 && sp != 0 && sm != sp) {
            *root = x;
            return true;
        }
    }
    return false;
}

} // namespace

EmpiricalCircleMeasure find_roots(const CirclePoly& p, const EvalPrecision& cfg,
                                  std::size_t grid_multiplier) {
    if (p.n < 1) throw std::invalid_argument("find_roots: degree must be >= 1");
    if (grid_multiplier < 2)
        throw std::invalid_argument("find_roots: grid_multiplier must be >= 2");

    if (p.known_roots) {
        EmpiricalCircleMeasure mu;
        mu.angles = *p.known_roots;
        std::sort(mu.angles.begin(), mu.angles.end());
        mu.enclosure_width = 0.0;
        return mu;
    }

    const CircleScaledEvaluator ev(p, cfg);
    std::size_t last_count = 0;
    for (int attempt = 0; attempt <= 6; ++attempt) {
        const std::size_t M = (grid_multiplier * p.n) << attempt;
        std::vector<double> node(M);
        std::vector<int> sign(M);
        bool scan_ok = true;
        for (std::size_t i = 0; i < M && scan_ok; ++i) {
            node[i] = -kPi + 2.0 * kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(M);
            sign[i] = certified_sign(ev, node[i]);
            if (sign[i] == 0) scan_ok = false;  // node too close to a zero: shift the grid
        }
        if (!scan_ok) continue;

        // cyclic brackets; over a full turn the profile picks up (-1)^n
        std::vector<std::pair<double, int>> lo_end;
        for (std::size_t i = 0; i < M; ++i) {
            const int s_next = (i + 1 < M) ? sign[i + 1] : (p.n % 2 == 0 ? sign[0] : -sign[0]);
            if (sign[i] != s_next) lo_end.emplace_back(node[i], static_cast<int>(i));
        }
        last_count = lo_end.size();
        if (lo_end.size() != p.n) continue;

        EmpiricalCircleMeasure mu;
        mu.angles.reserve(p.n);
        bool refined = true;
        for (const auto& [a, i] : lo_end) {
            const double b =
                (static_cast<std::size_t>(i) + 1 < M) ? node[i + 1] : node[0] + 2.0 * kPi;
            double r;
            if (!refine_root(ev, a, b, sign[i], &r)) {
                refined = false;
                break;
            }
            if (r > kPi) r -= 2.0 * kPi;
            mu.angles.push_back(r);
        }
        if (!refined) continue;

        std::sort(mu.angles.begin(), mu.angles.end());
        mu.enclosure_width = 1e-12;
        return mu;
    }

    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "find_roots: certified %zu sign changes for degree %zu after grid refinement; "
                  "zeros are off the circle, multiple, or too close to separate",
                  last_count, p.n);
    throw CertificationError(msg);
}

std::complex<double> empirical_moment(const EmpiricalCircleMeasure& mu, long long k) {
    if (mu.angles.empty()) throw std::invalid_argument("empirical_moment: empty measure");
    double sre = 0.0, cre = 0.0, sim = 0.0, cim = 0.0;
    for (const double th : mu.angles) {
        const double a = static_cast<double>(k) * th;
        double y = std::cos(a) - cre;
        double t = sre + y;
        cre = (t - sre) - y;
        sre = t;
        y = std::sin(a) - cim;
        t = sim + y;
        cim = (t - sim) - y;
        sim = t;
    }
    const double N = static_cast<double>(mu.angles.size());
    return {sre / N, sim / N};
}

std::vector<std::complex<double>> newton_girard_reference(const CirclePoly& p, std::size_t K) {
    if (p.n < 1 || p.coeffs.size() != p.n + 1)
        throw std::invalid_argument("newton_girard_reference: bad polynomial");
    if (K < 1) throw std::invalid_argument("newton_girard_reference: K must be >= 1");

    // the identities cancel down from the largest e_k in play
    long double loss_ln = 0.0L;
    for (std::size_t k = 1; k <= std::min(K, p.n); ++k)
        loss_ln = std::max(loss_ln, p.coeffs[p.n - k].ln_max());
    const int digits =
        40 + static_cast<int>(std::ceil((static_cast<double>(loss_ln) +
                                         std::log(static_cast<double>(p.n))) /
                                        2.302585092994046));
    const mpfr_prec_t prec = bits_for_digits(digits);

    std::vector<BigC> a(p.n + 1, BigC(prec));
    if (p.model) {
        p.model(a);
    } else {
        Big scratch(prec);
        for (std::size_t j = 0; j <= p.n; ++j) {
            set_from_ss(a[j].re, p.coeffs[j].re, 0.0L, scratch);
            set_from_ss(a[j].im, p.coeffs[j].im, 0.0L, scratch);
        }
    }

    // e_k = (-1)^k a_{n-k} (monic); e_k = 0 past the degree
    std::vector<BigC> e(K + 1, BigC(prec)), ps(K + 1, BigC(prec));
    e[0].re.set(1ul);
    for (std::size_t k = 1; k <= K && k <= p.n; ++k) {
        e[k].re.set(a[p.n - k].re);
        e[k].im.set(a[p.n - k].im);
        if (k % 2 != 0) {
            bneg(e[k].re, e[k].re);
            bneg(e[k].im, e[k].im);
        }
    }

    Big t1(prec), t2(prec);
    BigC term(prec);
    for (std::size_t k = 1; k <= K; ++k) {
        // p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}
        if (k <= p.n) {
            bmul_ui(ps[k].re, e[k].re, static_cast<unsigned long>(k));
            bmul_ui(ps[k].im, e[k].im, static_cast<unsigned long>(k));
            if (k % 2 == 0) {
                bneg(ps[k].re, ps[k].re);
                bneg(ps[k].im, ps[k].im);
            }
        }
        for (std::size_t i = 1; i < k; ++i) {
            cmul(term, e[i], ps[k - i], t1, t2);
            if (i % 2 == 0) {
                bneg(term.re, term.re);
                bneg(term.im, term.im);
            }
            cadd(ps[k], ps[k], term);
        }
    }

    std::vector<std::complex<double>> out(K);
    Big nn(prec);
    nn.set(static_cast<unsigned long>(p.n));
    for (std::size_t k = 1; k <= K; ++k) {
        bdiv(ps[k].re, ps[k].re, nn);
        bdiv(ps[k].im, ps[k].im, nn);
        out[k - 1] = ps[k].to_complex();
    }
    return out;
}

std::complex<double> psi_empirical(const EmpiricalCircleMeasure& mu, std::complex<double> z) {
    if (mu.angles.empty()) throw std::invalid_argument("psi_empirical: empty measure");
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("psi_empirical: requires |z| < 1");
    std::complex<double> sum = 0.0;
    for (const double th : mu.angles) {
        const std::complex<double> u = z * std::polar(1.0, th);
        sum += u / (1.0 - u);
    }
    return sum / static_cast<double>(mu.angles.size());
}

double kolmogorov_distance(const EmpiricalCircleMeasure& mu,
                           const std::function<double(double)>& cdf) {
    if (mu.angles.empty()) throw std::invalid_argument("kolmogorov_distance: empty measure");
    std::vector<double> a = mu.angles;
    std::sort(a.begin(), a.end());
    const double N = static_cast<double>(a.size());
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double F = cdf(a[j]);
        d = std::max(d, std::fabs(F - static_cast<double>(j) / N));
        d = std::max(d, std::fabs(static_cast<double>(j + 1) / N - F));
    }
    return d;
}

} // namespace uhp
