#include "uhp/heat_flow.hpp"

#include "uhp/bigfloat.hpp"
#include "uhp/errors.hpp"
#include "uhp/scaled.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace uhp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_s(double s, const char* who) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw std::domain_error(std::string(who) + ": flow time must be >= 0 and finite");
    }
}

void check_real_poly(const RealPoly& p, const char* who) {
    if (p.coeffs.size() != p.n + 1) {
        throw std::invalid_argument(std::string(who) + ": coefficient count != degree + 1");
    }
    if (p.coeffs[p.n].is_zero()) {
        throw std::invalid_argument(std::string(who) + ": leading coefficient is zero");
    }
}

void check_trig(const TrigPoly& t, const char* who) {
    if (t.c.size() != 2 * t.d + 1) {
        throw std::invalid_argument(std::string(who) + ": coefficient count != 2d + 1");
    }
    for (std::size_t j = 0; j <= t.d; ++j) {
        if (t.c[t.d - j] != std::conj(t.c[t.d + j])) {
            throw std::domain_error(std::string(who) +
                                    ": coefficients are not conjugate-symmetric");
        }
    }
    if (t.c[2 * t.d] == std::complex<double>{0.0, 0.0}) {
        throw std::domain_error(std::string(who) + ": top coefficient is zero");
    }
}

// Certified sign evaluation of a real polynomial at a real point: one MPFR
// Horner pass for the value, one for the derivative, one for the absolute
// mass sum |a_j| |x|^j that scales the error bound. Model-backed inputs are
// re-materialized at the working precision, so the bound tracks it; without
// a model the coefficients come from log-scale storage and the bound floors
// at the ~1e-19 relative noise of a stored ln_mag.
class RealScan {
public:
    explicit RealScan(const RealPoly& p, mpfr_prec_t bits)
        : n_(p.n), bits_(bits), a_(), abs_() {
        abs_.reserve(n_ + 1);
        if (p.model) {
            a_.reserve(n_ + 1);
            for (std::size_t j = 0; j <= n_; ++j) a_.emplace_back(bits);
            p.model(a_);
        } else {
            a_.reserve(n_ + 1);
            for (std::size_t j = 0; j <= n_; ++j) {
                Big b(bits);
                if (!p.coeffs[j].is_zero()) {
                    b.set(p.coeffs[j].ln_mag);
                    bexp(b, b);
                    if (p.coeffs[j].sign < 0) bneg(b, b);
                }
                a_.push_back(std::move(b));
            }
        }
        for (std::size_t j = 0; j <= n_; ++j) {
            Big ab(bits);
            babs(ab, a_[j]);
            abs_.push_back(std::move(ab));
        }
        const long double rep = p.model ? 0.0L : 1.1e-19L;
        noise_ln_ = std::log(static_cast<long double>(2 * n_ + 4) *
                             (rep + ldexpl(1.0L, 1 - static_cast<long>(bits))));
    }

    // sign: certified sign of P(x), 0 when the error bound swallows the
    // value; newton: P(x)/P'(x)
    struct Eval {
        int sign = 0;
        double newton = 0.0;
    };

    Eval eval(double x) const {
        Big bx(bits_), ax(bits_), acc(bits_), dacc(bits_), mass(bits_), t(bits_);
        bx.set(x);
        ax.set(std::fabs(x));
        for (std::size_t jj = n_ + 1; jj-- > 0;) {
            bmul(t, dacc, bx);
            badd(dacc, t, acc);
            bmul(t, acc, bx);
            badd(acc, t, a_[jj]);
            bmul(t, mass, ax);
            badd(mass, t, abs_[jj]);
        }
        Eval r;
        if (acc.ln_abs() > mass.ln_abs() + noise_ln_) r.sign = mpfr_sgn(acc.raw());
        bdiv(t, acc, dacc);
        r.newton = t.to_double();
        return r;
    }

private:
    std::size_t n_;
    mpfr_prec_t bits_;
    std::vector<Big> a_;
    std::vector<Big> abs_;
    long double noise_ln_;
};

std::vector<Big> row_buffer(std::size_t count, mpfr_prec_t bits) {
    std::vector<Big> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.emplace_back(bits);
    return v;
}

std::vector<BigC> crow_buffer(std::size_t count, mpfr_prec_t bits) {
    std::vector<BigC> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.emplace_back(bits);
    return v;
}

// Materializer for a row that carries no model of its own: reproduces, at
// the caller's precision, exactly the values the stored pairs denote.
RealCoeffModel stored_row_model(std::vector<SignedScaled> coeffs) {
    return [coeffs = std::move(coeffs)](std::vector<Big>& out) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (coeffs[j].is_zero()) {
                out[j].set_zero();
            } else {
                out[j].set(coeffs[j].ln_mag);
                bexp(out[j], out[j]);
                if (coeffs[j].sign < 0) bneg(out[j], out[j]);
            }
        }
    };
}

// Same for a double complex row, which doubles represent exactly.
CoeffModel double_row_model(std::vector<std::complex<double>> c) {
    return [c = std::move(c)](std::vector<BigC>& out) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j].set(c[j]);
    };
}

int certified_sign(const std::vector<RealScan>& rungs, double x) {
    for (const RealScan& r : rungs) {
        const int s = r.eval(x).sign;
        if (s != 0) return s;
    }
    return 0;
}

double refine_real_root(const std::vector<RealScan>& rungs, double lo, double hi, int slo) {
    while (hi - lo > 1e-4) {
        double mid = 0.5 * (lo + hi);
        int sm = certified_sign(rungs, mid);
        if (sm == 0) {
            mid = lo + 0.6180339887498949 * (hi - lo);
            sm = certified_sign(rungs, mid);
            if (sm == 0) break;
        }
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    const RealScan& fine = rungs.back();
    for (int it = 0; it < 40; ++it) {
        const double step = fine.eval(x).newton;
        if (!std::isfinite(step)) break;
        const double nx = std::min(hi, std::max(lo, x - step));
        const bool done = std::fabs(nx - x) <= 1e-15 * std::max(1.0, std::fabs(x));
        x = nx;
        if (done) break;
    }
    return x;
}

} // namespace

TrigPoly sin_half_power(std::size_t d) {
    TrigPoly t;
    t.d = d;
    t.c.assign(2 * d + 1, {0.0, 0.0});
    const double l4 = std::log(4.0);
    for (std::size_t j = 0; j <= d; ++j) {
        const double mag = std::exp(static_cast<double>(log_binomial(2 * d, d + j)) -
                                    static_cast<double>(d) * l4);
        const double v = (j % 2 == 0) ? mag : -mag;
        t.c[d + j] = {v, 0.0};
        t.c[d - j] = {v, 0.0};
    }
    t.model = [d](std::vector<BigC>& out) {
        const mpfr_prec_t bits = out[0].re.prec() + 32;
        const std::vector<Big> row = binomial_row(2 * d, bits);
        Big v(bits);
        for (std::size_t idx = 0; idx <= 2 * d; ++idx) {
            v.set(row[idx]);
            mpfr_div_2ui(v.raw(), v.raw(), static_cast<unsigned long>(2 * d), MPFR_RNDN);
            if ((idx + d) % 2 != 0) bneg(v, v);
            out[idx].re.set(v);
            out[idx].im.set_zero();
        }
    };
    return t;
}

TrigPoly trig_from_circle(const CirclePoly& p) {
    if (p.coeffs.size() != p.n + 1)
        throw std::invalid_argument("trig_from_circle: coefficient row does not match degree");
    if (p.n == 0 || p.n % 2 != 0)
        throw std::invalid_argument("trig_from_circle: degree must be even and positive");
    const std::size_t n = p.n;
    const std::size_t d = n / 2;

    std::vector<std::complex<double>> v(n + 1);
    double peak = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        v[j] = p.coeffs[j].to_complex();
        if (!std::isfinite(v[j].real()) || !std::isfinite(v[j].imag()))
            throw std::invalid_argument("trig_from_circle: coefficients exceed double range");
        peak = std::max(peak, std::abs(v[j]));
    }
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        plus = std::max(plus, std::abs(v[j] - std::conj(v[n - j])));
        minus = std::max(minus, std::abs(v[j] + std::conj(v[n - j])));
    }
    const double tol = 1e-12 * peak;
    std::complex<double> factor;
    if (plus <= tol) {
        factor = {1.0, 0.0};
    } else if (minus <= tol) {
        factor = {0.0, 1.0};
    } else {
        throw std::invalid_argument(
            "trig_from_circle: coefficient row is not conjugate-symmetric up to sign");
    }

    TrigPoly t;
    t.d = d;
    t.c.assign(n + 1, {0.0, 0.0});
    for (std::size_t l = 0; l <= d; ++l) {
        const std::complex<double> cl =
            0.5 * (factor * v[d + l] + std::conj(factor * v[d - l]));
        t.c[d + l] = cl;
        if (l > 0) t.c[d - l] = std::conj(cl);
    }
    if (p.model) {
        if (factor.real() == 1.0) {
            t.model = p.model;
        } else {
            const CoeffModel inner = p.model;
            t.model = [inner](std::vector<BigC>& out) {
                inner(out);
                for (BigC& e : out) {  // multiply by i: (re, im) -> (-im, re)
                    mpfr_swap(e.re.raw(), e.im.raw());
                    bneg(e.re, e.re);
                }
            };
        }
    }
    return t;
}

RealPoly backward_heat_algebraic(const RealPoly& p, double s) {
    check_s(s, "backward_heat_algebraic");
    check_real_poly(p, "backward_heat_algebraic");
    if (s == 0.0) return p;

    const long double lhalf = std::log(static_cast<long double>(s) / 2.0L);
    RealPoly out;
    out.n = p.n;
    out.coeffs.assign(p.n + 1, SignedScaled::zero());
    for (std::size_t j = 0; j <= p.n; ++j) {
        SignedScaled acc = SignedScaled::zero();
        for (std::size_t m = 0; j + 2 * m <= p.n; ++m) {
            const SignedScaled& a = p.coeffs[j + 2 * m];
            if (a.is_zero()) continue;
            const long double lf = static_cast<long double>(m) * lhalf - log_factorial(m) +
                                   log_factorial(j + 2 * m) - log_factorial(j);
            const int sg = (m % 2 == 0) ? +1 : -1;
            acc = ss_add(acc, ss_mul(a, SignedScaled::from_log(sg, lf)));
        }
        out.coeffs[j] = acc;
    }
    const RealCoeffModel inner = p.model ? p.model : stored_row_model(p.coeffs);
    const std::size_t deg = p.n;
    out.model = [inner, deg, s](std::vector<Big>& row) {
        const mpfr_prec_t bits = row[0].prec() + 32;
        std::vector<Big> av = row_buffer(deg + 1, bits);
        inner(av);
        Big half(bits), f(bits), t(bits), acc(bits);
        half.set(s);
        bdiv_ui(half, half, 2ul);
        for (std::size_t j = 0; j <= deg; ++j) {
            acc.set(av[j]);
            // f walks (-s/2)^m (j+2m)! / (m! j!) up in m
            f.set(1ul);
            for (std::size_t m = 1; j + 2 * m <= deg; ++m) {
                bmul(f, f, half);
                bmul_ui(f, f, static_cast<unsigned long>((j + 2 * m) * (j + 2 * m - 1)));
                bdiv_ui(f, f, static_cast<unsigned long>(m));
                bneg(f, f);
                bmul(t, f, av[j + 2 * m]);
                badd(acc, acc, t);
            }
            row[j].set(acc);
        }
    };
    return out;
}

TrigPoly backward_heat_trig(const TrigPoly& t, double s) {
    check_s(s, "backward_heat_trig");
    check_trig(t, "backward_heat_trig");
    TrigPoly out = t;
    for (std::size_t j = 0; j < out.c.size(); ++j) {
        const double l = static_cast<double>(j) - static_cast<double>(t.d);
        out.c[j] *= std::exp(0.5 * s * l * l);
    }
    const CoeffModel inner = t.model ? t.model : double_row_model(t.c);
    const std::size_t d = t.d;
    out.model = [inner, d, s](std::vector<BigC>& row) {
        const mpfr_prec_t bits = row[0].re.prec() + 32;
        std::vector<BigC> cv = crow_buffer(2 * d + 1, bits);
        inner(cv);
        Big f(bits);
        for (std::size_t idx = 0; idx <= 2 * d; ++idx) {
            const long long l = static_cast<long long>(idx) - static_cast<long long>(d);
            f.set(s);
            bdiv_ui(f, f, 2ul);
            bmul_ui(f, f, static_cast<unsigned long>(l * l));
            bexp(f, f);
            bmul(cv[idx].re, cv[idx].re, f);
            bmul(cv[idx].im, cv[idx].im, f);
            row[idx].re.set(cv[idx].re);
            row[idx].im.set(cv[idx].im);
        }
    };
    return out;
}

RealPoly hermite_flow_kernel(std::size_t n, double s) {
    check_s(s, "hermite_flow_kernel");
    RealPoly he = classical_hermite(n);
    if (s == 0.0) {
        for (std::size_t j = 0; j < n; ++j) he.coeffs[j] = SignedScaled::zero();
        he.model = [n](std::vector<Big>& row) {
            for (std::size_t j = 0; j < n; ++j) row[j].set_zero();
            row[n].set(1ul);
        };
        return he;
    }
    const long double ls = std::log(static_cast<long double>(s));
    for (std::size_t j = 0; j <= n; ++j) {
        if (!he.coeffs[j].is_zero()) {
            he.coeffs[j].ln_mag += 0.5L * static_cast<long double>(n - j) * ls;
        }
    }
    he.model = [n, s](std::vector<Big>& row) {
        const mpfr_prec_t bits = row[0].prec() + 32;
        Big half(bits), f(bits);
        half.set(s);
        bdiv_ui(half, half, 2ul);
        for (std::size_t j = 0; j < n; ++j) row[j].set_zero();
        // f walks (-s/2)^m n! / (m! (n-2m)!) down from the leading one
        f.set(1ul);
        row[n].set(f);
        for (std::size_t m = 1; 2 * m <= n; ++m) {
            const std::size_t j = n - 2 * m;
            bmul(f, f, half);
            bmul_ui(f, f, static_cast<unsigned long>((j + 2) * (j + 1)));
            bdiv_ui(f, f, static_cast<unsigned long>(m));
            bneg(f, f);
            row[j].set(f);
        }
    };
    return he;
}

std::vector<double> real_roots_algebraic(const RealPoly& p) {
    check_real_poly(p, "real_roots_algebraic");
    const std::size_t n = p.n;
    if (n == 0) return {};

    // coefficient root bound; no lower coefficients at all means z^n scaled
    long double bln = -std::numeric_limits<long double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        if (p.coeffs[j].is_zero()) continue;
        bln = std::max(bln, (p.coeffs[j].ln_mag - p.coeffs[n].ln_mag) /
                                static_cast<long double>(n - j));
    }
    if (bln == -std::numeric_limits<long double>::infinity()) {
        return std::vector<double>(n, 0.0);
    }
    const double bound = 2.0 * static_cast<double>(std::exp(bln));

    const std::vector<RealScan> rungs = [&] {
        std::vector<RealScan> r;
        r.emplace_back(p, 192);
        r.emplace_back(p, 384);
        return r;
    }();

    std::size_t best = 0;
    for (int attempt = 0; attempt < 7; ++attempt) {
        const std::size_t m = (8 * n) << attempt;
        const double step = 2.0 * bound / static_cast<double>(m);
        std::vector<double> xs(m + 1);
        std::vector<int> sg(m + 1, 0);
        bool decided = true;
        for (std::size_t i = 0; i <= m; ++i) {
            double x = -bound + step * static_cast<double>(i);
            int s = certified_sign(rungs, x);
            if (s == 0) {
                // node sat on a root; shift it off by an irrational fraction
                x += 0.3819660112501051 * step;
                s = certified_sign(rungs, x);
            }
            if (s == 0) {
                decided = false;
                break;
            }
            xs[i] = x;
            sg[i] = s;
        }
        if (!decided) continue;

        struct Bracket {
            double lo, hi;
            int slo;
        };
        std::vector<Bracket> brackets;
        for (std::size_t i = 0; i < m; ++i) {
            if (sg[i] != sg[i + 1]) brackets.push_back({xs[i], xs[i + 1], sg[i]});
        }
        best = std::max(best, brackets.size());
        if (brackets.size() != n) continue;

        std::vector<double> roots;
        roots.reserve(n);
        for (const Bracket& b : brackets) {
            roots.push_back(refine_real_root(rungs, b.lo, b.hi, b.slo));
        }
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "real_roots_algebraic: certified %zu sign changes for degree %zu; the "
                  "input is not real-rooted with separable simple roots",
                  best, n);
    throw CertificationError(msg);
}

EmpiricalCircleMeasure trig_roots(const TrigPoly& t, const EvalPrecision& prec) {
    check_trig(t, "trig_roots");
    if (t.d == 0) throw std::invalid_argument("trig_roots: constant input has no roots");
    const std::size_t d = t.d, n = 2 * d;
    const std::complex<double> lead = t.c[2 * d];

    // Rotate z = e^{i psi} u so the root product of the u-polynomial is one,
    // which makes coeff[j] == conj(coeff[n-j]) the exact symmetry to enforce.
    const double psi = -std::arg(lead) / static_cast<double>(d);
    std::vector<std::complex<double>> q(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double ang = (static_cast<double>(j) - static_cast<double>(n)) * psi;
        q[j] = t.c[j] / lead * std::polar(1.0, ang);
    }
    q[n] = {1.0, 0.0};
    q[0] = {1.0, 0.0};
    for (std::size_t j = 1; 2 * j < n; ++j) {
        const std::complex<double> avg = 0.5 * (q[j] + std::conj(q[n - j]));
        q[j] = avg;
        q[n - j] = std::conj(avg);
    }
    q[d] = {q[d].real(), 0.0};

    CirclePoly cp;
    cp.n = n;
    cp.coeffs.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) cp.coeffs.push_back(SSComplex::from_complex(q[j]));
    cp.self_inversive = true;
    // The certified evaluator re-derives the rotated row at each precision:
    // w_j = (c_{j-d}/c_d) e^{i(j-n)psi}, then the pairwise average
    // (w_j + conj(w_{n-j}))/2. In exact arithmetic that average is a global
    // complex scalar times the rotated polynomial (the scalar absorbs the
    // residual phase the rounded psi leaves behind), so it is exactly
    // conjugate-symmetric and keeps exactly the rotated roots.
    const CoeffModel inner = t.model ? t.model : double_row_model(t.c);
    cp.model = [inner, n, psi](std::vector<BigC>& out) {
        const mpfr_prec_t bits = out[0].re.prec() + 32;
        std::vector<BigC> cv = crow_buffer(n + 1, bits);
        inner(cv);
        std::vector<BigC> w = crow_buffer(n + 1, bits);
        BigC rot(bits), tmp(bits);
        Big t1(bits), t2(bits), t3(bits), ang(bits);
        for (std::size_t j = 0; j <= n; ++j) {
            ang.set(psi);
            mpfr_mul_si(ang.raw(), ang.raw(), static_cast<long>(j) - static_cast<long>(n),
                        MPFR_RNDN);
            bsincos(rot.im, rot.re, ang);
            cdiv(tmp, cv[j], cv[n], t1, t2, t3);
            cmul(w[j], tmp, rot, t1, t2);
        }
        for (std::size_t j = 0; j <= n; ++j) {
            badd(t1, w[j].re, w[n - j].re);
            bdiv_ui(t1, t1, 2ul);
            bsub(t2, w[j].im, w[n - j].im);
            bdiv_ui(t2, t2, 2ul);
            out[j].re.set(t1);
            out[j].im.set(t2);
        }
    };

    EmpiricalCircleMeasure mu = find_roots(cp, prec);
    for (double& a : mu.angles) {
        double th = std::remainder(a + psi, 2.0 * kPi);
        if (th <= -kPi) th += 2.0 * kPi;
        a = th;
    }
    std::sort(mu.angles.begin(), mu.angles.end());
    return mu;
}

namespace {

// sum over r nonnegative indices adding to t of products m_{i_1}...m_{i_r},
// with m[0] = 1; reads m[0..t] only
double composition_sum(const std::vector<double>& m, std::size_t r, std::size_t t) {
    std::vector<double> cur(t + 1, 0.0);
    cur[0] = 1.0;
    for (std::size_t s = 0; s < r; ++s) {
        std::vector<double> nxt(t + 1, 0.0);
        for (std::size_t u = 0; u <= t; ++u) {
            if (cur[u] == 0.0) continue;
            for (std::size_t v = 0; u + v <= t; ++v) nxt[u + v] += cur[u] * m[v];
        }
        cur = std::move(nxt);
    }
    return cur[t];
}

void check_order(std::size_t k, const char* who) {
    if (k > 8) {
        throw std::invalid_argument(std::string(who) + ": recursion is wired for order <= 8");
    }
}

} // namespace

std::vector<double> free_cumulants_from_moments(const std::vector<double>& m) {
    check_order(m.size(), "free_cumulants_from_moments");
    const std::size_t K = m.size();
    std::vector<double> mfull(K + 1, 0.0);
    mfull[0] = 1.0;
    for (std::size_t i = 0; i < K; ++i) mfull[i + 1] = m[i];
    std::vector<double> k(K, 0.0);
    for (std::size_t nn = 1; nn <= K; ++nn) {
        double rest = 0.0;
        for (std::size_t r = 1; r < nn; ++r) {
            rest += k[r - 1] * composition_sum(mfull, r, nn - r);
        }
        k[nn - 1] = mfull[nn] - rest;
    }
    return k;
}

std::vector<double> moments_from_free_cumulants(const std::vector<double>& k) {
    check_order(k.size(), "moments_from_free_cumulants");
    const std::size_t K = k.size();
    std::vector<double> mfull(K + 1, 0.0);
    mfull[0] = 1.0;
    for (std::size_t nn = 1; nn <= K; ++nn) {
        double s = 0.0;
        for (std::size_t r = 1; r <= nn; ++r) {
            s += k[r - 1] * composition_sum(mfull, r, nn - r);
        }
        mfull[nn] = s;
    }
    return {mfull.begin() + 1, mfull.end()};
}

} // namespace uhp
