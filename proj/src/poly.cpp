#include "uhp/poly.hpp"

#include "uhp/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uhp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<BigC> model_buffer(std::size_t count, mpfr_prec_t bits) {
    std::vector<BigC> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.emplace_back(bits);
    return v;
}

void set_scaled(Big& out, const SignedScaled& s, long double shift, Big& scratch) {
    if (s.is_zero()) {
        out.set_zero();
        return;
    }
    scratch.set(s.ln_mag - shift);
    bexp(out, scratch);
    if (s.sign < 0) bneg(out, out);
}

bool ln_close(long double x, long double y) {
    const long double d = std::fabs(x - y);
    const long double s = std::max({1.0L, std::fabs(x), std::fabs(y)});
    return d <= 1e-12L * s;
}

} // namespace

CirclePoly unitary_hermite(std::size_t n, double s2) {
    if (n < 1) throw std::domain_error("unitary_hermite: degree must be >= 1");
    if (s2 < 0.0) throw std::domain_error("unitary_hermite: s2 must be >= 0");
    CirclePoly p;
    p.n = n;
    p.coeffs.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const long double w = static_cast<long double>(j) * static_cast<long double>(n - j);
        const long double ln = log_binomial(n, j) - static_cast<long double>(s2) * w / 2.0L;
        const int sign = ((n - j) % 2 == 0) ? +1 : -1;
        p.coeffs[j].re = SignedScaled::from_log(sign, ln);
        p.coeffs[j].im = SignedScaled::zero();
    }
    p.self_inversive = true;
    p.model = [n, s2](std::vector<BigC>& out) {
        const mpfr_prec_t bits = out[0].re.prec();
        const std::vector<Big> binrow = binomial_row(n, bits);
        Big t(bits);
        for (std::size_t j = 0; j <= n; ++j) {
            t.set(s2);
            bmul_ui(t, t, static_cast<unsigned long>(j * (n - j)));
            bdiv_ui(t, t, 2ul);
            bneg(t, t);
            bexp(t, t);
            bmul(out[j].re, t, binrow[j]);
            if ((n - j) % 2 != 0) bneg(out[j].re, out[j].re);
            out[j].im.set_zero();
        }
    };
    if (s2 == 0.0) p.known_roots = std::vector<double>(n, 0.0);
    return p;
}

RealPoly classical_hermite(std::size_t n) {
    RealPoly p;
    p.n = n;
    p.coeffs.assign(n + 1, SignedScaled::zero());
    const long double ln2 = std::log(2.0L);
    for (std::size_t m = 0; 2 * m <= n; ++m) {
        const long double ln = log_factorial(n) - log_factorial(m) -
                               static_cast<long double>(m) * ln2 - log_factorial(n - 2 * m);
        p.coeffs[n - 2 * m] = SignedScaled::from_log((m % 2 == 0) ? +1 : -1, ln);
    }
    return p;
}

RealPoly finite_free_add(const RealPoly& p, const RealPoly& q, std::size_t n) {
    if (p.n > n || q.n > n)
        throw std::domain_error("finite_free_add: stated degree exceeds n");
    const auto a = [&](std::size_t i) {
        return i <= p.n ? p.coeffs[i] : SignedScaled::zero();
    };
    const auto b = [&](std::size_t i) {
        return i <= q.n ? q.coeffs[i] : SignedScaled::zero();
    };
    std::vector<SignedScaled> c(n + 1, SignedScaled::zero());
    const long double lfn = log_factorial(n);
    for (std::size_t l = 0; l <= n; ++l) {
        const long double lfl = log_factorial(l);
        SignedScaled acc = SignedScaled::zero();
        // i + j = n + l with both indices in [0, n] forces i >= l.
        for (std::size_t i = l; i <= n; ++i) {
            const std::size_t j = n + l - i;
            SignedScaled term = ss_mul(a(i), b(j));
            if (term.is_zero()) continue;
            term.ln_mag += log_factorial(i) + log_factorial(j) - lfn - lfl;
            acc = ss_add(acc, term);
        }
        c[l] = acc;
    }
    std::size_t deg = n;
    while (deg > 0 && c[deg].is_zero()) --deg;
    RealPoly r;
    r.n = deg;
    r.coeffs.assign(c.begin(), c.begin() + deg + 1);
    return r;
}

CirclePoly finite_free_mult(const CirclePoly& p, const CirclePoly& q, std::size_t n) {
    if (p.n != n || q.n != n)
        throw std::domain_error("finite_free_mult: both inputs must have stated degree n");
    CirclePoly r;
    r.n = n;
    r.coeffs.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const SignedScaled f =
            SignedScaled::from_log(((n - j) % 2 == 0) ? +1 : -1, -log_binomial(n, j));
        r.coeffs[j] = ss_mul(f, ss_mul(p.coeffs[j], q.coeffs[j]));
    }
    r.scale = ss_mul(p.scale, q.scale);
    r.self_inversive = p.self_inversive && q.self_inversive;
    if (p.model && q.model) {
        const CoeffModel pm = p.model;
        const CoeffModel qm = q.model;
        r.model = [pm, qm, n](std::vector<BigC>& out) {
            const mpfr_prec_t bits = out[0].re.prec();
            auto av = model_buffer(n + 1, bits);
            auto bv = model_buffer(n + 1, bits);
            pm(av);
            qm(bv);
            const std::vector<Big> binrow = binomial_row(n, bits);
            Big t1(bits), t2(bits);
            for (std::size_t j = 0; j <= n; ++j) {
                cmul(out[j], av[j], bv[j], t1, t2);
                bdiv(out[j].re, out[j].re, binrow[j]);
                bdiv(out[j].im, out[j].im, binrow[j]);
                if ((n - j) % 2 != 0) {
                    bneg(out[j].re, out[j].re);
                    bneg(out[j].im, out[j].im);
                }
            }
        };
    }
    return r;
}

CirclePoly demoivre_base(std::size_t d, double sigma, std::size_t N) {
    if (d < 1 || N < 1) throw std::domain_error("demoivre_base: need d >= 1 and N >= 1");
    const double c = std::cos(sigma / std::sqrt(static_cast<double>(N)));
    // Repeated convolution with [1, -2c, 1]; both operands are palindromic at
    // every step, so only the lower half is computed and the rest mirrored.
    // That keeps the self-inversive identity bitwise on the stored values.
    const SignedScaled b1 = SignedScaled::from_double(-2.0 * c);
    std::vector<SignedScaled> cur{SignedScaled::from_log(+1, 0.0L)};
    for (std::size_t step = 1; step <= d; ++step) {
        const std::size_t deg = 2 * step;
        std::vector<SignedScaled> next(deg + 1, SignedScaled::zero());
        for (std::size_t k = 0; k <= step; ++k) {
            SignedScaled acc = SignedScaled::zero();
            if (k < cur.size()) acc = ss_add(acc, cur[k]);
            if (k >= 1 && k - 1 < cur.size()) acc = ss_add(acc, ss_mul(b1, cur[k - 1]));
            if (k >= 2 && k - 2 < cur.size()) acc = ss_add(acc, cur[k - 2]);
            next[k] = acc;
            next[deg - k] = acc;
        }
        cur = std::move(next);
    }
    CirclePoly p;
    p.n = 2 * d;
    p.coeffs.resize(p.n + 1);
    for (std::size_t j = 0; j <= p.n; ++j) p.coeffs[j] = SSComplex{cur[j], SignedScaled::zero()};
    p.self_inversive = true;
    p.model = [d, c](std::vector<BigC>& out) {
        const mpfr_prec_t bits = out[0].re.prec();
        Big b1m(bits), t(bits);
        b1m.set(-2.0 * c);
        std::vector<Big> curm;
        curm.emplace_back(bits);
        curm[0].set(1ul);
        for (std::size_t step = 1; step <= d; ++step) {
            const std::size_t deg = 2 * step;
            std::vector<Big> nextm;
            nextm.reserve(deg + 1);
            for (std::size_t k = 0; k <= deg; ++k) nextm.emplace_back(bits);
            for (std::size_t k = 0; k <= step; ++k) {
                Big acc(bits);
                if (k < curm.size()) badd(acc, acc, curm[k]);
                if (k >= 1 && k - 1 < curm.size()) {
                    bmul(t, b1m, curm[k - 1]);
                    badd(acc, acc, t);
                }
                if (k >= 2 && k - 2 < curm.size()) badd(acc, acc, curm[k - 2]);
                nextm[k].set(acc);
                nextm[deg - k].set(acc);
            }
            curm = std::move(nextm);
        }
        for (std::size_t j = 0; j < curm.size(); ++j) {
            out[j].re.set(curm[j]);
            out[j].im.set_zero();
        }
    };
    return p;
}

CirclePoly demoivre_laplace_product(std::size_t d, double sigma, std::size_t N) {
    const CirclePoly base = demoivre_base(d, sigma, N);
    const std::size_t n = 2 * d;
    CirclePoly p;
    p.n = n;
    p.coeffs.resize(n + 1);
    for (std::size_t j = 0; 2 * j <= n; ++j) {
        const SignedScaled& q = base.coeffs[j].re;
        SSComplex v;
        if (!q.is_zero()) {
            int sign = (q.sign < 0 && N % 2 != 0) ? -1 : +1;
            if (((n - j) * (N - 1)) % 2 != 0) sign = -sign;
            const long double ln = static_cast<long double>(N) * q.ln_mag -
                                   static_cast<long double>(N - 1) * log_binomial(n, j);
            v.re = SignedScaled::from_log(sign, ln);
        }
        // n is even, so the sign twist matches at j and n-j and the mirrored
        // assignment preserves the palindrome bitwise.
        p.coeffs[j] = v;
        p.coeffs[n - j] = v;
    }
    p.self_inversive = true;
    const CoeffModel bm = base.model;
    p.model = [bm, n, N](std::vector<BigC>& out) {
        const mpfr_prec_t bits = out[0].re.prec();
        auto qv = model_buffer(n + 1, bits);
        bm(qv);
        const std::vector<Big> binrow = binomial_row(n, bits);
        Big t(bits), u(bits);
        for (std::size_t j = 0; 2 * j <= n; ++j) {
            if (qv[j].re.is_zero()) {
                out[j].set_zero();
            } else {
                int sign = (qv[j].re.sign() < 0 && N % 2 != 0) ? -1 : +1;
                if (((n - j) * (N - 1)) % 2 != 0) sign = -sign;
                babs(t, qv[j].re);
                blog(t, t);
                bmul_ui(t, t, static_cast<unsigned long>(N));
                blog(u, binrow[j]);
                bmul_ui(u, u, static_cast<unsigned long>(N - 1));
                bsub(t, t, u);
                bexp(t, t);
                out[j].re.set(t);
                if (sign < 0) bneg(out[j].re, out[j].re);
                out[j].im.set_zero();
            }
            out[n - j].re.set(out[j].re);
            out[n - j].im.set_zero();
        }
    };
    return p;
}

std::complex<double> poly_eval(const CirclePoly& p, std::complex<double> z) {
    long double m = -std::numeric_limits<long double>::infinity();
    for (const auto& c : p.coeffs) m = std::max(m, c.ln_max());
    if (std::isinf(m) || p.scale.is_zero()) return {0.0, 0.0};
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = p.n + 1; j-- > 0;) acc = acc * z + p.coeffs[j].to_complex_shifted(m);
    const double mag = static_cast<double>(std::exp(p.scale.ln_mag + m));
    return acc * (static_cast<double>(p.scale.sign) * mag);
}

std::complex<double> poly_log_eval(const CirclePoly& p, std::complex<double> z) {
    if (p.coeffs.size() != p.n + 1) {
        throw std::invalid_argument("poly_log_eval: coefficient array does not match degree");
    }
    if (p.scale.is_zero()) {
        throw std::domain_error("poly_log_eval: the zero polynomial has no logarithm");
    }
    const std::size_t n = p.n;
    const long double rep = p.model ? 0.0L : 1.1e-19L;
    long double peak = 0.0L;
    if (!p.model) {
        peak = -std::numeric_limits<long double>::infinity();
        for (const auto& c : p.coeffs) peak = std::max(peak, c.ln_max());
    }
    for (const mpfr_prec_t bits : {mpfr_prec_t{256}, mpfr_prec_t{512}, mpfr_prec_t{1024}}) {
        auto a = model_buffer(n + 1, bits);
        if (p.model) {
            p.model(a);
        } else {
            Big scratch(bits);
            for (std::size_t j = 0; j <= n; ++j) {
                set_scaled(a[j].re, p.coeffs[j].re, peak, scratch);
                set_scaled(a[j].im, p.coeffs[j].im, peak, scratch);
            }
        }
        BigC zc(bits), acc(bits), step(bits);
        Big t1(bits), t2(bits), az(bits), mass(bits);
        zc.set(z);
        az.set(std::abs(z));
        acc.re.set(a[n].re);
        acc.im.set(a[n].im);
        babs(mass, a[n].re);
        babs(t1, a[n].im);
        badd(mass, mass, t1);
        for (std::size_t j = n; j-- > 0;) {
            cmul(step, acc, zc, t1, t2);
            cadd(acc, step, a[j]);
            bmul(mass, mass, az);
            babs(t1, a[j].re);
            badd(mass, mass, t1);
            babs(t1, a[j].im);
            badd(mass, mass, t1);
        }
        bmul(t1, acc.re, acc.re);
        bmul(t2, acc.im, acc.im);
        badd(t1, t1, t2);
        if (t1.is_zero()) continue;
        blog(t2, t1);
        const long double ln_abs_acc = 0.5L * t2.to_long_double();
        const long double noise_ln =
            std::log(static_cast<long double>(4 * n + 8) *
                     (rep + ldexpl(1.0L, 1 - static_cast<long>(bits)))) +
            mass.ln_abs();
        if (!(ln_abs_acc > noise_ln)) continue;
        Big ph(bits);
        mpfr_atan2(ph.raw(), acc.im.raw(), acc.re.raw(), MPFR_RNDN);
        double im = ph.to_double();
        if (p.scale.sign < 0) {
            im += kPi;
            if (im > kPi) im -= 2.0 * kPi;
        }
        const double re = static_cast<double>(ln_abs_acc + peak + p.scale.ln_mag);
        return {re, im};
    }
    throw CertificationError(
        "poly_log_eval: value could not be separated from zero at 1024 bits");
}

CirclePoly poly_derivative(const CirclePoly& p) {
    if (p.n < 1) throw std::domain_error("poly_derivative: degree must be >= 1");
    const std::size_t n = p.n;
    const long double lnn = std::log(static_cast<long double>(n));
    CirclePoly r;
    r.n = n - 1;
    r.coeffs.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        // j+1 times the shifted coefficient, renormalized monic by 1/n; the
        // leading entry gets ln(n) - ln(n) = 0 exactly.
        const SignedScaled f =
            SignedScaled::from_log(+1, std::log(static_cast<long double>(j + 1)) - lnn);
        r.coeffs[j] = ss_mul(f, p.coeffs[j + 1]);
    }
    r.scale = ss_mul(p.scale, SignedScaled::from_log(+1, lnn));
    if (p.model) {
        const CoeffModel pm = p.model;
        r.model = [pm, n](std::vector<BigC>& out) {
            const mpfr_prec_t bits = out[0].re.prec();
            auto tmp = model_buffer(n + 1, bits);
            pm(tmp);
            for (std::size_t j = 0; j < n; ++j) {
                bmul_ui(out[j].re, tmp[j + 1].re, static_cast<unsigned long>(j + 1));
                bdiv_ui(out[j].re, out[j].re, static_cast<unsigned long>(n));
                bmul_ui(out[j].im, tmp[j + 1].im, static_cast<unsigned long>(j + 1));
                bdiv_ui(out[j].im, out[j].im, static_cast<unsigned long>(n));
            }
        };
    }
    return r;
}

std::string circle_poly_to_json(const CirclePoly& p) {
    nlohmann::json j;
    j["n"] = p.n;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs) {
        const SignedScaled re = ss_mul(p.scale, c.re);
        const SignedScaled im = ss_mul(p.scale, c.im);
        arr.push_back({re.sign, static_cast<double>(re.ln_mag), im.sign,
                       static_cast<double>(im.ln_mag)});
    }
    j["coeffs"] = std::move(arr);
    return j.dump();
}

CirclePoly circle_poly_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    const std::size_t n = j.at("n").get<std::size_t>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != n + 1)
        throw std::domain_error("circle_poly_from_json: coeffs must hold n+1 entries");
    std::vector<SSComplex> raw(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const auto& e = arr.at(k);
        if (!e.is_array() || e.size() != 4)
            throw std::domain_error("circle_poly_from_json: each coefficient is [sign, ln, sign, ln]");
        raw[k].re = SignedScaled::from_log(e.at(0).get<int>(),
                                           static_cast<long double>(e.at(1).get<double>()));
        raw[k].im = SignedScaled::from_log(e.at(2).get<int>(),
                                           static_cast<long double>(e.at(3).get<double>()));
    }
    if (raw[n].re.is_zero() || !raw[n].im.is_zero())
        throw std::domain_error("circle_poly_from_json: leading coefficient must be real and nonzero");
    CirclePoly p;
    p.n = n;
    p.scale = raw[n].re;
    p.coeffs.resize(n + 1);
    const SignedScaled inv = SignedScaled::from_log(p.scale.sign, -p.scale.ln_mag);
    for (std::size_t k = 0; k <= n; ++k) p.coeffs[k] = ss_mul(inv, raw[k]);

    const int par = (n % 2 == 0) ? +1 : -1;
    bool si = true;
    for (std::size_t k = 0; k <= n && si; ++k) {
        const SSComplex& a = p.coeffs[k];
        const SSComplex b = ss_mul(SignedScaled::from_log(par, 0.0L), ss_conj(p.coeffs[n - k]));
        if (a.re.sign != b.re.sign || a.im.sign != b.im.sign) si = false;
        if (si && a.re.sign != 0 && !ln_close(a.re.ln_mag, b.re.ln_mag)) si = false;
        if (si && a.im.sign != 0 && !ln_close(a.im.ln_mag, b.im.ln_mag)) si = false;
    }
    p.self_inversive = si;
    return p;
}

} // namespace uhp
