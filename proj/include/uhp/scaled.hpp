#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

namespace uhp {

// A real number stored as sign and natural-log magnitude, so that quantities
// like binom(n,j) * exp(-s2*j*(n-j)/2) compose for n up to ~1e5 without
// overflow or underflow.
//
// ln_mag is a long double on purpose: with an 80-bit significand the
// double -> SignedScaled -> double round trip is exact for every finite
// nonzero double (a 53-bit ln_mag cannot achieve that once |ln x| > 1, since
// the log grid is then coarser than the value grid).
struct SignedScaled {
    int sign = 0;               // -1, 0, +1; 0 means exactly zero
    long double ln_mag = 0.0L;  // ln|x|; meaningless when sign == 0

    static SignedScaled zero() { return SignedScaled{}; }

    static SignedScaled from_log(int sign, long double ln) {
        SignedScaled r;
        r.sign = (sign > 0) - (sign < 0);
        r.ln_mag = (r.sign == 0) ? 0.0L : ln;
        return r;
    }

    static SignedScaled from_double(double x) {
        SignedScaled r;
        if (x == 0.0 || std::isnan(x)) return r;
        r.sign = std::signbit(x) ? -1 : +1;
        r.ln_mag = std::log(static_cast<long double>(std::fabs(x)));
        return r;
    }

    double to_double() const {
        if (sign == 0) return 0.0;
        return static_cast<double>(sign) * static_cast<double>(std::exp(ln_mag));
    }

    // value * e^{-shift}, for max-log prescaled evaluation
    double to_double_shifted(long double shift) const {
        if (sign == 0) return 0.0;
        return static_cast<double>(sign) * static_cast<double>(std::exp(ln_mag - shift));
    }

    bool is_zero() const { return sign == 0; }
};

inline SignedScaled ss_neg(const SignedScaled& a) {
    return SignedScaled::from_log(-a.sign, a.ln_mag);
}

inline SignedScaled ss_mul(const SignedScaled& a, const SignedScaled& b) {
    if (a.sign == 0 || b.sign == 0) return SignedScaled::zero();
    return SignedScaled::from_log(a.sign * b.sign, a.ln_mag + b.ln_mag);
}

// Max-log factoring: a + b = e^M (±e^{la-M} ± e^{lb-M}). Exact cancellation
// (equal logs, opposite signs) yields the distinguished zero. Near
// cancellation returns the computed small value; callers that need certified
// signs under deep cancellation must use the extended-precision evaluators.
inline SignedScaled ss_add(const SignedScaled& a, const SignedScaled& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const SignedScaled& hi = (a.ln_mag >= b.ln_mag) ? a : b;
    const SignedScaled& lo = (a.ln_mag >= b.ln_mag) ? b : a;
    if (a.sign != b.sign && a.ln_mag == b.ln_mag) return SignedScaled::zero();
    const long double d = lo.ln_mag - hi.ln_mag;  // <= 0
    long double t = (a.sign == b.sign) ? std::log1p(std::exp(d))
                                       : std::log1p(-std::exp(d));
    if (std::isinf(t)) return SignedScaled::zero();  // log1p(-1): cancellation at lsb
    return SignedScaled::from_log(hi.sign, hi.ln_mag + t);
}

inline SignedScaled ss_sub(const SignedScaled& a, const SignedScaled& b) {
    return ss_add(a, ss_neg(b));
}

// Complex value with SignedScaled components.
struct SSComplex {
    SignedScaled re, im;

    static SSComplex from_complex(std::complex<double> z) {
        return SSComplex{SignedScaled::from_double(z.real()),
                         SignedScaled::from_double(z.imag())};
    }

    std::complex<double> to_complex() const {
        return {re.to_double(), im.to_double()};
    }

    std::complex<double> to_complex_shifted(long double shift) const {
        return {re.to_double_shifted(shift), im.to_double_shifted(shift)};
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    // max of component log magnitudes; -inf when zero
    long double ln_max() const {
        if (re.is_zero() && im.is_zero())
            return -std::numeric_limits<long double>::infinity();
        if (re.is_zero()) return im.ln_mag;
        if (im.is_zero()) return re.ln_mag;
        return std::max(re.ln_mag, im.ln_mag);
    }
};

inline SSComplex ss_conj(const SSComplex& z) { return {z.re, ss_neg(z.im)}; }

inline SSComplex ss_mul(const SSComplex& a, const SSComplex& b) {
    return {ss_sub(ss_mul(a.re, b.re), ss_mul(a.im, b.im)),
            ss_add(ss_mul(a.re, b.im), ss_mul(a.im, b.re))};
}

inline SSComplex ss_mul(const SignedScaled& a, const SSComplex& b) {
    return {ss_mul(a, b.re), ss_mul(a, b.im)};
}

inline SSComplex ss_add(const SSComplex& a, const SSComplex& b) {
    return {ss_add(a.re, b.re), ss_add(a.im, b.im)};
}

// ln n! via log-gamma.
long double log_factorial(std::uint64_t n);

// ln C(n,k) via log-gamma; symmetric in k <-> n-k by construction, relative
// error well below 1e-13. Throws std::domain_error when k > n.
long double log_binomial(std::uint64_t n, std::uint64_t k);

} // namespace uhp
