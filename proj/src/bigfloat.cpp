#include "uhp/bigfloat.hpp"

#include <cmath>
#include <limits>

namespace uhp {

long double Big::ln_abs() const {
    if (mpfr_zero_p(v_)) return -std::numeric_limits<long double>::infinity();
    // |x| = m * 2^e with m in [0.5, 1): get_d_2exp keeps the mantissa in
    // double range regardless of the true exponent.
    long exp = 0;
    double mant = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
    return std::log(std::fabs((long double)mant)) + (long double)exp * 0.693147180559945309417232121458176568L;
}

void cmul(BigC& r, const BigC& a, const BigC& b, Big& t1, Big& t2) {
    bmul(t1, a.re, b.re);
    bmul(t2, a.im, b.im);
    bsub(r.re, t1, t2);
    bmul(t1, a.re, b.im);
    bmul(t2, a.im, b.re);
    badd(r.im, t1, t2);
}

void cfma(BigC& r, const BigC& a, const BigC& b, Big& t1, Big& t2) {
    bmul(t1, a.re, b.re);
    badd(r.re, r.re, t1);
    bmul(t2, a.im, b.im);
    bsub(r.re, r.re, t2);
    bmul(t1, a.re, b.im);
    badd(r.im, r.im, t1);
    bmul(t2, a.im, b.re);
    badd(r.im, r.im, t2);
}

void cadd(BigC& r, const BigC& a, const BigC& b) {
    badd(r.re, a.re, b.re);
    badd(r.im, a.im, b.im);
}

void cdiv(BigC& r, const BigC& a, const BigC& b, Big& t1, Big& t2, Big& t3) {
    // t3 = |b|^2
    bmul(t1, b.re, b.re);
    bmul(t2, b.im, b.im);
    badd(t3, t1, t2);
    bmul(t1, a.re, b.re);
    bmul(t2, a.im, b.im);
    badd(r.re, t1, t2);
    bdiv(r.re, r.re, t3);
    bmul(t1, a.im, b.re);
    bmul(t2, a.re, b.im);
    bsub(r.im, t1, t2);
    bdiv(r.im, r.im, t3);
}

std::vector<Big> binomial_row(std::size_t n, mpfr_prec_t bits) {
    std::vector<Big> row;
    row.reserve(n + 1);
    row.emplace_back(bits);
    row[0].set(1ul);
    for (std::size_t j = 0; j < n; ++j) {
        row.emplace_back(bits);
        // C(n,j+1) = C(n,j) * (n-j) / (j+1)
        bmul_ui(row[j + 1], row[j], static_cast<unsigned long>(n - j));
        bdiv_ui(row[j + 1], row[j + 1], static_cast<unsigned long>(j + 1));
    }
    return row;
}

} // namespace uhp
