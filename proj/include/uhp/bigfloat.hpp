#pragma once

#include <mpfr.h>

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace uhp {

// Thin RAII wrapper around mpfr_t. Deliberately minimal: hot loops use the
// named three-address operations below (which allow operand aliasing, like
// mpfr itself), not expression templates.
class Big {
public:
    explicit Big(mpfr_prec_t bits = 128) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    Big(const Big& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Big(Big&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Big& operator=(const Big& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Big& operator=(Big&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Big() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    void set_prec_destructive(mpfr_prec_t bits) { mpfr_set_prec(v_, bits); }

    void set(double x) { mpfr_set_d(v_, x, MPFR_RNDN); }
    void set(long double x) { mpfr_set_ld(v_, x, MPFR_RNDN); }
    void set(long x) { mpfr_set_si(v_, x, MPFR_RNDN); }
    void set(unsigned long x) { mpfr_set_ui(v_, x, MPFR_RNDN); }
    void set(const Big& o) { mpfr_set(v_, o.v_, MPFR_RNDN); }
    void set_zero() { mpfr_set_zero(v_, 1); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    // ln|x| as long double, with the exponent handled separately so huge and
    // tiny magnitudes never overflow the conversion.
    long double ln_abs() const;

private:
    mpfr_t v_;
};

// Three-address helpers; result precision governs the rounding.
inline void badd(Big& r, const Big& a, const Big& b) { mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN); }
inline void bsub(Big& r, const Big& a, const Big& b) { mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN); }
inline void bmul(Big& r, const Big& a, const Big& b) { mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN); }
inline void bdiv(Big& r, const Big& a, const Big& b) { mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN); }
inline void bneg(Big& r, const Big& a) { mpfr_neg(r.raw(), a.raw(), MPFR_RNDN); }
inline void babs(Big& r, const Big& a) { mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); }
inline void bexp(Big& r, const Big& a) { mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); }
inline void blog(Big& r, const Big& a) { mpfr_log(r.raw(), a.raw(), MPFR_RNDN); }
inline void bsqrt(Big& r, const Big& a) { mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); }
inline void bsincos(Big& s, Big& c, const Big& a) { mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN); }
inline void bmul_ui(Big& r, const Big& a, unsigned long u) { mpfr_mul_ui(r.raw(), a.raw(), u, MPFR_RNDN); }
inline void bdiv_ui(Big& r, const Big& a, unsigned long u) { mpfr_div_ui(r.raw(), a.raw(), u, MPFR_RNDN); }
inline void badd_ui(Big& r, const Big& a, unsigned long u) { mpfr_add_ui(r.raw(), a.raw(), u, MPFR_RNDN); }
inline int bcmpabs(const Big& a, const Big& b) { return mpfr_cmpabs(a.raw(), b.raw()); }
inline void bconst_pi(Big& r) { mpfr_const_pi(r.raw(), MPFR_RNDN); }

struct BigC {
    Big re, im;
    explicit BigC(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
    void set(std::complex<double> z) { re.set(z.real()); im.set(z.imag()); }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
    void set_zero() { re.set_zero(); im.set_zero(); }
};

// r = a * b with two scratch registers (r may not alias a or b).
void cmul(BigC& r, const BigC& a, const BigC& b, Big& t1, Big& t2);
// r += a * b (r distinct from a, b).
void cfma(BigC& r, const BigC& a, const BigC& b, Big& t1, Big& t2);
void cadd(BigC& r, const BigC& a, const BigC& b);
// r = a / b (r distinct from a, b).
void cdiv(BigC& r, const BigC& a, const BigC& b, Big& t1, Big& t2, Big& t3);

inline mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 32);
}

// Row of exact binomial coefficients C(n,0..n) at the requested precision,
// built by the multiply/divide recurrence (each step is an exact integer
// ratio, so the only error is the final rounding at `bits`).
std::vector<Big> binomial_row(std::size_t n, mpfr_prec_t bits);

} // namespace uhp
