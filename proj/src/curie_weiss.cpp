#include "uhp/curie_weiss.hpp"

#include "uhp/circle_roots.hpp"
#include "uhp/errors.hpp"
#include "uhp/free_normal.hpp"
#include "uhp/poly.hpp"
#include "uhp/scaled.hpp"
#include "uhp/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace uhp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_beta(double beta, const char* who) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw std::domain_error(std::string(who) + ": beta must be positive and finite");
    }
}

} // namespace

std::complex<double> log_partition(std::size_t n, const CWParams& p) {
    check_beta(p.beta, "log_partition");
    if (n == 0) throw std::invalid_argument("log_partition: need at least one spin");
    if (!std::isfinite(p.h.real()) || !std::isfinite(p.h.imag())) {
        throw std::domain_error("log_partition: field must be finite");
    }

    // Split Im h = nu pi + rho with nu pi held as an exact double pair, so
    // the phase rho (2j-n) stays accurate for arbitrarily large Im h. The
    // removed multiple contributes the global sign (-1)^{nu n}.
    const double im = p.h.imag();
    const double nu = std::nearbyint(im / kPi);
    const double hi = nu * kPi;
    const double lo = std::fma(nu, kPi, -hi);
    const double rho = (im - hi) - lo;
    const bool flip = (n % 2 == 1) && std::fabs(std::fmod(nu, 2.0)) == 1.0;

    const double re = p.h.real();
    const double quad = p.beta / (2.0 * static_cast<double>(n));

    // Real exponents first, to find the scale to factor out. Everything is
    // a function of m = 2j-n alone except the binomial weight, which the
    // canonical form keeps bitwise symmetric in j <-> n-j.
    std::vector<double> lre(n + 1);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j <= n; ++j) {
        const double m = 2.0 * static_cast<double>(j) - static_cast<double>(n);
        lre[j] = static_cast<double>(log_binomial(n, j)) + quad * m * m + re * m;
        peak = std::max(peak, lre[j]);
    }

    // Pairwise brackets (t_j + t_{n-j}): negating h swaps the operands of
    // each bracket and nothing else, so Z(-h) == Z(h) bitwise.
    std::complex<double> sum{0.0, 0.0};
    double mass = 0.0;
    for (std::size_t j = 0; 2 * j <= n; ++j) {
        const std::size_t k = n - j;
        const double m = 2.0 * static_cast<double>(j) - static_cast<double>(n);
        const double r = std::exp(lre[j] - peak);
        std::complex<double> t{r * std::cos(rho * m), r * std::sin(rho * m)};
        mass += r;
        if (k != j) {
            const double rk = std::exp(lre[k] - peak);
            t += std::complex<double>{rk * std::cos(-rho * m), rk * std::sin(-rho * m)};
            mass += rk;
        }
        sum += t;
    }

    if (std::abs(sum) <= 1e-12 * mass) {
        throw PoleError("log_partition: the partition function vanishes at this field");
    }
    std::complex<double> out = std::complex<double>(peak, 0.0) + std::log(sum);
    if (flip) out.imag(out.imag() + kPi);
    return out;
}

std::complex<double> free_energy(const CWParams& p) {
    check_beta(p.beta, "free_energy");
    if (!(p.h.real() > 0.0)) {
        throw std::domain_error("free_energy: defined for Re h > 0 only");
    }
    const std::complex<double> ih{-p.h.imag(), p.h.real()};
    const ZetaValue zv = zeta(p.beta, ih);
    const std::complex<double> w = std::exp(std::complex<double>(0.0, 2.0) * zv.zeta);
    const std::complex<double> opw = 1.0 + w;
    return p.beta / 2.0 + p.h + std::log(opw) - 2.0 * p.beta * w * w / (opw * opw);
}

std::vector<double> lee_yang_zeros(std::size_t n, double beta) {
    check_beta(beta, "lee_yang_zeros");
    if (n == 0) throw std::invalid_argument("lee_yang_zeros: need at least one spin");

    // Z_n(beta, h) = e^{n beta/2 - n h} (-1)^n P(-e^{2h}) for the degree-n
    // circle polynomial P at parameter 4 beta / n, so h-zeros sit at
    // (alpha - pi)/2 mod pi for root angles alpha of P.
    const EmpiricalCircleMeasure mu = find_roots(unitary_hermite(n, 4.0 * beta / n));
    std::vector<double> ys;
    ys.reserve(mu.angles.size());
    for (double a : mu.angles) {
        double y = 0.5 * (a - kPi);
        if (y <= -kPi / 2.0) y += kPi;
        ys.push_back(y);
    }
    std::sort(ys.begin(), ys.end());
    return ys;
}

double lee_yang_density(double beta, double y) {
    check_beta(beta, "lee_yang_density");
    FreeNormalParams fp;
    fp.s2 = 4.0 * beta;
    return 2.0 * density(fp, kPi - 2.0 * std::fabs(y));
}

double lee_yang_support(double beta) {
    check_beta(beta, "lee_yang_support");
    if (beta >= 1.0) return kPi / 2.0;
    return std::asin(std::sqrt(beta)) + std::sqrt(beta - beta * beta);
}

} // namespace uhp
