#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uhp/circle_roots.hpp"
#include "uhp/errors.hpp"
#include "uhp/free_normal.hpp"
#include "uhp/heat_flow.hpp"
#include "uhp/poly.hpp"
#include "uhp/scaled.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using uhp::RealPoly;
using uhp::SignedScaled;
using uhp::TrigPoly;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

RealPoly real_poly_from_doubles(const std::vector<double>& c) {
    RealPoly p;
    p.n = c.size() - 1;
    for (double x : c) p.coeffs.push_back(SignedScaled::from_double(x));
    return p;
}

RealPoly monomial(std::size_t n) {
    RealPoly p;
    p.n = n;
    p.coeffs.assign(n + 1, SignedScaled::zero());
    p.coeffs[n] = SignedScaled::from_double(1.0);
    return p;
}

RealPoly real_poly_from_roots(const std::vector<double>& roots) {
    RealPoly p;
    p.n = 0;
    p.coeffs = {SignedScaled::from_double(1.0)};
    for (double r : roots) {
        std::vector<SignedScaled> nxt(p.coeffs.size() + 1, SignedScaled::zero());
        const SignedScaled mr = SignedScaled::from_double(-r);
        for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
            nxt[j + 1] = ss_add(nxt[j + 1], p.coeffs[j]);
            nxt[j] = ss_add(nxt[j], ss_mul(mr, p.coeffs[j]));
        }
        p.coeffs = std::move(nxt);
        p.n += 1;
    }
    return p;
}

// coefficients of prod_k (z^2 - 2 cos(a_k) z + 1), conjugate-symmetrized so
// the expansion is an exact fixed point of the stored circle convention
std::vector<std::complex<double>> palindrome_from_angle_pairs(const std::vector<double>& as) {
    std::vector<std::complex<double>> c{1.0};
    for (double a : as) {
        std::vector<std::complex<double>> nxt(c.size() + 2, 0.0);
        const double m = -2.0 * std::cos(a);
        for (std::size_t j = 0; j < c.size(); ++j) {
            nxt[j] += c[j];
            nxt[j + 1] += m * c[j];
            nxt[j + 2] += c[j];
        }
        c = std::move(nxt);
    }
    const std::size_t n = c.size() - 1;
    for (std::size_t j = 0; 2 * j < n; ++j) {
        const std::complex<double> avg = 0.5 * (c[j] + std::conj(c[n - j]));
        c[j] = avg;
        c[n - j] = std::conj(avg);
    }
    return c;
}

uhp::CirclePoly circle_poly_from_palindrome(const std::vector<std::complex<double>>& c) {
    uhp::CirclePoly p;
    p.n = c.size() - 1;
    for (const auto& z : c) p.coeffs.push_back(uhp::SSComplex::from_complex(z));
    p.self_inversive = true;
    p.model = [c](std::vector<uhp::BigC>& out) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j].set(c[j]);
    };
    return p;
}

double semicircle_cdf(double x) {
    if (x <= -2.0) return 0.0;
    if (x >= 2.0) return 1.0;
    return 0.5 + (x * std::sqrt(4.0 - x * x) + 4.0 * std::asin(x / 2.0)) / (4.0 * kPi);
}

void check_rel(const SignedScaled& a, const SignedScaled& b, double tol) {
    REQUIRE(a.sign == b.sign);
    if (a.sign == 0) return;
    CHECK(std::fabs(static_cast<double>(a.ln_mag - b.ln_mag)) <= tol);
}

} // namespace

TEST_CASE("coefficient transform basics") {
    const RealPoly z2 = monomial(2);

    const RealPoly same = uhp::backward_heat_algebraic(z2, 0.0);
    for (std::size_t j = 0; j <= 2; ++j) {
        CHECK(same.coeffs[j].sign == z2.coeffs[j].sign);
        CHECK(same.coeffs[j].ln_mag == z2.coeffs[j].ln_mag);
    }

    const RealPoly moved = uhp::backward_heat_algebraic(z2, 0.49);
    CHECK(std::fabs(moved.coeffs[0].to_double() + 0.49) <= 1e-15);
    CHECK(moved.coeffs[1].is_zero());
    CHECK(moved.coeffs[2].to_double() == 1.0);

    // flowing a pure power is the rescaled classical kernel
    const RealPoly afl = uhp::backward_heat_algebraic(monomial(6), 0.7);
    const RealPoly ker = uhp::hermite_flow_kernel(6, 0.7);
    for (std::size_t j = 0; j <= 6; ++j) check_rel(afl.coeffs[j], ker.coeffs[j], 1e-14);

    const RealPoly at0 = uhp::hermite_flow_kernel(5, 0.0);
    for (std::size_t j = 0; j < 5; ++j) CHECK(at0.coeffs[j].is_zero());
    CHECK(at0.coeffs[5].to_double() == 1.0);

    CHECK_THROWS_AS((void)uhp::backward_heat_algebraic(z2, -0.1), std::domain_error);
    CHECK_THROWS_AS((void)uhp::hermite_flow_kernel(3, -1.0), std::domain_error);
}

TEST_CASE("flow commutes with the additive convolution") {
    std::mt19937 gen(20240817u);
    std::uniform_real_distribution<double> root(-2.0, 2.0);
    for (std::size_t n : {3, 7, 12}) {
        std::vector<double> roots;
        for (std::size_t i = 0; i < n; ++i) roots.push_back(root(gen));
        const RealPoly p = real_poly_from_roots(roots);
        const double s = 0.37;
        const RealPoly lhs = uhp::backward_heat_algebraic(p, s);
        const RealPoly rhs = uhp::finite_free_add(p, uhp::hermite_flow_kernel(n, s), n);
        REQUIRE(lhs.coeffs.size() == rhs.coeffs.size());
        for (std::size_t j = 0; j <= n; ++j) check_rel(lhs.coeffs[j], rhs.coeffs[j], 1e-12);
    }
}

TEST_CASE("kernel roots in closed form") {
    const auto r4 = uhp::real_roots_algebraic(uhp::hermite_flow_kernel(4, 1.0));
    REQUIRE(r4.size() == 4);
    const double out4 = std::sqrt(3.0 + std::sqrt(6.0));
    const double in4 = std::sqrt(3.0 - std::sqrt(6.0));
    CHECK(std::fabs(r4[0] + out4) <= 1e-12);
    CHECK(std::fabs(r4[1] + in4) <= 1e-12);
    CHECK(std::fabs(r4[2] - in4) <= 1e-12);
    CHECK(std::fabs(r4[3] - out4) <= 1e-12);

    // quintic kernel keeps its root pinned at the origin
    const auto r5 = uhp::real_roots_algebraic(uhp::hermite_flow_kernel(5, 0.3));
    REQUIRE(r5.size() == 5);
    CHECK(std::fabs(r5[2]) <= 1e-13);
    const double scale = std::sqrt(0.3);
    CHECK(std::fabs(r5[4] - scale * std::sqrt(5.0 + std::sqrt(10.0))) <= 1e-12);
    CHECK(std::fabs(r5[3] - scale * std::sqrt(5.0 - std::sqrt(10.0))) <= 1e-12);

    const auto r8 = uhp::real_roots_algebraic(uhp::hermite_flow_kernel(8, 1.0));
    REQUIRE(r8.size() == 8);
    const double want8[4] = {0.5390798113513751, 1.6365190424351080,
                             2.8024858612875416, 4.1445471861258943};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::fabs(r8[4 + i] - want8[i]) <= 1e-12);
        CHECK(std::fabs(r8[3 - i] + want8[i]) <= 1e-12);
    }

    const auto pm = uhp::real_roots_algebraic(
        uhp::backward_heat_algebraic(monomial(2), 0.49));
    REQUIRE(pm.size() == 2);
    CHECK(std::fabs(pm[0] + 0.7) <= 1e-12);
    CHECK(std::fabs(pm[1] - 0.7) <= 1e-12);
}

TEST_CASE("real root certification refuses complex roots") {
    CHECK_THROWS_AS((void)uhp::real_roots_algebraic(real_poly_from_doubles({1.0, 0.0, 1.0})),
                    uhp::CertificationError);
}

TEST_CASE("trig flow basics") {
    const TrigPoly sq = uhp::sin_half_power(1);
    REQUIRE(sq.c.size() == 3);
    CHECK(std::fabs(sq.coeff(0).real() - 0.5) <= 1e-15);
    CHECK(std::fabs(sq.coeff(1).real() + 0.25) <= 1e-15);
    CHECK(std::fabs(sq.coeff(-1).real() + 0.25) <= 1e-15);

    const TrigPoly frozen = uhp::backward_heat_trig(sq, 0.0);
    for (std::size_t j = 0; j < 3; ++j) CHECK(frozen.c[j] == sq.c[j]);

    CHECK_THROWS_AS((void)uhp::backward_heat_trig(sq, -0.2), std::domain_error);

    TrigPoly bad;
    bad.d = 1;
    bad.c = {{0.3, 0.1}, {1.0, 0.0}, {0.3, -0.2}};
    CHECK_THROWS_AS((void)uhp::backward_heat_trig(bad, 0.1), std::domain_error);
}

TEST_CASE("pure oscillation is a fixed point of the flow") {
    TrigPoly cos3;
    cos3.d = 3;
    cos3.c.assign(7, {0.0, 0.0});
    cos3.c[0] = {0.5, 0.0};
    cos3.c[6] = {0.5, 0.0};

    const auto before = uhp::trig_roots(cos3);
    const auto after = uhp::trig_roots(uhp::backward_heat_trig(cos3, 0.8));
    REQUIRE(before.angles.size() == 6);
    REQUIRE(after.angles.size() == 6);
    for (std::size_t j = 0; j < 6; ++j) CHECK(before.angles[j] == after.angles[j]);

    const double want[6] = {-5.0 * kPi / 6.0, -kPi / 2.0, -kPi / 6.0,
                            kPi / 6.0,        kPi / 2.0,  5.0 * kPi / 6.0};
    for (std::size_t j = 0; j < 6; ++j) CHECK(std::fabs(before.angles[j] - want[j]) <= 1e-12);
}

TEST_CASE("two-root trig flow in closed form") {
    const double a = 1.1, s = 0.35;
    TrigPoly t;
    t.d = 1;
    t.c = {{0.5, 0.0}, {-std::cos(a), 0.0}, {0.5, 0.0}};
    const auto mu = uhp::trig_roots(uhp::backward_heat_trig(t, s));
    REQUIRE(mu.angles.size() == 2);
    const double want = 1.1801626320871444;
    CHECK(std::fabs(mu.angles[0] + want) <= 1e-12);
    CHECK(std::fabs(mu.angles[1] - want) <= 1e-12);
    CHECK(std::fabs(std::acos(std::exp(-s / 2.0) * std::cos(a)) - want) <= 1e-15);
}

TEST_CASE("trig flow equals the multiplicative convolution") {
    std::mt19937 gen(77290131u);
    std::uniform_real_distribution<double> ang(0.15, 3.0);
    for (std::size_t d : {3, 6}) {
        const std::size_t n = 2 * d;
        std::vector<double> pairs;
        for (std::size_t i = 0; i < d; ++i) pairs.push_back(ang(gen));
        const auto coeffs = palindrome_from_angle_pairs(pairs);

        const double s = 0.2;
        TrigPoly t;
        t.d = d;
        t.c = coeffs;
        const TrigPoly flowed = uhp::backward_heat_trig(t, s);

        const uhp::CirclePoly prod = uhp::finite_free_mult(
            uhp::unitary_hermite(n, s), circle_poly_from_palindrome(coeffs), n);
        const double scal =
            std::exp(s * static_cast<double>(n) * static_cast<double>(n) / 8.0) *
            prod.scale.to_double();

        for (std::size_t j = 0; j <= n; ++j) {
            const std::complex<double> want = prod.coeffs[j].to_complex() * scal;
            CHECK(std::abs(flowed.c[j] - want) <= 1e-12 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("cumulant recursion") {
    const double r = 0.8;
    const auto semi = uhp::free_cumulants_from_moments({0.0, r * r, 0.0, 2.0 * r * r * r * r});
    CHECK(std::fabs(semi[0]) <= 1e-15);
    CHECK(std::fabs(semi[1] - r * r) <= 1e-15);
    CHECK(std::fabs(semi[2]) <= 1e-15);
    CHECK(std::fabs(semi[3]) <= 1e-15);

    const auto bern = uhp::free_cumulants_from_moments({0.0, 1.0, 0.0, 1.0});
    CHECK(std::fabs(bern[1] - 1.0) <= 1e-15);
    CHECK(std::fabs(bern[3] + 1.0) <= 1e-15);

    // shifting the second cumulant is the predicted effect of the flow
    auto shifted = bern;
    shifted[1] += r * r;
    const auto mm = uhp::moments_from_free_cumulants(shifted);
    CHECK(std::fabs(mm[1] - (1.0 + r * r)) <= 1e-14);
    CHECK(std::fabs(mm[3] - (1.0 + 4.0 * r * r + 2.0 * r * r * r * r)) <= 1e-14);

    std::mt19937 gen(5u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> m;
    for (int i = 0; i < 8; ++i) m.push_back(u(gen));
    const auto back = uhp::moments_from_free_cumulants(uhp::free_cumulants_from_moments(m));
    for (int i = 0; i < 8; ++i) CHECK(std::fabs(back[i] - m[i]) <= 1e-12);

    CHECK_THROWS_AS((void)uhp::free_cumulants_from_moments(std::vector<double>(9, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("flowed point mass approaches the semicircle") {
    const std::size_t n = 200;
    const auto roots =
        uhp::real_roots_algebraic(uhp::backward_heat_algebraic(monomial(n), 1.0 / n));
    REQUIRE(roots.size() == n);
    uhp::EmpiricalCircleMeasure mu;
    mu.angles = roots;
    CHECK(uhp::kolmogorov_distance(mu, semicircle_cdf) <= 0.05);
}

TEST_CASE("two-point flow matches the predicted moments") {
    // (z^2 - 1)^100 carries the symmetric two-point root law
    RealPoly p;
    p.n = 200;
    p.coeffs.assign(201, SignedScaled::zero());
    for (std::size_t k = 0; k <= 100; ++k) {
        const int sg = ((100 - k) % 2 == 0) ? +1 : -1;
        p.coeffs[2 * k] = SignedScaled::from_log(sg, uhp::log_binomial(100, k));
    }
    // the flowed coefficients cancel to ~64 digits inside the root bulk, so
    // give the scan the exact binomials to re-derive at its own precision
    p.model = [](std::vector<uhp::Big>& row) {
        const std::vector<uhp::Big> bin = uhp::binomial_row(100, row[0].prec() + 16);
        for (std::size_t k = 0; k <= 100; ++k) {
            row[2 * k].set(bin[k]);
            if ((100 - k) % 2 != 0) uhp::bneg(row[2 * k], row[2 * k]);
            if (k < 100) row[2 * k + 1].set_zero();
        }
    };
    const double r2 = 1.0;  // n s
    const auto roots = uhp::real_roots_algebraic(uhp::backward_heat_algebraic(p, r2 / 200.0));
    REQUIRE(roots.size() == 200);
    double m2 = 0.0, m4 = 0.0;
    for (double x : roots) {
        m2 += x * x;
        m4 += x * x * x * x;
    }
    m2 /= 200.0;
    m4 /= 200.0;
    CHECK(std::fabs(m2 - (1.0 + r2)) <= 0.05);
    CHECK(std::fabs(m4 - (1.0 + 4.0 * r2 + 2.0 * r2 * r2)) <= 0.1);
}

TEST_CASE("sine power flow against the circle construction") {
    const std::size_t n = 40;
    const double s2 = 1.0;
    const auto trig =
        uhp::trig_roots(uhp::backward_heat_trig(uhp::sin_half_power(n / 2), s2 / n));
    const auto circ = uhp::find_roots(uhp::unitary_hermite(n, s2 / n));
    REQUIRE(trig.angles.size() == n);
    REQUIRE(circ.angles.size() == n);
    for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::fabs(trig.angles[j] - circ.angles[j]) <= 1e-8);
    }

    uhp::FreeNormalParams fp;
    fp.s2 = s2;
    const auto ks = uhp::kolmogorov_distance(trig, [&](double x) { return uhp::cdf(fp, x); });
    CHECK(ks <= 0.1);
}
