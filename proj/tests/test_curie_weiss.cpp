#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uhp/curie_weiss.hpp"
#include "uhp/errors.hpp"
#include "uhp/free_normal.hpp"
#include "uhp/quadrature.hpp"
#include "uhp/zeta.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

using uhp::CWParams;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Direct sum over all 2^n spin configurations, bucketed only to keep the
// count of exp calls at n+1 instead of 2^n. The bucket populations are the
// real content and are checked against Pascal's triangle separately.
std::vector<std::uint64_t> spin_buckets(unsigned n) {
    std::vector<std::uint64_t> cnt(n + 1, 0);
    for (std::uint64_t c = 0; c < (1ull << n); ++c) {
        cnt[std::popcount(c)] += 1;
    }
    return cnt;
}

std::complex<double> enumerated_z(unsigned n, double beta, std::complex<double> h) {
    const auto cnt = spin_buckets(n);
    std::complex<double> z{0.0, 0.0};
    for (unsigned j = 0; j <= n; ++j) {
        const double m = 2.0 * j - static_cast<double>(n);
        z += static_cast<double>(cnt[j]) *
             std::exp(beta * m * m / (2.0 * n) + h * m);
    }
    return z;
}

} // namespace

TEST_CASE("spin enumeration buckets match binomial weights") {
    for (unsigned n : {1u, 2u, 5u, 12u, 16u}) {
        const auto cnt = spin_buckets(n);
        std::vector<std::uint64_t> pascal(n + 1, 0);
        pascal[0] = 1;
        for (unsigned r = 1; r <= n; ++r) {
            for (unsigned j = r; j > 0; --j) pascal[j] += pascal[j - 1];
        }
        for (unsigned j = 0; j <= n; ++j) CHECK(cnt[j] == pascal[j]);
    }
}

TEST_CASE("partition function against direct spin sums") {
    struct Probe {
        unsigned n;
        double beta;
        std::complex<double> h;
    };
    const Probe probes[] = {
        {10, 0.7, {0.3, 0.45}},
        {14, 0.3, {1.1, -0.2}},
        {16, 1.2, {0.05, 0.0}},
        {7, 2.0, {0.0, 0.6}},
    };
    for (const auto& pr : probes) {
        CAPTURE(pr.n);
        const std::complex<double> zd = enumerated_z(pr.n, pr.beta, pr.h);
        const std::complex<double> lz = uhp::log_partition(pr.n, {pr.beta, pr.h});
        CHECK(std::abs(std::exp(lz) - zd) <= 1e-12 * std::abs(zd));
    }
}

TEST_CASE("field reflection is bitwise exact") {
    for (std::size_t n : {5, 8, 13, 40}) {
        for (double br : {0.3, 1.5}) {
            for (std::complex<double> h :
                 {std::complex<double>{0.7, 0.0}, {0.2, 1.3}, {1.9, -7.6}, {0.0, 0.4}}) {
                const auto a = uhp::log_partition(n, {br, h});
                const auto b = uhp::log_partition(n, {br, -h});
                CHECK(a.real() == b.real());
                CHECK(a.imag() == b.imag());
            }
        }
    }
}

TEST_CASE("shifting the imaginary field by pi") {
    const double y0 = 0.25;
    const double y1 = y0 + kPi;
    // the shifted field is exactly representable, so the two calls see the
    // same reduced phase
    REQUIRE(y1 - kPi == y0);

    const auto even0 = uhp::log_partition(8, {0.6, {0.4, y0}});
    const auto even1 = uhp::log_partition(8, {0.6, {0.4, y1}});
    CHECK(even0.real() == even1.real());
    CHECK(even0.imag() == even1.imag());

    const auto odd0 = uhp::log_partition(9, {0.6, {0.4, y0}});
    const auto odd1 = uhp::log_partition(9, {0.6, {0.4, y1}});
    CHECK(odd0.real() == odd1.real());
    CHECK(odd1.imag() - odd0.imag() == kPi);
}

TEST_CASE("frozen partition values and argument guards") {
    const auto lz4 = uhp::log_partition(4, {0.3, {0.7, 0.0}});
    CHECK(std::fabs(lz4.real() - 4.0265438927006491) <= 1e-13);
    CHECK(lz4.imag() == 0.0);

    const auto lz800 = uhp::log_partition(800, {0.5, {0.3, 0.0}});
    CHECK(std::fabs(lz800.real() / 800.0 - 0.77512881636104874) <= 1e-13);

    CHECK_THROWS_AS((void)uhp::log_partition(4, {-1.0, {0.3, 0.0}}), std::domain_error);
    CHECK_THROWS_AS((void)uhp::log_partition(0, {0.5, {0.3, 0.0}}), std::invalid_argument);
}

TEST_CASE("free energy: frozen values and finite-size gap") {
    const auto f = uhp::free_energy({0.5, {0.3, 0.0}});
    CHECK(std::fabs(f.real() - 0.77483543330924918) <= 1e-14);
    CHECK(std::fabs(f.imag()) <= 1e-14);

    const auto fc = uhp::free_energy({1.0, {0.8, 0.2}});
    CHECK(std::fabs(fc.real() - 1.3259782189335574) <= 1e-13);
    CHECK(std::fabs(fc.imag() - 0.18846364825794381) <= 1e-13);

    // the finite-n averages close in on the limit at rate 1/n
    const double g400 =
        std::fabs(uhp::log_partition(400, {0.5, {0.3, 0.0}}).real() / 400.0 - f.real());
    const double g800 =
        std::fabs(uhp::log_partition(800, {0.5, {0.3, 0.0}}).real() / 800.0 - f.real());
    CHECK(g800 >= 2.8e-4);
    CHECK(g800 <= 3.0e-4);
    CHECK(g400 / g800 >= 1.8);
    CHECK(g400 / g800 <= 2.2);

    CHECK_THROWS_AS((void)uhp::free_energy({0.5, {0.0, 0.3}}), std::domain_error);
    CHECK_THROWS_AS((void)uhp::free_energy({0.5, {-0.1, 1.0}}), std::domain_error);
}

TEST_CASE("two-spin zeros in closed form") {
    // Z_2 = 2 e^{2 beta} (cos(2y) + e^{-2 beta}) at h = iy
    const double a = std::acos(std::exp(-0.5));
    const auto zs = uhp::lee_yang_zeros(2, 0.5);
    REQUIRE(zs.size() == 2);
    CHECK(std::fabs(zs[0] + (kPi - a) / 2.0) <= 1e-12);
    CHECK(std::fabs(zs[1] - (kPi - a) / 2.0) <= 1e-12);
}

TEST_CASE("zeros fill one period symmetrically") {
    const std::size_t n = 20;
    const double beta = 0.5;
    const auto zs = uhp::lee_yang_zeros(n, beta);
    REQUIRE(zs.size() == n);
    const double edge = kPi / 2.0 - uhp::lee_yang_support(beta);
    for (std::size_t j = 0; j < n; ++j) {
        CHECK(zs[j] > -kPi / 2.0);
        CHECK(zs[j] <= kPi / 2.0);
        CHECK(std::fabs(zs[j]) >= edge - 0.06);
        CHECK(std::fabs(zs[j] + zs[n - 1 - j]) <= 3e-12);
        if (j > 0) CHECK(zs[j] > zs[j - 1]);
    }
}

TEST_CASE("partition function collapses on the zero set") {
    // a single spin has Z_1 = 2 e^{beta/2} cosh(h), which vanishes at the
    // exactly representable field h = i pi/2
    CHECK_THROWS_AS((void)uhp::log_partition(1, {0.8, {0.0, kPi / 2.0}}), uhp::PoleError);

    // at certified zeros of Z_20 the log collapses by tens of nats against
    // neighboring midpoints (or trips the pole guard outright)
    const auto zs = uhp::lee_yang_zeros(20, 0.5);
    const double mid = (zs[12] + zs[13]) / 2.0;
    const double ref = uhp::log_partition(20, {0.5, {0.0, mid}}).real();
    for (std::size_t j : {std::size_t{12}, std::size_t{13}}) {
        bool collapsed = false;
        try {
            collapsed = uhp::log_partition(20, {0.5, {0.0, zs[j]}}).real() <= ref - 18.0;
        } catch (const uhp::PoleError&) {
            collapsed = true;
        }
        CHECK(collapsed);
    }
}

TEST_CASE("limit density: frozen value, mass, and vanishing tails") {
    CHECK(std::fabs(uhp::lee_yang_density(0.25, 1.2) - 0.61303642039672598) <= 1e-11);

    // even in y, zero below the support edge, positive above it
    CHECK(uhp::lee_yang_density(0.3, 1.1) == uhp::lee_yang_density(0.3, -1.1));
    CHECK(uhp::lee_yang_density(0.3, 0.4) == 0.0);
    CHECK(uhp::lee_yang_density(0.3, 0.0) == 0.0);
    CHECK(uhp::lee_yang_density(0.3, 0.7) > 0.0);

    const double edge = kPi / 2.0 - uhp::lee_yang_support(0.35);
    const double mass = 2.0 * uhp::integrate_real(
        [](double y) { return uhp::lee_yang_density(0.35, y); }, edge, kPi / 2.0, 1e-10);
    CHECK(std::fabs(mass - 1.0) <= 1e-8);
}

TEST_CASE("limit density against the half-plane solver") {
    // independent route: Im zeta at the real point y, scaled by 1/(pi beta)
    for (double y : {0.6, 0.9, 1.2, 1.5}) {
        const double direct = uhp::zeta(0.3, {y, 0.0}).zeta.imag() / (kPi * 0.3);
        CHECK(std::fabs(uhp::lee_yang_density(0.3, y) - direct) <= 1e-9);
    }
}

TEST_CASE("support half-width") {
    CHECK(std::fabs(uhp::lee_yang_support(0.25) - 0.95661147749051820) <= 1e-15);
    CHECK(uhp::lee_yang_support(1.0) == kPi / 2.0);
    CHECK(uhp::lee_yang_support(3.0) == kPi / 2.0);
    CHECK_THROWS_AS((void)uhp::lee_yang_support(0.0), std::domain_error);
    // closed form asin(sqrt b) + sqrt(b - b^2) for b < 1
    const double b = 0.6;
    CHECK(std::fabs(uhp::lee_yang_support(b) -
                    (std::asin(std::sqrt(b)) + std::sqrt(b - b * b))) <= 1e-15);
}

TEST_CASE("finite-size zero counts track the limit law") {
    const std::size_t n = 120;
    const double beta = 0.6;
    const auto zs = uhp::lee_yang_zeros(n, beta);
    uhp::FreeNormalParams fp;
    fp.s2 = 4.0 * beta;
    for (double cut : {0.7, 0.95, 1.2, 1.45}) {
        std::size_t below = 0;
        for (double y : zs) below += (y <= cut) ? 1 : 0;
        // y <= cut (cut > 0) means either y < 0, i.e. the angle is in the
        // upper half period, or the angle lies below 2 cut - pi
        const double want = 0.5 + uhp::cdf(fp, 2.0 * cut - kPi);
        CHECK(std::fabs(static_cast<double>(below) / n - want) <= 0.02);
    }
}
