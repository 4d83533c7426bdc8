#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uhp/circle_roots.hpp"
#include "uhp/curie_weiss.hpp"
#include "uhp/heat_flow.hpp"
#include "uhp/io.hpp"
#include "uhp/poly.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace uhp;
using C = std::complex<double>;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double trapezoid_mass(const Table& t) {
    double mass = 0.0;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        mass += 0.5 * (t.rows[i][1] + t.rows[i - 1][1]) * (t.rows[i][0] - t.rows[i - 1][0]);
    }
    return mass;
}

} // namespace

TEST_CASE("numbers survive the text round trip bitwise") {
    for (double x : {3.141592653589793, 1.0 / 3.0, 1e-300, 6.02214076e23, 4.9406564584124654e-324,
                     -7.2e-9, 0.5, 1.0}) {
        const std::string s = format_g17(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(format_g17(1.0) == "1");
    CHECK(format_g17(0.5) == "0.5");
    const std::string nz = format_g17(-0.0);
    CHECK(std::signbit(std::strtod(nz.c_str(), nullptr)));
}

TEST_CASE("complex flag syntax parses and round-trips") {
    CHECK(parse_complex("0.3") == C(0.3, 0.0));
    CHECK(parse_complex("-0.2i") == C(0.0, -0.2));
    CHECK(parse_complex("0.3+0.2i") == C(0.3, 0.2));
    CHECK(parse_complex("1e-3-2.5e-2i") == C(1e-3, -2.5e-2));
    CHECK(parse_complex("i") == C(0.0, 1.0));
    CHECK(parse_complex("-i") == C(0.0, -1.0));
    CHECK(parse_complex("2+i") == C(2.0, 1.0));
    CHECK(parse_complex("2-I") == C(2.0, -1.0));

    for (const char* bad : {"", "abc", "0.3+", "i+2", "0.3 0.2i", "0.3+0.2", "1+2i3", "inf",
                            "nan+1i", " 0.5"}) {
        CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
    }

    for (C z : {C(0.3, 0.2), C(-1.5, 0.0), C(0.0, -2.25), C(1e-17, 3e8)}) {
        CHECK(parse_complex(format_complex(z)) == z);
    }
}

TEST_CASE("CSV output is exact and rejects ragged rows") {
    Table t;
    t.columns = {"a", "b"};
    t.rows = {{1.0, 0.5}, {2.0, 0.25}};
    std::ostringstream os;
    write_csv(os, t);
    CHECK(os.str() == "a,b\n1,0.5\n2,0.25\n");

    t.rows.push_back({3.0});
    std::ostringstream os2;
    CHECK_THROWS_AS(write_csv(os2, t), std::invalid_argument);
}

TEST_CASE("tables survive the JSON round trip bitwise") {
    Table t;
    t.columns = {"theta", "f"};
    t.rows = {{-kPi, 0.0}, {1.0 / 3.0, 0.31830988618379069}, {kPi, 5e-324}};
    const Table back = table_from_json(table_to_json(t));
    REQUIRE(back.columns == t.columns);
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        REQUIRE(back.rows[i].size() == t.rows[i].size());
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) CHECK(back.rows[i][j] == t.rows[i][j]);
    }
    CHECK_THROWS(table_from_json("{\"columns\":[\"a\"],\"rows\":[[1,2]]}"));
}

TEST_CASE("root table lands inside the limit support margin") {
    const Table t = roots_table(200, 1.0);
    REQUIRE(t.columns == std::vector<std::string>{"k", "theta"});
    REQUIRE(t.rows.size() == 200);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(t.rows[i][0] == static_cast<double>(i + 1));
        CHECK(std::fabs(t.rows[i][1]) <= 1.9632);
        if (i) CHECK(t.rows[i][1] > t.rows[i - 1][1]);
    }
    CHECK_THROWS_AS(roots_table(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(roots_table(10, -1.0), std::invalid_argument);
}

TEST_CASE("density table integrates to one within the cusp-limited rate") {
    // the boundary cusp caps the trapezoid at O(h^{4/3}); the rule itself
    // is what plots consume, so pin that rate rather than the quadrature
    // mass (which its own suite holds to 1e-8)
    const Table coarse = density_table(4.0, 1000);
    REQUIRE(coarse.rows.size() == 1000);
    CHECK(coarse.rows.front()[0] == -kPi);
    CHECK(coarse.rows.back()[0] == kPi);
    for (const auto& row : coarse.rows) CHECK(row[1] >= 0.0);
    CHECK(std::fabs(trapezoid_mass(coarse) - 1.0) <= 2e-4);
    CHECK(std::fabs(trapezoid_mass(density_table(4.0, 10000)) - 1.0) <= 1e-5);
    CHECK(std::fabs(trapezoid_mass(density_table(1.0, 1000)) - 1.0) <= 2e-5);
    CHECK_THROWS_AS(density_table(1.0, 1), std::invalid_argument);
}

TEST_CASE("moment table columns agree with each other and the limit") {
    const std::size_t n = 50;
    const Table t = moments_table(n, 1.0, 5);
    REQUIRE(t.rows.size() == 5);
    for (const auto& row : t.rows) {
        CHECK(std::fabs(row[1] - row[2]) <= 1e-10);           // two finite-n routes
        CHECK(std::fabs(row[1] - row[3]) <= 5.0 / n);         // against the limit
    }
    CHECK_THROWS_AS(moments_table(50, 1.0, 0), std::invalid_argument);
}

TEST_CASE("Lee-Yang table pairs ordinates with the limit density") {
    const Table t = cw_zeros_table(20, 0.25);
    REQUIRE(t.rows.size() == 20);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double y = t.rows[i][0];
        CHECK(std::fabs(y) <= kPi / 2.0 + 1e-12);
        CHECK(t.rows[i][1] == lee_yang_density(0.25, y));
        if (i) CHECK(y > t.rows[i - 1][0]);
    }
}

TEST_CASE("free energy table converges toward its limit column") {
    const Table t = cw_energy_table(0.5, {0.3, 0.0}, 800);
    REQUIRE(t.rows.size() == 6);  // 25, 50, 100, 200, 400, 800
    for (const auto& row : t.rows) {
        CHECK(row[3] == t.rows[0][3]);
        CHECK(row[4] == t.rows[0][4]);
    }
    CHECK(t.rows.back()[5] <= 1e-2);
    CHECK(t.rows.back()[5] < t.rows.front()[5]);
    CHECK_THROWS_AS(cw_energy_table(0.5, {-0.3, 0.0}, 800), std::invalid_argument);
    CHECK_THROWS_AS(cw_energy_table(0.5, {0.3, 0.0}, 10), std::invalid_argument);
}

TEST_CASE("heat flow trajectories advance the variance parameter") {
    const Table t = heatflow_table(unitary_hermite(8, 0.1), 0.3, 3);
    REQUIRE(t.columns.size() == 9);
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0][0] == 0.0);
    CHECK(t.rows[3][0] == 0.3);

    const EmpiricalCircleMeasure start = find_roots(unitary_hermite(8, 0.1));
    const EmpiricalCircleMeasure end = find_roots(unitary_hermite(8, 0.4));
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(std::fabs(t.rows[0][j + 1] - start.angles[j]) <= 1e-10);
        CHECK(std::fabs(t.rows[3][j + 1] - end.angles[j]) <= 1e-10);
    }
}

TEST_CASE("roots of unity ride the flow unchanged") {
    CirclePoly q;
    q.n = 4;
    q.coeffs.assign(5, SSComplex{});
    q.coeffs[0].re = SignedScaled::from_double(-1.0);
    q.coeffs[4].re = SignedScaled::from_double(1.0);
    q.self_inversive = true;

    const Table t = heatflow_table(q, 0.5, 2);
    REQUIRE(t.rows.size() == 3);
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double want = -kPi / 2.0 + kPi / 2.0 * static_cast<double>(j);
            CHECK(std::fabs(row[j + 1] - want) <= 1e-10);
        }
    }
}

TEST_CASE("circle to Fourier conversion rejects what it cannot represent") {
    CHECK_THROWS_AS(trig_from_circle(unitary_hermite(7, 0.5)), std::invalid_argument);

    CirclePoly bad;
    bad.n = 2;
    bad.coeffs.assign(3, SSComplex{});
    bad.coeffs[0].re = SignedScaled::from_double(3.0);
    bad.coeffs[2].re = SignedScaled::from_double(1.0);
    CHECK_THROWS_AS(trig_from_circle(bad), std::invalid_argument);

    CHECK_THROWS_AS(read_text_file("/nonexistent/uhp-test-file"), std::invalid_argument);
}
