#include "uhp/io.hpp"

#include "uhp/circle_roots.hpp"
#include "uhp/curie_weiss.hpp"
#include "uhp/free_normal.hpp"
#include "uhp/heat_flow.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace uhp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

[[noreturn]] void bad_complex(const std::string& text) {
    throw std::invalid_argument("parse_complex: expected a+bi syntax, got \"" + text + "\"");
}

} // namespace

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::complex<double> parse_complex(const std::string& text) {
    const char* p = text.c_str();

    // reads one term at p; returns true when it carried the 'i' suffix
    const auto read_term = [&](double& out) {
        char* end = nullptr;
        const double v = std::strtod(p, &end);
        if (end == p) {
            // a bare sign (or nothing) directly in front of 'i' means +-1
            const char* q = p;
            double sgn = 1.0;
            if (*q == '+' || *q == '-') {
                if (*q == '-') sgn = -1.0;
                ++q;
            }
            if (*q != 'i' && *q != 'I') bad_complex(text);
            out = sgn;
            p = q + 1;
            return true;
        }
        if (*end == 'i' || *end == 'I') {
            out = v;
            p = end + 1;
            return true;
        }
        out = v;
        p = end;
        return false;
    };

    if (text.empty() || std::isspace(static_cast<unsigned char>(text[0]))) bad_complex(text);
    double re = 0.0;
    double im = 0.0;
    double first = 0.0;
    const bool first_imag = read_term(first);
    (first_imag ? im : re) = first;
    if (*p != '\0') {
        if (first_imag) bad_complex(text);  // imaginary part comes last
        if (*p != '+' && *p != '-') bad_complex(text);
        double second = 0.0;
        if (!read_term(second) || *p != '\0') bad_complex(text);
        im = second;
    }
    if (!std::isfinite(re) || !std::isfinite(im)) bad_complex(text);
    return {re, im};
}

std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return format_g17(z.real());
    std::string out = format_g17(z.real());
    out += std::signbit(z.imag()) ? '-' : '+';
    out += format_g17(std::fabs(z.imag()));
    out += 'i';
    return out;
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) os << ',';
        os << t.columns[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::invalid_argument("write_csv: row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_g17(row[i]);
        }
        os << '\n';
    }
}

std::string table_to_json(const Table& t) {
    nlohmann::json j;
    j["columns"] = t.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::invalid_argument("table_to_json: row width does not match the header");
        rows.push_back(row);
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

Table table_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Table t;
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
        t.rows.push_back(row.get<std::vector<double>>());
        if (t.rows.back().size() != t.columns.size())
            throw std::invalid_argument("table_from_json: row width does not match the header");
    }
    return t;
}

Table roots_table(std::size_t n, double sigma2, const EvalPrecision& prec) {
    if (n == 0) throw std::invalid_argument("roots_table: n must be positive");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw std::invalid_argument("roots_table: sigma2 must be positive");
    const EmpiricalCircleMeasure mu =
        find_roots(unitary_hermite(n, sigma2 / static_cast<double>(n)), prec);
    Table t;
    t.columns = {"k", "theta"};
    for (std::size_t k = 0; k < mu.angles.size(); ++k)
        t.rows.push_back({static_cast<double>(k + 1), mu.angles[k]});
    return t;
}

Table density_table(double sigma2, std::size_t grid) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw std::invalid_argument("density_table: sigma2 must be positive");
    if (grid < 2) throw std::invalid_argument("density_table: grid needs at least 2 points");
    FreeNormalParams prm;
    prm.s2 = sigma2;
    Table t;
    t.columns = {"theta", "f"};
    for (std::size_t i = 0; i < grid; ++i) {
        const double theta =
            -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(grid - 1);
        t.rows.push_back({theta, density(prm, theta)});
    }
    return t;
}

Table moments_table(std::size_t n, double sigma2, std::size_t kmax, const EvalPrecision& prec) {
    if (n == 0) throw std::invalid_argument("moments_table: n must be positive");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw std::invalid_argument("moments_table: sigma2 must be positive");
    if (kmax == 0 || kmax > 64)
        throw std::invalid_argument("moments_table: kmax must be in 1..64");
    const CirclePoly p = unitary_hermite(n, sigma2 / static_cast<double>(n));
    const EmpiricalCircleMeasure mu = find_roots(p, prec);
    const std::vector<std::complex<double>> ng = newton_girard_reference(p, kmax);
    FreeNormalParams prm;
    prm.s2 = sigma2;
    Table t;
    t.columns = {"k", "empirical", "newton_girard", "limit"};
    for (std::size_t k = 1; k <= kmax; ++k) {
        t.rows.push_back({static_cast<double>(k),
                          empirical_moment(mu, static_cast<long long>(k)).real(),
                          ng[k - 1].real(), moment(prm, static_cast<long long>(k))});
    }
    return t;
}

Table cw_zeros_table(std::size_t n, double beta) {
    if (n == 0) throw std::invalid_argument("cw_zeros_table: n must be positive");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("cw_zeros_table: beta must be positive");
    const std::vector<double> ys = lee_yang_zeros(n, beta);
    Table t;
    t.columns = {"y", "density"};
    for (const double y : ys) t.rows.push_back({y, lee_yang_density(beta, y)});
    return t;
}

Table cw_energy_table(double beta, std::complex<double> h, std::size_t n_max) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("cw_energy_table: beta must be positive");
    if (!(h.real() > 0.0))
        throw std::invalid_argument("cw_energy_table: the limit needs Re h > 0");
    if (n_max < 25) throw std::invalid_argument("cw_energy_table: n_max must be at least 25");
    const CWParams prm{beta, h};
    const std::complex<double> lim = free_energy(prm);
    Table t;
    t.columns = {"n", "f_re", "f_im", "limit_re", "limit_im", "abs_err"};
    for (std::size_t n = 25; n <= n_max; n *= 2) {
        const std::complex<double> f = log_partition(n, prm) / static_cast<double>(n);
        t.rows.push_back({static_cast<double>(n), f.real(), f.imag(), lim.real(), lim.imag(),
                          std::abs(f - lim)});
    }
    return t;
}

Table heatflow_table(const CirclePoly& p, double s, std::size_t steps,
                     const EvalPrecision& prec) {
    if (!(s >= 0.0) || !std::isfinite(s))
        throw std::invalid_argument("heatflow_table: s must be nonnegative");
    if (steps == 0) throw std::invalid_argument("heatflow_table: steps must be positive");
    const TrigPoly base = trig_from_circle(p);
    Table t;
    t.columns = {"s"};
    for (std::size_t j = 1; j <= p.n; ++j) t.columns.push_back("theta_" + std::to_string(j));
    for (std::size_t j = 0; j <= steps; ++j) {
        const double sj = s * static_cast<double>(j) / static_cast<double>(steps);
        const EmpiricalCircleMeasure mu = trig_roots(backward_heat_trig(base, sj), prec);
        std::vector<double> row{sj};
        row.insert(row.end(), mu.angles.begin(), mu.angles.end());
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace uhp
