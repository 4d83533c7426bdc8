#pragma once

#include "uhp/poly.hpp"
#include "uhp/precision.hpp"

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace uhp {

// 17 significant digits, enough that a double -> text -> double round trip
// is exact; regression baselines and downstream plots never alias.
std::string format_g17(double x);

// Complex scalar in the "a+bi" flag syntax: "0.3", "-0.2i", "1e-3+2i", "i".
// Both parts optional but at least one present, imaginary part last, no
// spaces. Throws std::invalid_argument on anything else.
std::complex<double> parse_complex(const std::string& text);
std::string format_complex(std::complex<double> z);

// Column-named numeric table, the one shape every subcommand emits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // each row has columns.size() entries
};

// Header line, then one row per line with fields from format_g17.
void write_csv(std::ostream& os, const Table& t);

// {"columns": [...], "rows": [[...], ...]}; the parser rejects ragged rows.
std::string table_to_json(const Table& t);
Table table_from_json(const std::string& text);

// Table builders shared by the command-line tool and its tests. All of them
// validate their parameters with std::invalid_argument.

// columns k, theta: certified zero angles of H_n(z; sigma2/n), ascending.
Table roots_table(std::size_t n, double sigma2, const EvalPrecision& prec = {});

// columns theta, f: density of the free unitary normal on an
// endpoint-inclusive uniform grid over [-pi, pi]; grid >= 2 points.
Table density_table(double sigma2, std::size_t grid);

// columns k, empirical, newton_girard, limit for k = 1..kmax: moments of
// the zeros of H_n(z; sigma2/n) by two independent routes, next to the
// closed-form limit moments they approach.
Table moments_table(std::size_t n, double sigma2, std::size_t kmax,
                    const EvalPrecision& prec = {});

// columns y, density: Lee-Yang zero ordinates of the n-spin model paired
// with the limiting density at each ordinate.
Table cw_zeros_table(std::size_t n, double beta);

// columns n, f_re, f_im, limit_re, limit_im, abs_err over doubling sizes
// 25, 50, ... up to n_max: finite-size free energy (1/n) log Z_n against
// its limit. Requires Re h > 0 and n_max >= 25.
Table cw_energy_table(double beta, std::complex<double> h, std::size_t n_max);

// columns s, theta_1..theta_n: certified root trajectories of the backward
// heat flow applied to p (even-degree self-inversive input), sampled at
// steps+1 equally spaced times from 0 to s.
Table heatflow_table(const CirclePoly& p, double s, std::size_t steps,
                     const EvalPrecision& prec = {});

// Whole file as a string; std::invalid_argument when it cannot be read.
std::string read_text_file(const std::string& path);

} // namespace uhp
