#include "CLI11.hpp"

#include "uhp/acceptance.hpp"
#include "uhp/io.hpp"
#include "uhp/poly.hpp"
#include "uhp/precision.hpp"

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>

namespace {

struct OutputOpts {
    std::string path;           // empty means stdout
    std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--output", out.path, "write to this file instead of stdout");
    cmd->add_option("--format", out.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void emit(const uhp::Table& t, const OutputOpts& out) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.path.empty()) {
        file.open(out.path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot write file: " + out.path);
        os = &file;
    }
    if (out.format == "json") {
        *os << uhp::table_to_json(t) << '\n';
    } else {
        uhp::write_csv(*os, t);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circle root measures of unitary Hermite polynomials, their limit laws, "
                 "the backward heat flow, and the mean-field ferromagnet"};
    app.require_subcommand(1);

    int digits = 32;
    if (const char* env = std::getenv("UHP_WORKING_DIGITS")) digits = std::atoi(env);
    app.add_option("--digits", digits,
                   "working precision for certified root finding, in digits")
        ->check(CLI::Range(16, 512))
        ->capture_default_str();

    std::size_t n = 0;
    double sigma2 = 1.0;
    double beta = 1.0;
    double flow_s = 0.0;
    std::size_t grid = 1000;
    std::size_t kmax = 10;
    std::size_t steps = 10;
    std::size_t nmax = 800;
    std::string h_text;
    std::string input_path;
    std::string suite = "fast";
    OutputOpts out_roots, out_density, out_moments, out_zeros, out_energy, out_flow;

    CLI::App* roots = app.add_subcommand("roots", "certified zero angles of H_n(z; sigma2/n)");
    roots->add_option("--n", n, "polynomial degree")->required();
    roots->add_option("--sigma2", sigma2, "variance parameter")->required();
    add_output_flags(roots, out_roots);

    CLI::App* density =
        app.add_subcommand("density", "limit density on a uniform angle grid over [-pi, pi]");
    density->add_option("--sigma2", sigma2, "variance parameter")->required();
    density->add_option("--grid", grid, "number of grid points")->capture_default_str();
    add_output_flags(density, out_density);

    CLI::App* moments = app.add_subcommand(
        "moments", "root moments: empirical, coefficient-algebraic, and the limit");
    moments->add_option("--n", n, "polynomial degree")->required();
    moments->add_option("--sigma2", sigma2, "variance parameter")->required();
    moments->add_option("--k", kmax, "largest moment order")->capture_default_str();
    add_output_flags(moments, out_moments);

    CLI::App* zeros =
        app.add_subcommand("cw-zeros", "Lee-Yang zero ordinates with the limit density");
    zeros->add_option("--n", n, "number of spins")->required();
    zeros->add_option("--beta", beta, "inverse temperature")->required();
    add_output_flags(zeros, out_zeros);

    CLI::App* energy = app.add_subcommand(
        "cw-energy", "free energy of finite systems against the large-n limit");
    // The field flag is spelled --h, so this subcommand cannot also own the -h
    // help shorthand.
    energy->set_help_flag("--help", "print this help message and exit");
    energy->add_option("--beta", beta, "inverse temperature")->required();
    energy->add_option("--h", h_text, "external field, a+bi syntax, Re h > 0")->required();
    energy->add_option("--nmax", nmax, "largest system size")->capture_default_str();
    add_output_flags(energy, out_energy);

    CLI::App* heatflow = app.add_subcommand(
        "heatflow", "certified root trajectories under the backward heat flow");
    heatflow->add_option("--input", input_path, "polynomial coefficients, JSON")->required();
    heatflow->add_option("--s", flow_s, "total flow time")->required();
    heatflow->add_option("--steps", steps, "number of flow increments")->capture_default_str();
    add_output_flags(heatflow, out_flow);

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance gate");
    verify->add_option("--suite", suite, "fast caps degrees at 200, full runs to 800")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    uhp::EvalPrecision prec;
    prec.working_digits = digits;
    prec.max_digits = std::max(prec.max_digits, digits);

    try {
        if (*roots) {
            emit(uhp::roots_table(n, sigma2, prec), out_roots);
        } else if (*density) {
            emit(uhp::density_table(sigma2, grid), out_density);
        } else if (*moments) {
            emit(uhp::moments_table(n, sigma2, kmax, prec), out_moments);
        } else if (*zeros) {
            emit(uhp::cw_zeros_table(n, beta), out_zeros);
        } else if (*energy) {
            emit(uhp::cw_energy_table(beta, uhp::parse_complex(h_text), nmax), out_energy);
        } else if (*heatflow) {
            uhp::CirclePoly p;
            try {
                p = uhp::circle_poly_from_json(uhp::read_text_file(input_path));
            } catch (const std::exception& e) {
                throw std::invalid_argument(std::string("heatflow input: ") + e.what());
            }
            emit(uhp::heatflow_table(p, flow_s, steps, prec), out_flow);
        } else if (*verify) {
            std::cout << "acceptance suite, " << suite << " profile\n";
            const auto results = uhp::run_acceptance(suite == "full", std::cout);
            std::size_t passed = 0;
            for (const auto& r : results) passed += r.passed ? 1 : 0;
            std::cout << passed << "/" << results.size() << " criteria passed\n";
            return uhp::all_passed(results) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
