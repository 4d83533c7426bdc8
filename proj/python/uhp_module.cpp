#include <complex>
#include <cstddef>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uhp/circle_roots.hpp"
#include "uhp/curie_weiss.hpp"
#include "uhp/free_normal.hpp"
#include "uhp/heat_flow.hpp"
#include "uhp/poly.hpp"
#include "uhp/saddle.hpp"

namespace py = pybind11;

namespace {

uhp::FreeNormalParams params_for(double sigma2) {
    uhp::FreeNormalParams p;
    p.s2 = sigma2;
    return p;
}

// Scale-folded coefficient values; small enough degrees that doubles hold them.
std::vector<std::complex<double>> coeff_values(const uhp::CirclePoly& p) {
    std::vector<std::complex<double>> out;
    out.reserve(p.coeffs.size());
    for (const uhp::SSComplex& c : p.coeffs) {
        const uhp::SSComplex folded{uhp::ss_mul(p.scale, c.re), uhp::ss_mul(p.scale, c.im)};
        out.push_back(folded.to_complex());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(uhp_native, m) {
    m.doc() =
        "circle root measures of unitary Hermite polynomials, their limit laws, "
        "the backward heat flow, and the mean-field ferromagnet";

    py::class_<uhp::CirclePoly>(m, "CirclePoly",
                                "monic polynomial with certified circle root machinery attached")
        .def_property_readonly(
            "n", [](const uhp::CirclePoly& p) { return p.n; }, "degree")
        .def("coeffs", &coeff_values,
             "coefficient of z^j at index j, global scale folded in")
        .def(
            "eval",
            [](const uhp::CirclePoly& p, std::complex<double> z) { return uhp::poly_eval(p, z); },
            py::arg("z"), "value at z")
        .def(
            "log_eval",
            [](const uhp::CirclePoly& p, std::complex<double> z) {
                return uhp::poly_log_eval(p, z);
            },
            py::arg("z"),
            "log of the value at z, certified against deep cancellation; imaginary part in "
            "(-pi, pi]")
        .def(
            "derivative",
            [](const uhp::CirclePoly& p) { return uhp::poly_derivative(p); },
            "derivative with the coefficient model carried along")
        .def(
            "roots",
            [](const uhp::CirclePoly& p) { return uhp::find_roots(p).angles; },
            "certified root angles, ascending in (-pi, pi]; requires all roots on the unit "
            "circle")
        .def(
            "to_json", [](const uhp::CirclePoly& p) { return uhp::circle_poly_to_json(p); },
            "serialize to the documented sign/log-magnitude JSON schema")
        .def_static(
            "from_json", [](const std::string& text) { return uhp::circle_poly_from_json(text); },
            py::arg("text"), "parse the documented sign/log-magnitude JSON schema");

    m.def("unitary_hermite", &uhp::unitary_hermite, py::arg("n"), py::arg("sigma2"),
          "monic degree n polynomial with coefficient (-1)^(n-j) C(n,j) "
          "exp(-sigma2 j(n-j)/2) on z^j; all roots on the unit circle. The root "
          "measure of the member with parameter sigma2/n approximates the sigma2 "
          "limit law at large n");
    m.def("finite_free_mult", &uhp::finite_free_mult, py::arg("p"), py::arg("q"), py::arg("n"),
          "finite free multiplicative convolution of two degree n polynomials");
    m.def(
        "flow_roots",
        [](const uhp::CirclePoly& p, double s) {
            return uhp::trig_roots(uhp::backward_heat_trig(uhp::trig_from_circle(p), s)).angles;
        },
        py::arg("p"), py::arg("s"),
        "certified root angles after running the backward heat flow for time s; requires even "
        "degree and a conjugate-symmetric coefficient row");

    m.def(
        "density", [](double sigma2, double theta) { return uhp::density(params_for(sigma2), theta); },
        py::arg("sigma2"), py::arg("theta"),
        "density of the limiting root measure at angle theta");
    m.def(
        "cdf", [](double sigma2, double theta) { return uhp::cdf(params_for(sigma2), theta); },
        py::arg("sigma2"), py::arg("theta"),
        "mass of the limiting root measure on [-pi, theta]");
    m.def(
        "moment", [](double sigma2, long long k) { return uhp::moment(params_for(sigma2), k); },
        py::arg("sigma2"), py::arg("k"),
        "k-th moment integral e^(i k theta) of the limiting root measure, exp(-sigma2 k^2 / 2) "
        "times a polynomial correction");
    m.def(
        "support_halfwidth",
        [](double sigma2) { return uhp::support_halfwidth(params_for(sigma2)); },
        py::arg("sigma2"),
        "half width of the support of the limiting root measure, pi once sigma2 reaches 4");

    m.def("limit_log_hermite", &uhp::limit_log_hermite, py::arg("z"), py::arg("sigma2"),
          "large degree limit of (1/n) log of the degree n polynomial with parameter "
          "sigma2/n, for z inside the disk");
    m.def("limit_log_hermite_derivative", &uhp::limit_log_hermite_derivative, py::arg("z"),
          py::arg("sigma2"), "z-derivative of the large degree limit");
    m.def("hermite_integral", &uhp::hermite_integral, py::arg("n"), py::arg("sigma2"),
          py::arg("z"),
          "degree n polynomial with parameter sigma2/n evaluated at z by adaptive "
          "quadrature of a real-line integral representation; never touches the "
          "coefficients");

    m.def("lee_yang_zeros", &uhp::lee_yang_zeros, py::arg("n"), py::arg("beta"),
          "imaginary field ordinates where the n spin partition function vanishes, ascending");
    m.def("lee_yang_density", &uhp::lee_yang_density, py::arg("beta"), py::arg("y"),
          "limit density of the zero ordinates");
    m.def("lee_yang_support", &uhp::lee_yang_support, py::arg("beta"),
          "half width of the zero ordinate support around pi/2 gaps, "
          "asin(sqrt(beta)) + sqrt(beta - beta^2) below beta = 1");
    m.def(
        "log_partition",
        [](std::size_t n, double beta, std::complex<double> h) {
            return uhp::log_partition(n, uhp::CWParams{beta, h});
        },
        py::arg("n"), py::arg("beta"), py::arg("h"),
        "log of the n spin mean-field partition function at inverse temperature beta and "
        "complex external field h");
    m.def(
        "free_energy",
        [](double beta, std::complex<double> h) {
            return uhp::free_energy(uhp::CWParams{beta, h});
        },
        py::arg("beta"), py::arg("h"),
        "large n free energy density; requires Re h > 0");
}
