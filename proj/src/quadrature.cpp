#include "uhp/quadrature.hpp"

#include <cmath>

namespace uhp {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

using Fn = std::function<std::complex<double>(double)>;

struct Panel {
    std::complex<double> integral;
    double err;
};

Panel gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const std::complex<double> fc = f(c);
    std::complex<double> resg = kWg[3] * fc;
    std::complex<double> resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const std::complex<double> sum = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
        resk += kWgk[j] * sum;
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    resk *= h;
    resg *= h;
    return {resk, std::abs(resk - resg)};
}

std::complex<double> adapt(const Fn& f, double a, double b, double tol, int depth) {
    const Panel p = gk15(f, a, b);
    if (p.err <= tol || depth >= 48 || !((b - a) > 1e-15 * (std::fabs(a) + std::fabs(b))))
        return p.integral;
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth + 1) + adapt(f, m, b, 0.5 * tol, depth + 1);
}

} // namespace

std::complex<double> integrate(const Fn& f, double a, double b, double tol) {
    if (a == b) return {0.0, 0.0};
    return adapt(f, a, b, tol, 0);
}

double integrate_real(const std::function<double(double)>& f, double a, double b, double tol) {
    return integrate([&f](double x) { return std::complex<double>(f(x), 0.0); }, a, b, tol)
        .real();
}

} // namespace uhp
