#include "uhp/saddle.hpp"

#include "uhp/quadrature.hpp"
#include "uhp/zeta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uhp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_z(std::complex<double> z, const char* who) {
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error(std::string(who) + ": z must lie inside the unit disk");
    }
}

void check_s2(double s2, const char* who) {
    if (!(s2 > 0.0) || !std::isfinite(s2)) {
        throw std::domain_error(std::string(who) + ": s2 must be positive and finite");
    }
}

// the principal angle with z = -e^{i theta}; Im theta = -log|z| > 0
std::complex<double> angle_of(std::complex<double> z) {
    return std::complex<double>(0.0, -1.0) * std::log(-z);
}

} // namespace

std::complex<double> saddle_exponent(std::complex<double> t, std::complex<double> z,
                                     double s2) {
    check_s2(s2, "saddle_exponent");
    check_z(z, "saddle_exponent");
    if (!(t.real() < 0.0)) {
        throw std::domain_error("saddle_exponent: t must lie in the open left half-plane");
    }
    const double sig = std::sqrt(s2);
    const std::complex<double> lin = t / sig + sig / 2.0;
    return std::log(1.0 - z * std::exp(t)) - 0.5 * lin * lin;
}

SaddleData saddle_point(std::complex<double> z, double s2) {
    check_s2(s2, "saddle_point");
    check_z(z, "saddle_point");
    SaddleData out;
    if (z == std::complex<double>{0.0, 0.0}) {
        out.t0 = {-s2 / 2.0, 0.0};
        out.S_at_saddle = {0.0, 0.0};
        out.d2S = {-1.0 / s2, 0.0};
        return out;
    }
    const std::complex<double> theta = angle_of(z);
    const ZetaValue zv = zeta(s2 / 4.0, theta / 2.0);
    const std::complex<double> w = std::exp(std::complex<double>(0.0, 2.0) * zv.zeta);
    const std::complex<double> opw = 1.0 + w;
    out.t0 = std::complex<double>(0.0, s2 / 2.0) * std::tan(zv.zeta);
    out.S_at_saddle = std::log(opw) - s2 * w * w / (2.0 * opw * opw);
    out.d2S = w / (opw * opw) - 1.0 / s2;
    return out;
}

std::complex<double> limit_log_hermite(std::complex<double> z, double s2) {
    return saddle_point(z, s2).S_at_saddle;
}

std::complex<double> limit_log_hermite_derivative(std::complex<double> z, double s2) {
    check_s2(s2, "limit_log_hermite_derivative");
    check_z(z, "limit_log_hermite_derivative");
    if (z == std::complex<double>{0.0, 0.0}) {
        return {-std::exp(-s2 / 2.0), 0.0};
    }
    const std::complex<double> theta = angle_of(z);
    const ZetaValue zv = zeta(s2 / 4.0, theta / 2.0);
    const std::complex<double> emt = std::exp(std::complex<double>(0.0, -1.0) * theta);
    const std::complex<double> em2z = std::exp(std::complex<double>(0.0, -2.0) * zv.zeta);
    return -emt / (1.0 + em2z);
}

std::complex<double> hermite_integral(std::size_t n, double s2, std::complex<double> z) {
    check_s2(s2, "hermite_integral");
    check_z(z, "hermite_integral");
    if (n < 1 || n > 200) {
        throw std::invalid_argument("hermite_integral: n must be in [1, 200]");
    }
    const double sig = std::sqrt(s2);
    const double center = -s2 / 2.0;
    // Gaussian window: e^{-80} of the peak, plus s2 of slack because the
    // polynomial factor can push the integrand maximum off the Gaussian one.
    const double half = sig * std::sqrt(160.0 / static_cast<double>(n)) + s2;
    const double nd = static_cast<double>(n);
    const auto f = [&](double t) {
        const std::complex<double> lg = std::log(1.0 - z * std::exp(t));
        const double lin = (t - center) / sig;
        return std::exp(nd * lg - std::complex<double>(0.5 * nd * lin * lin, 0.0));
    };
    // absolute tolerance scaled to the sampled peak of the integrand
    double peak = 0.0;
    for (int i = 0; i <= 64; ++i) {
        const double t = center - half + 2.0 * half * static_cast<double>(i) / 64.0;
        peak = std::max(peak, std::abs(f(t)));
    }
    const std::complex<double> val =
        integrate(f, center - half, center + half, 1e-13 * peak * 2.0 * half);
    const double norm = std::sqrt(nd / (2.0 * kPi * s2));
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    return sgn * norm * val;
}

std::complex<double> hermite_saddle_estimate(std::size_t n, double s2,
                                             std::complex<double> z) {
    const SaddleData sd = saddle_point(z, s2);
    const std::complex<double> pref = std::sqrt(-1.0 / (s2 * sd.d2S));
    return pref * std::exp(static_cast<double>(n) * sd.S_at_saddle);
}

} // namespace uhp
