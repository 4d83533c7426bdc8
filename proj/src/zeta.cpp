#include "uhp/zeta.hpp"

#include "uhp/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uhp {

namespace {

using C = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

// tan via w = e^{2iz}: |w| <= 1 on the upper half plane, so nothing
// overflows no matter how large Im z gets; the lower half plane goes through
// the reflection tan(z) = conj(tan(conj z)).
C tan_upper(C z) {
    const C w = std::exp(C(0.0, 2.0) * z);
    return C(0.0, 1.0) * (1.0 - w) / (1.0 + w);
}

C tan_safe(C z) {
    if (z.imag() >= 0.0) return tan_upper(z);
    return std::conj(tan_upper(std::conj(z)));
}

struct G {
    C val;
    C deriv;
};

G eval_g(double t, C theta, C z) {
    const C tn = tan_safe(z);
    return {z - t * tn - theta, 1.0 - t * (1.0 + tn * tn)};
}

bool finite(C z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct Attempt {
    C z;
    double residual = 0.0;
    double deriv_mag = 0.0;
    bool ok = false;
};

bool accept(double residual, double deriv_mag, double tol) {
    if (residual <= tol) return true;
    // near a support edge the derivative of z - t tan z vanishes and Newton
    // degrades to linear convergence; a looser residual is accepted there
    return residual <= 1e-10 && deriv_mag <= 1e-2;
}

Attempt newton_from(double t, C theta, C z, const ZetaConfig& cfg, int& used) {
    G g = eval_g(t, theta, z);
    for (int k = 0; k < 120; ++k) {
        if (std::abs(g.val) <= cfg.newton_tol) break;
        C step = -g.val / g.deriv;
        if (!finite(step)) step = C(1e-8, 1e-8);  // derivative vanished: nudge
        if (std::abs(step) > 1.0) step /= std::abs(step);
        C nz;
        G ng;
        for (int h = 0;; ++h) {
            nz = z + step;
            if (nz.imag() < 0.0) nz = C(nz.real(), 0.0);
            ng = eval_g(t, theta, nz);
            if ((finite(ng.val) && std::abs(ng.val) < std::abs(g.val)) || h >= 40) break;
            step *= 0.5;
        }
        ++used;
        if (!finite(ng.val) || std::abs(ng.val) >= std::abs(g.val)) break;  // stalled
        z = nz;
        g = ng;
    }
    Attempt a;
    a.z = z;
    a.residual = std::abs(g.val);
    a.deriv_mag = std::abs(g.deriv);
    a.ok = accept(a.residual, a.deriv_mag, cfg.newton_tol);
    return a;
}

Attempt solve_interior(double t, C theta, const ZetaConfig& cfg, int& used) {
    C z = theta + C(0.0, t);
    C prev = z;
    for (int k = 0; k < cfg.max_fixed_point_iters; ++k) {
        const C nz = theta + t * tan_safe(z);
        ++used;
        if (!finite(nz) || nz.imag() < 0.0) break;  // hand over to Newton
        prev = z;
        z = nz;
        if (std::abs(z - prev) < 1e-3) break;
    }
    return newton_from(t, theta, z, cfg, used);
}

Attempt solve_real(double t, double theta_re, const ZetaConfig& cfg, int& used) {
    const auto& sched = cfg.boundary_descent;
    if (sched.empty()) throw std::domain_error("zeta: boundary_descent must be nonempty");
    for (std::size_t i = 0; i < sched.size(); ++i) {
        if (!(sched[i] > 0.0) || (i > 0 && !(sched[i] < sched[i - 1])))
            throw std::domain_error("zeta: boundary_descent must be positive and strictly decreasing");
    }

    Attempt cur = solve_interior(t, C(theta_re, sched.front()), cfg, used);
    if (!cur.ok) return cur;
    double good_delta = sched.front();

    for (std::size_t i = 1; i <= sched.size(); ++i) {
        const double target = (i < sched.size()) ? sched[i] : 0.0;
        double delta = target;
        int refinements = 0;
        for (;;) {
            Attempt nxt = newton_from(t, C(theta_re, delta), cur.z, cfg, used);
            if (nxt.ok) {
                cur = nxt;
                good_delta = delta;
                if (delta == target) break;
                delta = target;  // resume toward the scheduled offset
            } else {
                // stalled: retry at the geometric mean of the last good and
                // the failed offset (the edge squeezes the basin of attraction)
                if (++refinements > 24) return nxt;
                delta = (target > 0.0) ? std::sqrt(good_delta * delta)
                                       : good_delta * 0.25;
            }
        }
    }
    if (cur.z.imag() < 0.0 && cur.z.imag() > -1e-13)
        cur.z = C(cur.z.real(), 0.0);  // Newton roundoff on a real root
    return cur;
}

} // namespace

std::vector<double> ZetaConfig::default_descent() {
    std::vector<double> d;
    for (int k = 1; k <= 12; ++k) d.push_back(std::pow(10.0, -k));
    return d;
}

ZetaValue zeta(double t, std::complex<double> theta, const ZetaConfig& cfg) {
    if (!(t > 0.0)) throw std::domain_error("zeta: t must be positive");
    if (theta.imag() < 0.0) throw std::domain_error("zeta: Im theta must be >= 0");

    // Reduce by the period pi, then fold onto Re >= 0 via the reflection
    // zeta(-conj theta) = -conj(zeta(theta)); both identities then hold to
    // rounding by construction.
    const double k = std::floor((theta.real() + kPi / 2.0) / kPi);
    const C thr(theta.real() - k * kPi, theta.imag());
    const bool reflect = thr.real() < 0.0;
    const C thc = reflect ? C(-thr.real(), thr.imag()) : thr;

    int used = 0;
    Attempt a = (thc.imag() > 0.0) ? solve_interior(t, thc, cfg, used)
                                   : solve_real(t, thc.real(), cfg, used);
    if (!a.ok)
        throw SolverError("zeta: no convergence, last residual " + std::to_string(a.residual));

    C z = reflect ? C(-a.z.real(), a.z.imag()) : a.z;
    z += k * kPi;
    return ZetaValue{z, a.residual, used};
}

double zeta_boundary_line(double t, double tau) {
    if (!(t > 0.0)) throw std::domain_error("zeta_boundary_line: t must be positive");
    if (!(tau >= 0.0)) throw std::domain_error("zeta_boundary_line: tau must be >= 0");
    // f(y) = y - t coth(y) - tau is strictly increasing (f' = 1 + t csch^2),
    // from -inf at 0+ to +inf; coth via expm1 so large y never overflows.
    const auto f = [&](double y) {
        return y - t * (1.0 + 2.0 / std::expm1(2.0 * y)) - tau;
    };
    double lo = std::sqrt(t);  // coth y > 1/y gives f(sqrt t) < -tau <= 0
    while (f(lo) > 0.0 && lo > 1e-300) lo *= 0.5;
    double hi = tau + t + 1.0;
    for (int k = 0; k < 200 && hi - lo > 0.0; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) <= 0.0 ? lo : hi) = mid;
    }
    double y = 0.5 * (lo + hi);
    for (int k = 0; k < 3; ++k) {
        const double e2 = std::expm1(2.0 * y);
        const double fp = 1.0 + t * 4.0 * (e2 + 1.0) / (e2 * e2);
        const double step = f(y) / fp;
        if (!std::isfinite(step)) break;
        const double ny = y - step;
        if (ny > 0.0 && std::isfinite(ny)) y = ny;
    }
    return y;
}

} // namespace uhp
