#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracns {
namespace quadrature {

/// 8-point Gauss-Legendre on [a,b].
template <typename F>
double gauss8(F&& f, double a, double b) {
    static const double xs[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                 0.9602898564975363};
    static const double ws[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                 0.1012285362903763};
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += ws[i] * (f(c - hw * xs[i]) + f(c + hw * xs[i]));
    return s * hw;
}

namespace detail {
inline double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_rec(F&& f, double a, double fa, double b, double fb, double m, double fm, double whole,
                    double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adaptive_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson with Richardson acceptance (panel-halving error estimate).
template <typename F>
double adaptive(F&& f, double a, double b, double tol = 1e-10, int max_depth = 28) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    const double whole = detail::simpson(a, fa, fm, b, fb);
    return detail::adaptive_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

/// Integral over [a,b] of an oscillatory integrand whose sign pattern has
/// wavelength `period` (pass +inf when non-oscillatory): the range is cut
/// into half-period chunks, each integrated adaptively.
template <typename F>
double oscillatory(F&& f, double a, double b, double period, double tol = 1e-10) {
    if (!(b > a)) return 0.0;
    double chunk = period > 0.0 && std::isfinite(period) ? 0.5 * period : (b - a);
    chunk = std::min(chunk, b - a);
    const int nchunks = static_cast<int>(std::ceil((b - a) / chunk));
    const double w = (b - a) / nchunks;
    double s = 0.0;
    for (int i = 0; i < nchunks; ++i)
        s += adaptive(f, a + i * w, a + (i + 1) * w, tol / nchunks);
    return s;
}

/// Integral over (0, b] of f ~ s^{-mu} * smooth with mu < 1: geometric
/// panels toward the singular endpoint, Gauss on each, analytic power-law
/// closure of the unresolved head using the measured local exponent mu.
template <typename F>
double singular_left(F&& f, double b, double mu, double tol = 1e-12, int panels = 60) {
    if (!(mu < 1.0)) throw std::domain_error("singular_left: exponent must satisfy mu < 1");
    double hi = b;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = 0.5 * hi;
        s += adaptive(f, lo, hi, tol * 0.5);
        hi = lo;
    }
    // Remaining head: f(s) ~ f(hi) (s/hi)^{-mu}  =>  integral hi*f(hi)/(1-mu).
    s += hi * f(hi) / (1.0 - mu);
    return s;
}

/// Integral over [lo, hi], lo > 0, by octave panels growing from lo; suits
/// power-law integrands spanning many decades (truncated singular tails).
template <typename F>
double geometric_panels(F&& f, double lo, double hi, double tol = 1e-12) {
    if (!(hi > lo) || !(lo > 0.0)) throw std::domain_error("geometric_panels: need 0 < lo < hi");
    double s = 0.0, a = lo;
    while (a < hi) {
        const double b = std::min(2.0 * a, hi);
        s += adaptive(f, a, b, tol);
        a = b;
    }
    return s;
}

/// int_0^t (t-s)^{-a} s^{-b} ds for a,b < 1 by splitting at t/2 and treating
/// each endpoint with geometric panels. Used as the independent cross-check
/// of the Beta-function evaluation.
template <typename F = int>
double dual_singular_time_integral(double a, double b, double t, double tol = 1e-12) {
    if (!(a < 1.0) || !(b < 1.0)) throw std::domain_error("dual_singular_time_integral: need a,b < 1");
    auto f = [&](double s) { return std::pow(t - s, -a) * std::pow(s, -b); };
    auto g = [&](double s) { return std::pow(s, -a) * std::pow(t - s, -b); };  // reflected
    const double half = 0.5 * t;
    double left = singular_left(f, half, b, tol);
    double right = singular_left(g, half, a, tol);
    return left + right;
}

}  // namespace quadrature
}  // namespace fracns
