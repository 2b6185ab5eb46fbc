#pragma once

#include <cmath>
#include <functional>

#include "isodens/errors.hpp"

namespace isodens {

/// Bisection on a bracketing interval [a, b] with f(a) and f(b) of opposite
/// sign. Converges to |b - a| < xtol or |f| < ftol.
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double xtol = 1e-14, double ftol = 0.0, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw ConvergenceFailure("bisect: interval does not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0 || (ftol > 0.0 && std::abs(fm) < ftol) || (b - a) < xtol)
            return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

/// Bisection refined by Newton steps that stay inside the bracket.
/// df is the analytic derivative.
inline double newton_safeguarded(const std::function<double(double)>& f,
                                 const std::function<double(double)>& df, double a,
                                 double b, double xtol = 1e-14, int max_iter = 100) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw ConvergenceFailure("newton_safeguarded: no bracket");
    double x = 0.5 * (a + b);
    for (int i = 0; i < max_iter; ++i) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fa < 0.0) == (fx < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
        const double d = df(x);
        double xn = (d != 0.0) ? x - fx / d : 0.5 * (a + b);
        if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
        if (std::abs(xn - x) < xtol) return xn;
        x = xn;
    }
    return x;
}

/// Golden-section minimization of a unimodal function on [a, b].
inline double golden_minimize(const std::function<double(double)>& f, double a,
                              double b, double xtol = 1e-10) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > xtol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace isodens
