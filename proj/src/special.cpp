#include "isodens/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isodens/errors.hpp"
#include "isodens/rootfind.hpp"

namespace isodens {

double gamma_fn(double a) { return std::tgamma(a); }

double erf(double x) { return std::erf(x); }

namespace {

// Series for the regularized lower incomplete gamma P(a, x), x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw ConvergenceFailure("incomplete gamma series did not converge");
}

// Lentz continued fraction for the regularized upper incomplete gamma
// Q(a, x), x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
    throw ConvergenceFailure("incomplete gamma continued fraction did not converge");
}

}  // namespace

double upper_incomplete_gamma(double a, double x) {
    if (!(a > 0.0) || a > 10.0)
        throw DomainError("upper_incomplete_gamma: a must be in (0, 10]");
    if (!(x >= 0.0))
        throw DomainError("upper_incomplete_gamma: x must be nonnegative");
    if (x == 0.0) return std::tgamma(a);
    if (x < a + 1.0)
        return std::tgamma(a) * (1.0 - gamma_p_series(a, x));
    return std::tgamma(a) * gamma_q_cf(a, x);
}

double lower_incomplete_gamma(double a, double x) {
    if (!(a > 0.0) || a > 10.0)
        throw DomainError("lower_incomplete_gamma: a must be in (0, 10]");
    if (!(x >= 0.0))
        throw DomainError("lower_incomplete_gamma: x must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return std::tgamma(a) * gamma_p_series(a, x);
    return std::tgamma(a) * (1.0 - gamma_q_cf(a, x));
}

double circular_segment_area(double gamma) {
    // gamma - sin(gamma) cos(gamma) = gamma - sin(2 gamma)/2
    const double u = 2.0 * gamma;
    if (std::abs(u) < 1e-2) {
        // (u - sin u)/2 by series
        const double u2 = u * u;
        return 0.5 * u * u2 *
               (1.0 / 6.0 - u2 / 120.0 + u2 * u2 / 5040.0 - u2 * u2 * u2 / 362880.0);
    }
    return gamma - std::sin(gamma) * std::cos(gamma);
}

double ArcParametrization::area() const {
    const double s = std::sin(theta);
    return circular_segment_area(theta) / (4.0 * s * s);
}

double ArcParametrization::area_derivative() const {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return (s * s * s - circular_segment_area(theta) * c) / (2.0 * s * s * s);
}

double ArcParametrization::length_derivative() const {
    const double s = std::sin(theta);
    return (s - theta * std::cos(theta)) / (s * s);
}

namespace {

// Inverts A(theta) = x on (0, pi) by safeguarded Newton; A is strictly
// increasing so the bracket is unconditional.
double arc_theta_for_area(double x) {
    // A(theta) < theta for small theta, so theta = x/2 sits below the root
    double lo = std::min(1e-9, 0.5 * x);
    double hi = 3.0;
    while (ArcParametrization{hi}.area() < x) {
        hi = 0.5 * (hi + M_PI);
        if (M_PI - hi < 1e-14)
            throw DomainError("arc: area too large to invert");
    }
    auto f = [x](double t) { return ArcParametrization{t}.area() - x; };
    auto df = [](double t) { return ArcParametrization{t}.area_derivative(); };
    return newton_safeguarded(f, df, lo, hi, 1e-15);
}

}  // namespace

double arc(double x) {
    if (!(x >= 0.0)) throw DomainError("arc: x must be nonnegative");
    if (x < 1e-14) return 1.0;
    const double theta = arc_theta_for_area(x);
    return ArcParametrization{theta}.length();
}

double arc_derivative(double x) {
    if (!(x > 0.0)) throw DomainError("arc_derivative: x must be positive");
    const ArcParametrization p{arc_theta_for_area(x)};
    return p.length_derivative() / p.area_derivative();
}

}  // namespace isodens
