#include "isodens/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isodens/errors.hpp"
#include "isodens/rootfind.hpp"
#include "isodens/special.hpp"

namespace isodens::ball {

double profile_a(double v) {
    if (!(v > 0.0)) throw DomainError("profile_a: need v > 0");
    return 2.0 * std::sqrt(M_PI * v);
}

double profile_big(double v, double lambda) {
    if (!(lambda > 1.0)) throw DomainError("profile_big: need lambda > 1");
    if (!(v >= lambda * M_PI)) throw DomainError("profile_big: need v >= lambda pi");
    return 2.0 * M_PI * std::sqrt(v / M_PI + 1.0 - lambda);
}

std::string to_string(ShapeB shape) {
    switch (shape) {
        case ShapeB::Convex: return "convex";
        case ShapeB::Chord: return "chord";
        case ShapeB::Nonconvex: return "nonconvex";
    }
    throw InvalidSpec("unknown lens shape class");
}

LensProfile profile_b(double alpha, double lambda) {
    if (!(alpha > 0.0) || !(alpha < M_PI))
        throw DomainError("profile_b: need alpha in (0, pi)");
    if (!(lambda > 1.0)) throw DomainError("profile_b: need lambda > 1");
    const double beta0 = std::acos(1.0 / lambda);
    const double beta = alpha + beta0;
    const double sb = std::sin(beta);
    // rho is signed: negative once the outer arc bends the other way
    // (nonconvex shapes, beta > pi); the chord case beta = pi is the
    // rho -> inf straight limit, handled by its exact formulas.
    LensProfile out;
    if (std::abs(sb) < 1e-12) {
        const double chord = std::sin(alpha);
        out.perimeter = 2.0 * (alpha + lambda * chord);
        out.area = lambda * circular_segment_area(alpha);
        out.shape_class = ShapeB::Chord;
        return out;
    }
    const double rho = std::sin(alpha) / sb;
    out.perimeter = 2.0 * (alpha + lambda * rho * (M_PI - beta));
    out.area = lambda * (circular_segment_area(alpha) +
                         rho * rho * circular_segment_area(M_PI - beta));
    out.shape_class = beta < M_PI ? ShapeB::Convex : ShapeB::Nonconvex;
    return out;
}

double psi_check(const std::vector<double>& t_grid) {
    double best = std::numeric_limits<double>::infinity();
    for (double t : t_grid) {
        if (!(t > 0.0) || t > 1.0) throw DomainError("psi_check: grid must lie in (0, 1]");
        const double psi = std::sqrt(1.0 - t * t) + (M_PI - std::acos(t)) / t;
        best = std::min(best, psi - M_PI);
    }
    return best;
}

double lens_area(double alpha, double lambda) { return profile_b(alpha, lambda).area; }

double lens_alpha_for_area(double v, double lambda) {
    if (!(v > 0.0) || !(v < lambda * M_PI))
        throw DomainError("lens_alpha_for_area: need 0 < v < lambda pi");
    auto f = [&](double a) { return lens_area(a, lambda) - v; };
    return bisect(f, 1e-9, M_PI - 1e-9, 1e-14);
}

CrossoverReport crossover_gt1(double lambda) {
    if (!(lambda > 1.0)) throw DomainError("crossover_gt1: need lambda > 1");
    auto gap = [&](double v) {
        const double alpha = lens_alpha_for_area(v, lambda);
        return profile_a(v) - profile_b(alpha, lambda).perimeter;
    };
    const double lo = 1e-6;
    const double hi = lambda * M_PI * (1.0 - 1e-9);
    if (!(gap(lo) < 0.0 && gap(hi) > 0.0))
        throw ConvergenceFailure("crossover_gt1: endpoint ordering unexpected");
    const double v0 = bisect(gap, lo, hi, 1e-13, 1e-10);
    return {v0, profile_a(v0), lo, hi};
}

double lens_small_area_ratio(double lambda) {
    auto ratio = [&](double alpha) {
        const LensProfile p = profile_b(alpha, lambda);
        return p.perimeter * p.perimeter / p.area;
    };
    // Richardson extrapolation on a halving sequence, removing the O(alpha)
    // and O(alpha^2) error terms.
    const double r1 = ratio(4e-3);
    const double r2 = ratio(2e-3);
    const double r3 = ratio(1e-3);
    const double s1 = 2.0 * r2 - r1;
    const double s2 = 2.0 * r3 - r2;
    return (4.0 * s2 - s1) / 3.0;
}

double profile_A(double v, double lambda) {
    if (!(lambda > 0.0) || lambda >= 1.0) throw DomainError("profile_A: need lambda in (0,1)");
    if (!(v > 0.0) || v > lambda * M_PI)
        throw DomainError("profile_A: need 0 < v <= lambda pi");
    return 2.0 * std::sqrt(lambda * M_PI * v);
}

ProfilePoint profile_B(double beta, double lambda) {
    if (!(lambda > 0.0) || lambda >= 1.0) throw DomainError("profile_B: need lambda in (0,1)");
    const double beta_max = M_PI - std::acos(lambda);
    if (!(beta > 0.0) || beta > beta_max + 1e-15)
        throw DomainError("profile_B: need beta in (0, pi - acos(lambda)]");
    const double alpha = beta + std::acos(lambda);
    const double r = std::sin(alpha) / std::sin(beta);
    const double p = 2.0 * ((M_PI - beta) * r + lambda * alpha);
    const double a = r * r * circular_segment_area(M_PI - beta) +
                     circular_segment_area(alpha) - (1.0 - lambda) * M_PI;
    return {a, p};
}

ProfilePoint profile_C(double beta_hat, double lambda) {
    if (!(lambda > 0.0) || lambda >= 1.0) throw DomainError("profile_C: need lambda in (0,1)");
    if (!(beta_hat > 0.0) || !(beta_hat < 0.5 * M_PI))
        throw DomainError("profile_C: need beta_hat in (0, pi/2)");
    const double t = std::tan(beta_hat);
    const double sc = std::sin(beta_hat) * std::cos(beta_hat);
    const double p = 2.0 * (M_PI - (1.0 - lambda) * beta_hat) / t;
    const double a = (M_PI - (1.0 - lambda) * (beta_hat - sc)) / (t * t) -
                     (1.0 - lambda) * (0.5 * M_PI - beta_hat - sc);
    return {a, p};
}

double beta_for_area_B(double v, double lambda) {
    const double beta_max = M_PI - std::acos(lambda);
    if (!(v >= lambda * M_PI))
        throw DomainError("beta_for_area_B: need v >= lambda pi");
    auto f = [&](double b) { return profile_B(b, lambda).area - v; };
    return bisect(f, 1e-9, beta_max, 1e-14);
}

double beta_hat_for_area_C(double v, double lambda) {
    if (!(v > 0.0)) throw DomainError("beta_hat_for_area_C: need v > 0");
    auto f = [&](double b) { return profile_C(b, lambda).area - v; };
    return bisect(f, 1e-9, 0.5 * M_PI - 1e-12, 1e-14);
}

CrossoverLt1 crossover_lt1(double lambda) {
    if (!(lambda > 0.0) || lambda >= 1.0)
        throw DomainError("crossover_lt1: need lambda in (0,1)");
    // P_C - P_B at equal area; positive where the B-profile wins.
    auto diff = [&](double v) {
        const double pb = profile_B(beta_for_area_B(v, lambda), lambda).perimeter;
        const double pc = profile_C(beta_hat_for_area_C(v, lambda), lambda).perimeter;
        return pc - pb;
    };
    const int n = 4096;
    const double v_lo = lambda * M_PI * (1.0 + 1e-9);
    const double v_hi = std::max(60.0, 20.0 * lambda * M_PI);
    std::vector<double> vs(n), ds(n);
    for (int i = 0; i < n; ++i) {
        vs[i] = v_lo + (v_hi - v_lo) * static_cast<double>(i) / (n - 1);
        ds[i] = diff(vs[i]);
    }
    int first = -1;
    int last = -1;
    for (int i = 0; i + 1 < n; ++i) {
        if (ds[i] * ds[i + 1] < 0.0 || ds[i + 1] == 0.0) {
            if (first < 0) first = i;
            last = i;
        }
    }
    if (first < 0)
        throw ConvergenceFailure("crossover_lt1: no B/C crossing found on the area grid");
    const double v1 = bisect(diff, vs[first], vs[first + 1], 1e-12, 1e-10);
    const double v2 = bisect(diff, vs[last], vs[last + 1], 1e-12, 1e-10);
    CrossoverLt1 out;
    out.v1 = {v1, profile_B(beta_for_area_B(v1, lambda), lambda).perimeter, vs[first],
              vs[first + 1]};
    out.v2 = {v2, profile_B(beta_for_area_B(v2, lambda), lambda).perimeter, vs[last],
              vs[last + 1]};
    out.coincide = std::abs(v2 - v1) < 1e-6;
    return out;
}

double f_lambda_check(const std::vector<double>& grid) {
    double best = std::numeric_limits<double>::infinity();
    for (double l : grid) {
        if (!(l > 0.0) || !(l < 1.0))
            throw DomainError("f_lambda_check: grid must lie in (0, 1)");
        best = std::min(best, std::acos(l) - std::sqrt(1.0 - l * l) + 1.0 - l);
    }
    return best;
}

}  // namespace isodens::ball
