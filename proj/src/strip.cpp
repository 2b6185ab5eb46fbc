#include "isodens/strip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isodens/errors.hpp"
#include "isodens/rootfind.hpp"
#include "isodens/special.hpp"

namespace isodens {

nlohmann::json CrossoverReport::to_json() const {
    return {{"value", value},
            {"perimeter", perimeter},
            {"bracket_lo", bracket_lo},
            {"bracket_hi", bracket_hi}};
}

namespace strip {

double profile_i(double v) {
    if (!(v > 0.0) || v > M_PI)
        throw DomainError("profile_i: need 0 < v <= pi");
    return 2.0 * std::sqrt(M_PI * v);
}

double profile_ii(double v) {
    if (!(v >= M_PI)) throw DomainError("profile_ii: need v >= pi");
    return v + M_PI;
}

AnglesIII angles_iii(double h, double lambda) {
    if (!(h > 0.0) || h > 1.0) throw DomainError("family iii: need 0 < h <= 1");
    if (!(lambda > 1.0)) throw DomainError("family iii: need lambda > 1");
    const double beta = M_PI - 2.0 * std::asin(std::sqrt(h));
    const double alpha = std::acos(std::cos(beta) / lambda);
    return {alpha, beta};
}

AnglesIV angles_iv(double h, double lambda) {
    if (!(h > 0.0) || h > 1.0) throw DomainError("family iv: need 0 < h <= 1");
    if (!(lambda > 1.0)) throw DomainError("family iv: need lambda > 1");
    const double beta_hat = 0.5 * M_PI - std::asin(h);
    const double alpha_hat = std::acos(h / lambda);
    return {alpha_hat, beta_hat};
}

ProfilePoint profile_iii(double h, double lambda) {
    const auto [alpha, beta] = angles_iii(h, lambda);
    const double sh = std::sqrt(h);
    const double root = std::sqrt(h * (1.0 - h));
    const double sa = std::sin(alpha);
    const double p = 2.0 * lambda * alpha / h + 4.0 * std::asin(sh) / h +
                     2.0 * sa / h - 4.0 * root / h;
    const double a = (lambda * alpha - sa * std::cos(beta)) / (h * h) +
                     2.0 * (std::asin(sh) - root) / (h * h) + 4.0 * sa / h -
                     4.0 * std::sqrt(1.0 - h) / sh;
    return {a, p};
}

ProfilePoint profile_iv(double h, double lambda) {
    const auto [alpha_hat, beta_hat] = angles_iv(h, lambda);
    const double sa = std::sin(alpha_hat);
    const double p = 4.0 * lambda * alpha_hat / h + 4.0 * std::asin(h) / h;
    const double a = 4.0 * sa / h +
                     2.0 * (lambda * alpha_hat - sa * std::cos(beta_hat)) / (h * h) +
                     2.0 * (std::asin(h) - h * std::sqrt(1.0 - h * h)) / (h * h);
    return {a, p};
}

std::string to_string(Family family) {
    switch (family) {
        case Family::I: return "i";
        case Family::II: return "ii";
        case Family::III: return "iii";
        case Family::IV: return "iv";
    }
    throw InvalidSpec("unknown strip family");
}

namespace {

constexpr int kScanPoints = 2048;
constexpr double kHMin = 1e-4;

ProfilePoint eval_family(Family family, double h, double lambda) {
    return family == Family::III ? profile_iii(h, lambda) : profile_iv(h, lambda);
}

struct FamilyTable {
    Family family;
    double lambda;
    std::vector<double> h;
    std::vector<double> area;
    std::vector<double> perimeter;
};

FamilyTable build_table(Family family, double lambda) {
    FamilyTable t{family, lambda, {}, {}, {}};
    t.h.reserve(kScanPoints);
    t.area.reserve(kScanPoints);
    t.perimeter.reserve(kScanPoints);
    for (int i = 0; i < kScanPoints; ++i) {
        const double h =
            kHMin + (1.0 - kHMin) * static_cast<double>(i) / (kScanPoints - 1);
        const ProfilePoint p = eval_family(family, h, lambda);
        t.h.push_back(h);
        t.area.push_back(p.area);
        t.perimeter.push_back(p.perimeter);
    }
    return t;
}

std::vector<AreaRoot> roots_from_table(const FamilyTable& t, double v) {
    std::vector<AreaRoot> roots;
    for (int i = 0; i + 1 < kScanPoints; ++i) {
        const double fa = t.area[i] - v;
        const double fb = t.area[i + 1] - v;
        if (fa == 0.0 && i == 0) {
            roots.push_back({t.h[i], fb > 0.0 ? "ascending" : "descending"});
            continue;
        }
        if (fb == 0.0) {
            roots.push_back({t.h[i + 1], fa < 0.0 ? "ascending" : "descending"});
            continue;
        }
        if (fa * fb < 0.0) {
            auto f = [&](double h) { return eval_family(t.family, h, t.lambda).area - v; };
            const double h = bisect(f, t.h[i], t.h[i + 1], 1e-13);
            roots.push_back({h, fa < 0.0 ? "ascending" : "descending"});
        }
    }
    return roots;
}

double best_alt_perimeter(const FamilyTable& t3, const FamilyTable& t4, double v) {
    double best = std::numeric_limits<double>::infinity();
    for (const FamilyTable* t : {&t3, &t4})
        for (const AreaRoot& r : roots_from_table(*t, v))
            best = std::min(best, eval_family(t->family, r.h, t->lambda).perimeter);
    return best;
}

}  // namespace

std::vector<AreaRoot> invert_area(Family family, double lambda, double v) {
    if (family != Family::III && family != Family::IV)
        throw DomainError("invert_area: only families iii and iv are parametrized by h");
    return roots_from_table(build_table(family, lambda), v);
}

BestProfile best_profile(double v, double lambda) {
    if (!(v > 0.0)) throw DomainError("best_profile: need v > 0");
    if (v <= M_PI) return {Family::I, std::nullopt, profile_i(v)};

    BestProfile best{Family::II, std::nullopt, profile_ii(v)};
    for (Family family : {Family::III, Family::IV}) {
        for (const AreaRoot& r : invert_area(family, lambda, v)) {
            const double p = eval_family(family, r.h, lambda).perimeter;
            if (p < best.perimeter) best = {family, r.h, p};
        }
    }
    return best;
}

CrossoverReport crossover_v0(double lambda) {
    const FamilyTable t3 = build_table(Family::III, lambda);
    const FamilyTable t4 = build_table(Family::IV, lambda);
    // Positive once the arc families undercut the capped strip segment;
    // -inf stands for volumes the arc families do not attain.
    auto gap = [&](double v) {
        const double alt = best_alt_perimeter(t3, t4, v);
        if (!std::isfinite(alt)) return -std::numeric_limits<double>::infinity();
        return profile_ii(v) - alt;
    };

    double lo = M_PI * (1.0 + 1e-6);
    double hi = lo;
    double glo = gap(lo);
    if (glo >= 0.0)
        throw ConvergenceFailure("crossover_v0: arc families already win at v = pi");
    bool bracketed = false;
    for (int i = 0; i < 2000; ++i) {
        const double next = hi * 1.02;
        const double g = gap(next);
        if (g >= 0.0) {
            lo = hi;
            hi = next;
            bracketed = true;
            break;
        }
        hi = next;
        lo = next;
    }
    if (!bracketed) throw ConvergenceFailure("crossover_v0: no crossing found");

    const double v0 = bisect(gap, lo, hi, 1e-13, 1e-10);
    return {v0, profile_ii(v0), lo, hi};
}

DominanceScan iv_dominance_scan(double lambda, const std::vector<double>& h_grid) {
    const FamilyTable t3 = build_table(Family::III, lambda);
    DominanceScan scan;
    scan.grid = h_grid;
    scan.min_gap = std::numeric_limits<double>::infinity();
    for (double h : h_grid) {
        const ProfilePoint iv = profile_iv(h, lambda);
        double best_iii = std::numeric_limits<double>::infinity();
        for (const AreaRoot& r : roots_from_table(t3, iv.area))
            best_iii = std::min(best_iii, profile_iii(r.h, lambda).perimeter);
        const double gap = iv.perimeter - best_iii;
        scan.gaps.push_back(gap);
        if (std::isfinite(gap)) {
            scan.min_gap = std::min(scan.min_gap, gap);
            if (gap < 0.0) ++scan.violations;
        }
    }
    return scan;
}

double arc_gap(double x) { return 2.0 * arc(x) - arc(2.0 * x); }

ArcGapMin arc_gap_min() {
    const double x = golden_minimize(arc_gap, M_PI / 32.0, M_PI / 2.0, 1e-10);
    return {x, arc_gap(x)};
}

}  // namespace strip

double line_density_ratio(double lambda) {
    if (!(lambda > 1.0)) throw DomainError("line_density_ratio: need lambda > 1");
    const double alpha = std::acos(1.0 / lambda);
    const double num = (M_PI - alpha) * lambda + std::sin(alpha);
    return 4.0 * num * num /
           (lambda * (M_PI - alpha + std::sin(alpha) * std::cos(alpha)));
}

}  // namespace isodens
