#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace isodens {

/// Weighted (area, perimeter) pair of a candidate at one parameter value.
struct ProfilePoint {
    double area = 0.0;
    double perimeter = 0.0;
};

/// Result of a crossover-volume search.
struct CrossoverReport {
    double value = 0.0;      // crossing abscissa (volume or offset)
    double perimeter = 0.0;  // common perimeter at the crossing
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;

    nlohmann::json to_json() const;
};

namespace strip {

/// Ball inside the strip: P = 2 sqrt(pi v), 0 < v <= pi.
double profile_i(double v);

/// Strip segment capped by two unit half-disks: P = v + pi, v >= pi.
double profile_ii(double v);

/// Derived angles for the three-arc family (iii): beta = pi - 2 asin(sqrt h),
/// alpha = acos(cos(beta)/lambda); and for the four-arc family (iv):
/// beta_hat = pi/2 - asin(h), alpha_hat = acos(h/lambda).
struct AnglesIII {
    double alpha;
    double beta;
};
struct AnglesIV {
    double alpha_hat;
    double beta_hat;
};
AnglesIII angles_iii(double h, double lambda);
AnglesIV angles_iv(double h, double lambda);

/// Three arcs plus a segment on one strip wall, generalized curvature h.
ProfilePoint profile_iii(double h, double lambda);

/// Four arcs touching both walls, generalized curvature h.
ProfilePoint profile_iv(double h, double lambda);

enum class Family { I, II, III, IV };

std::string to_string(Family family);

struct AreaRoot {
    double h;
    std::string branch;  // "ascending" or "descending" in h
};

/// All h in (0, 1] with area(h) = v for family iii or iv, via a sign-change
/// scan plus bisection. 0, 1 or 2 roots; each labeled by the local slope of
/// the area map.
std::vector<AreaRoot> invert_area(Family family, double lambda, double v);

struct BestProfile {
    Family family;
    std::optional<double> h;
    double perimeter;
};

/// Minimum perimeter over all admissible candidates at volume v.
BestProfile best_profile(double v, double lambda);

/// Smallest v > pi where min(P_iii, P_iv) at equal area crosses P_ii.
CrossoverReport crossover_v0(double lambda);

struct DominanceScan {
    int violations = 0;
    double min_gap = 0.0;  // min over grid of P_iii_best(A_iv(h)) ... P_iv(h) gap
    std::vector<double> grid;
    std::vector<double> gaps;  // P_iv(h) - best iii perimeter at equal area
};

/// Compares P_iv(h) against the best family-iii perimeter at equal area for
/// each h on the grid; a negative gap is a violation of the dominance claim.
DominanceScan iv_dominance_scan(double lambda, const std::vector<double>& h_grid);

/// 2 arc(x) - arc(2x); equals 1 at x = 0.
double arc_gap(double x);

struct ArcGapMin {
    double x_min;
    double value;
};

/// Minimizer of arc_gap over [pi/32, pi/2] by golden section.
ArcGapMin arc_gap_min();

}  // namespace strip

/// Isoperimetric ratio P^2/A of the half-disk-like set meeting the weighted
/// line y = 0 at angle alpha = acos(1/lambda); must stay below 4 pi lambda.
double line_density_ratio(double lambda);

}  // namespace isodens
