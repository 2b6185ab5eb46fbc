#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isodens/density.hpp"
#include "isodens/geometry.hpp"
#include "isodens/stationarity.hpp"
#include "isodens/strip.hpp"

namespace isodens {

/// Sum over edges of Euclidean length times density. Edges whose endpoints
/// both lie within 1e-9 of the jump interface take the lower one-sided
/// value; edges crossing the interface are split at the crossing and each
/// part sampled at its midpoint. Kahan-compensated summation.
double weighted_perimeter(const Polygon& poly, const Density& density);

/// Weighted area of the region enclosed by a counterclockwise polygon.
/// Piecewise-constant kinds clip exactly against half-planes; the ball kind
/// clips against a regular 2^16-gon inscribed in the unit circle (area
/// error vs the disk below 5e-9, plus ~1e-8 from the on-circle tolerance
/// band). Smooth kinds integrate by a boundary (Green) formula with
/// Gauss-Legendre nodes per edge.
double weighted_area(const Polygon& poly, const Density& density);

/// Families: "strip:i" (param v), "strip:ii" (v), "strip:iii" (h),
/// "strip:iv" (h), "ball:a" (v), "ball:big" (v), "ball:b" (alpha),
/// "ball:B" (beta), "ball:C" (beta_hat), "line" (alpha from lambda, aux =
/// arc radius), "gauss:h" / "gauss:v" (offset), "disk" (radius, aux =
/// center x offset).
struct CandidateSpec {
    std::string family;
    double lambda = 2.0;
    double param = 0.0;
    double aux = 0.0;
};

struct CandidateGeometry {
    Polygon polygon;
    std::vector<CornerSample> corners;
    Density density;
    ProfilePoint closed_form;
};

/// Builds the polygonal approximation of a candidate boundary with about
/// `segments` edges, corners placed exactly on the jump interface, along
/// with the analytic corner data and closed-form (area, perimeter).
CandidateGeometry sample_candidate(const CandidateSpec& spec, int segments);

struct ProbeReport {
    int trials = 0;
    std::uint64_t seed = 0;
    double magnitude = 0.0;
    double min_perimeter_change = 0.0;
    double base_area = 0.0;
    double base_perimeter = 0.0;
    int area_restore_failures = 0;
};

/// Applies random low-frequency (first 8 harmonics) normal displacements of
/// the given magnitude, restores the weighted area by a uniform normal
/// offset (secant, |dA| < 1e-8), and reports the most negative perimeter
/// change observed. A stationary candidate only loses O(magnitude^2).
ProbeReport perturbation_probe(const Polygon& poly, const Density& density,
                               double magnitude, int trials,
                               std::uint64_t seed = 20260825ULL);

}  // namespace isodens
