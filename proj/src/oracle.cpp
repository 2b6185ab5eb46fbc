#include "isodens/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "isodens/ball.hpp"
#include "isodens/errors.hpp"
#include "isodens/gaussmod.hpp"
#include "isodens/quadrature.hpp"
#include "isodens/special.hpp"

namespace isodens {

namespace {

struct Kahan {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

constexpr double kOnGammaTol = 1e-9;

// Distance of a point to the jump interface of a piecewise density.
double gamma_distance(const Density& d, const Vec2& p) {
    return std::abs(interface_distance(d, p));
}

// Lower one-sided density value on the interface.
double on_gamma_value(const Density& d) { return std::min(1.0, d.lambda); }

// Parameters t in (0,1) where the edge a->b crosses the interface.
std::vector<double> gamma_crossings(const Density& d, const Vec2& a, const Vec2& b) {
    std::vector<double> ts;
    auto add_line = [&](double level) {
        const double fa = a.y - level;
        const double fb = b.y - level;
        if (fa * fb < 0.0) ts.push_back(fa / (fa - fb));
    };
    switch (d.kind) {
        case DensityKind::Strip:
            add_line(1.0);
            add_line(-1.0);
            break;
        case DensityKind::Line:
        case DensityKind::HalfSpace:
            add_line(0.0);
            break;
        case DensityKind::Ball: {
            const Vec2 dir = b - a;
            const double qa = dir.norm2();
            const double qb = dot(a, dir);
            const double qc = a.norm2() - 1.0;
            const double disc = qb * qb - qa * qc;
            if (disc > 0.0 && qa > 0.0) {
                const double s = std::sqrt(disc);
                for (double t : {(-qb - s) / qa, (-qb + s) / qa})
                    if (t > 1e-12 && t < 1.0 - 1e-12) ts.push_back(t);
            }
            break;
        }
        default:
            break;
    }
    std::sort(ts.begin(), ts.end());
    return ts;
}

}  // namespace

double weighted_perimeter(const Polygon& poly, const Density& density) {
    const std::size_t n = poly.size();
    if (n < 3) throw InvalidSpec("weighted_perimeter: need at least 3 vertices");
    Kahan acc;
    const bool pw = density.piecewise();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % n];
        if (!pw) {
            acc.add((b - a).norm() * evaluate(density, 0.5 * (a + b)));
            continue;
        }
        std::vector<double> ts = gamma_crossings(density, a, b);
        ts.insert(ts.begin(), 0.0);
        ts.push_back(1.0);
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
            const Vec2 p = a + ts[k] * (b - a);
            const Vec2 q = a + ts[k + 1] * (b - a);
            const double len = (q - p).norm();
            if (len == 0.0) continue;
            double w;
            if (gamma_distance(density, p) < kOnGammaTol &&
                gamma_distance(density, q) < kOnGammaTol) {
                w = on_gamma_value(density);
            } else {
                w = evaluate(density, 0.5 * (p + q));
            }
            acc.add(len * w);
        }
    }
    return acc.sum;
}

namespace {

// ---- clipping against the inscribed 2^16-gon of the unit circle ----

constexpr int kClipGon = 1 << 16;
const double kClipDelta = 2.0 * M_PI / kClipGon;
constexpr double kBandTol = 1e-8;  // |r - 1| below this counts as on the circle

int classify_radius(double r) {
    if (r < 1.0 - kBandTol) return -1;
    if (r > 1.0 + kBandTol) return +1;
    return 0;
}

struct CircleEvent {
    double angle;
    bool exit;
};

bool point_in_polygon(const Polygon& poly, const Vec2& p) {
    bool in = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (x > p.x) in = !in;
        }
    }
    return in;
}

double wrap_angle(double t) {
    while (t < 0.0) t += 2.0 * M_PI;
    while (t >= 2.0 * M_PI) t -= 2.0 * M_PI;
    return t;
}

// Cross-term sum of the clip-gon path from angle te (point E) counter-
// clockwise to angle ts (point S), walking the 2^16-gon vertices between.
double chain_cross_sum(double te, const Vec2& E, double ts, const Vec2& S) {
    double hi = ts > te ? ts : ts + 2.0 * M_PI;
    const long kf = static_cast<long>(std::ceil(te / kClipDelta + 1e-12));
    const long kl = static_cast<long>(std::floor(hi / kClipDelta - 1e-12));
    if (kf > kl) return cross(E, S);
    const Vec2 vf{std::cos(kf * kClipDelta), std::sin(kf * kClipDelta)};
    const Vec2 vl{std::cos(kl * kClipDelta), std::sin(kl * kClipDelta)};
    return cross(E, vf) + static_cast<double>(kl - kf) * std::sin(kClipDelta) +
           cross(vl, S);
}

// Euclidean area of (polygon intersect inscribed 2^16-gon of unit circle).
double clip_disk_area(const Polygon& poly) {
    const std::size_t n = poly.size();
    Kahan acc;
    std::vector<CircleEvent> exits;
    std::vector<CircleEvent> entries;
    std::vector<Vec2> exit_pts, entry_pts;
    bool any_in = false;

    auto circle_roots = [](const Vec2& a, const Vec2& d, double& t1, double& t2) {
        const double qa = d.norm2();
        const double qb = dot(a, d);
        const double qc = a.norm2() - 1.0;
        const double disc = qb * qb - qa * qc;
        if (disc < 0.0 || qa == 0.0) return false;
        const double s = std::sqrt(disc);
        t1 = (-qb - s) / qa;
        t2 = (-qb + s) / qa;
        return true;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % n];
        const Vec2 d = b - a;
        const int ca = classify_radius(a.norm());
        const int cb = classify_radius(b.norm());
        if (ca <= 0) any_in = true;

        if (ca <= 0 && cb <= 0) {
            // chord of the closed disk stays inside (convexity)
            acc.add(cross(a, b));
        } else if (ca > 0 && cb > 0) {
            double t1, t2;
            if (circle_roots(a, d, t1, t2) && t1 > 1e-12 && t2 < 1.0 - 1e-12 &&
                t2 > t1) {
                const Vec2 P = a + t1 * d;
                const Vec2 Q = a + t2 * d;
                if (classify_radius((0.5 * (P + Q)).norm()) < 0) {
                    acc.add(cross(P, Q));
                    entries.push_back({wrap_angle(std::atan2(P.y, P.x)), false});
                    entry_pts.push_back(P);
                    exits.push_back({wrap_angle(std::atan2(Q.y, Q.x)), true});
                    exit_pts.push_back(Q);
                }
            }
        } else if (ca <= 0 && cb > 0) {
            double t1, t2;
            double t = 0.0;
            if (circle_roots(a, d, t1, t2)) t = std::clamp(t2, 0.0, 1.0);
            const Vec2 E = a + t * d;
            acc.add(cross(a, E));
            exits.push_back({wrap_angle(std::atan2(E.y, E.x)), true});
            exit_pts.push_back(E);
        } else {
            double t1, t2;
            double t = 0.0;
            if (circle_roots(a, d, t1, t2)) t = std::clamp(t1, 0.0, 1.0);
            const Vec2 S = a + t * d;
            acc.add(cross(S, b));
            entries.push_back({wrap_angle(std::atan2(S.y, S.x)), false});
            entry_pts.push_back(S);
        }
    }

    if (exits.empty() && entries.empty()) {
        if (any_in) return 0.5 * acc.sum;
        if (point_in_polygon(poly, {0.0, 0.0}))
            return 0.5 * kClipGon * std::sin(kClipDelta);
        return 0.0;
    }
    if (exits.size() != entries.size())
        throw QuadratureFailure("disk clip: unbalanced boundary crossings");

    // Pair each exit with the next entry counterclockwise along the circle.
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return entries[x].angle < entries[y].angle;
    });
    for (std::size_t i = 0; i < exits.size(); ++i) {
        const double te = exits[i].angle;
        std::size_t pick = order[0];
        for (std::size_t j : order) {
            if (entries[j].angle > te) {
                pick = j;
                break;
            }
        }
        acc.add(chain_cross_sum(te, exit_pts[i], entries[pick].angle,
                                entry_pts[pick]));
    }
    return 0.5 * acc.sum;
}

double gauss_green_antiderivative(const Vec2& p) {
    return 0.5 * std::sqrt(M_PI) * std::erf(p.x) *
           std::exp(-p.y * p.y * p.y * p.y);
}

}  // namespace

double weighted_area(const Polygon& poly, const Density& density) {
    const std::size_t n = poly.size();
    if (n < 3) throw InvalidSpec("weighted_area: need at least 3 vertices");
    const double total = poly.signed_area();
    switch (density.kind) {
        case DensityKind::Constant:
            return total;
        case DensityKind::Line:
            // the line itself is a null set
            return density.lambda * total;
        case DensityKind::Strip: {
            Polygon mid = clip_halfplane(poly, {0.0, 1.0}, 1.0);
            mid = clip_halfplane(mid, {0.0, -1.0}, 1.0);
            const double a_mid = mid.size() >= 3 ? mid.signed_area() : 0.0;
            return density.lambda * (total - a_mid) + a_mid;
        }
        case DensityKind::HalfSpace: {
            Polygon low = clip_halfplane(poly, {0.0, 1.0}, 0.0);
            const double a_low = low.size() >= 3 ? low.signed_area() : 0.0;
            return a_low + density.lambda * (total - a_low);
        }
        case DensityKind::Ball:
            return total + (density.lambda - 1.0) * clip_disk_area(poly);
        case DensityKind::GaussMod: {
            // Green's theorem with d/dx antiderivative of the density
            Kahan acc;
            for (std::size_t i = 0; i < n; ++i) {
                const Vec2& a = poly.vertices[i];
                const Vec2& b = poly.vertices[(i + 1) % n];
                const double dy = b.y - a.y;
                if (dy == 0.0) continue;
                acc.add(dy * gauss16(
                                 [&](double t) {
                                     return gauss_green_antiderivative(a + t * (b - a));
                                 },
                                 0.0, 1.0));
            }
            return acc.sum;
        }
        case DensityKind::Cone: {
            // fan of signed triangles from the origin
            Kahan acc;
            for (std::size_t i = 0; i < n; ++i) {
                const Vec2& a = poly.vertices[i];
                const Vec2& b = poly.vertices[(i + 1) % n];
                const double c = cross(a, b);
                if (c == 0.0) continue;
                acc.add(c / 3.0 *
                        gauss16([&](double t) { return (a + t * (b - a)).norm(); },
                                0.0, 1.0));
            }
            return acc.sum;
        }
    }
    throw InvalidSpec("unknown density kind");
}

// ---- candidate boundary emission ----

namespace {

struct Piece {
    enum Kind { Arc, Segment } kind;
    Vec2 c0;       // arc center / segment start
    Vec2 c1;       // segment end
    double radius = 0.0;  // signed for arcs
    double phi0 = 0.0;
    double phi1 = 0.0;

    static Piece arc(Vec2 center, double r, double a0, double a1) {
        Piece p;
        p.kind = Arc;
        p.c0 = center;
        p.radius = r;
        p.phi0 = a0;
        p.phi1 = a1;
        return p;
    }
    static Piece seg(Vec2 a, Vec2 b) {
        Piece p;
        p.kind = Segment;
        p.c0 = a;
        p.c1 = b;
        return p;
    }

    double length() const {
        if (kind == Segment) return (c1 - c0).norm();
        return std::abs(radius * (phi1 - phi0));
    }

    void emit(std::vector<Vec2>& out, int nseg) const {
        for (int i = 0; i < nseg; ++i) {
            const double t = static_cast<double>(i) / nseg;
            if (kind == Segment) {
                out.push_back(c0 + t * (c1 - c0));
            } else {
                const double phi = phi0 + t * (phi1 - phi0);
                out.push_back(c0 + radius * Vec2{std::cos(phi), std::sin(phi)});
            }
        }
    }
};

Polygon emit_pieces(const std::vector<Piece>& pieces, int segments) {
    double total = 0.0;
    for (const Piece& p : pieces) total += p.length();
    Polygon poly;
    for (const Piece& p : pieces) {
        int nseg = static_cast<int>(std::llround(segments * p.length() / total));
        nseg = std::max(nseg, p.kind == Piece::Arc ? 4 : 1);
        p.emit(poly.vertices, nseg);
    }
    return poly;
}

}  // namespace

CandidateGeometry sample_candidate(const CandidateSpec& spec, int segments) {
    if (segments < 16) throw InvalidSpec("sample_candidate: need at least 16 segments");
    const std::string& fam = spec.family;
    const double lam = spec.lambda;
    CandidateGeometry g;
    std::vector<Piece> pieces;

    if (fam == "strip:i") {
        const double v = spec.param;
        const double r = std::sqrt(v / M_PI);
        pieces.push_back(Piece::arc({0.0, 0.0}, r, 0.0, 2.0 * M_PI));
        g.density = Density::strip(lam);
        g.closed_form = {v, strip::profile_i(v)};
    } else if (fam == "strip:ii") {
        const double v = spec.param;
        if (!(v >= M_PI)) throw InvalidSpec("strip:ii needs v >= pi");
        // rectangle area 4L plus two unit half-disks gives v
        const double L = 0.25 * (v - M_PI);
        pieces.push_back(Piece::seg({-L, -1.0}, {L, -1.0}));
        pieces.push_back(Piece::arc({L, 0.0}, 1.0, -0.5 * M_PI, 0.5 * M_PI));
        pieces.push_back(Piece::seg({L, 1.0}, {-L, 1.0}));
        pieces.push_back(Piece::arc({-L, 0.0}, 1.0, 0.5 * M_PI, 1.5 * M_PI));
        g.density = Density::strip(lam);
        g.closed_form = {v, strip::profile_ii(v)};
    } else if (fam == "strip:iii") {
        const double h = spec.param;
        const auto [alpha, beta] = strip::angles_iii(h, lam);
        const double R = 1.0 / h;
        const double X = R * (std::sin(alpha) - std::sin(beta));
        const double xc = R * std::sin(alpha);
        pieces.push_back(Piece::seg({-X, -1.0}, {X, -1.0}));
        pieces.push_back(Piece::arc({X, R - 1.0}, R, -0.5 * M_PI, 0.5 * M_PI - beta));
        pieces.push_back(Piece::arc({0.0, 1.0 - R * std::cos(alpha)}, R,
                                    0.5 * M_PI - alpha, 0.5 * M_PI + alpha));
        pieces.push_back(Piece::arc({-X, R - 1.0}, R, 0.5 * M_PI + beta, 1.5 * M_PI));
        g.density = Density::strip(lam);
        const ProfilePoint pp = strip::profile_iii(h, lam);
        g.closed_form = pp;
        g.corners.push_back({{xc, 1.0}, 1.0, lam, beta, alpha});
        g.corners.push_back({{-xc, 1.0}, 1.0, lam, beta, alpha});
    } else if (fam == "strip:iv") {
        const double h = spec.param;
        const auto [alpha_hat, beta_hat] = strip::angles_iv(h, lam);
        const double R = 1.0 / h;
        const double gam = std::asin(h);
        const double x0 = R * (std::sin(alpha_hat) - std::sin(beta_hat));
        const double xc = R * std::sin(alpha_hat);
        const double yc = 1.0 - R * std::cos(alpha_hat);
        pieces.push_back(
            Piece::arc({0.0, -yc}, R, -0.5 * M_PI - alpha_hat, -0.5 * M_PI + alpha_hat));
        pieces.push_back(Piece::arc({x0, 0.0}, R, -gam, gam));
        pieces.push_back(
            Piece::arc({0.0, yc}, R, 0.5 * M_PI - alpha_hat, 0.5 * M_PI + alpha_hat));
        pieces.push_back(Piece::arc({-x0, 0.0}, R, M_PI - gam, M_PI + gam));
        g.density = Density::strip(lam);
        g.closed_form = strip::profile_iv(h, lam);
        for (double sx : {1.0, -1.0})
            for (double sy : {1.0, -1.0})
                g.corners.push_back({{sx * xc, sy}, 1.0, lam, beta_hat, alpha_hat});
    } else if (fam == "ball:a") {
        const double v = spec.param;
        const double r = std::sqrt(v / M_PI);
        pieces.push_back(Piece::arc({r + 2.0, 0.0}, r, 0.0, 2.0 * M_PI));
        g.density = Density::ball(lam);
        g.closed_form = {v, ball::profile_a(v)};
    } else if (fam == "ball:big") {
        const double v = spec.param;
        const double r = std::sqrt(v / M_PI + 1.0 - lam);
        pieces.push_back(Piece::arc({0.0, 0.0}, r, 0.0, 2.0 * M_PI));
        g.density = Density::ball(lam);
        g.closed_form = {v, ball::profile_big(v, lam)};
    } else if (fam == "ball:b") {
        const double alpha = spec.param;
        const ball::LensProfile lp = ball::profile_b(alpha, lam);
        const double beta0 = std::acos(1.0 / lam);
        const double beta = alpha + beta0;
        pieces.push_back(Piece::arc({0.0, 0.0}, 1.0, -alpha, alpha));
        if (std::abs(std::sin(beta)) < 1e-9) {
            pieces.push_back(Piece::seg({std::cos(alpha), std::sin(alpha)},
                                        {std::cos(alpha), -std::sin(alpha)}));
        } else {
            const double d = std::sin(beta0) / std::sin(beta);
            const double rho = std::sin(alpha) / std::sin(beta);
            pieces.push_back(Piece::arc({d, 0.0}, rho, beta, 2.0 * M_PI - beta));
        }
        g.density = Density::ball(lam);
        g.closed_form = {lp.area, lp.perimeter};
        g.corners.push_back({{std::cos(alpha), std::sin(alpha)}, 1.0, lam, 0.0, beta0});
        g.corners.push_back({{std::cos(alpha), -std::sin(alpha)}, 1.0, lam, 0.0, beta0});
    } else if (fam == "ball:B") {
        const double beta = spec.param;
        const double alpha0 = std::acos(lam);
        const double alpha = beta + alpha0;
        const double d = std::sin(alpha0) / std::sin(beta);
        const double r = std::sin(alpha) / std::sin(beta);
        pieces.push_back(Piece::arc({0.0, 0.0}, 1.0, M_PI - alpha, M_PI + alpha));
        pieces.push_back(Piece::arc({d, 0.0}, r, beta - M_PI, M_PI - beta));
        g.density = Density::ball(lam);
        g.closed_form = ball::profile_B(beta, lam);
        g.corners.push_back(
            {{-std::cos(alpha), std::sin(alpha)}, lam, 1.0, 0.0, alpha0});
        g.corners.push_back(
            {{-std::cos(alpha), -std::sin(alpha)}, lam, 1.0, 0.0, alpha0});
    } else if (fam == "ball:C") {
        const double bh = spec.param;
        const double rhat = 1.0 / std::tan(bh);
        const Vec2 center{1.0 / std::sin(bh), 0.0};
        pieces.push_back(Piece::arc(center, rhat, M_PI - bh, M_PI + bh));
        pieces.push_back(Piece::arc(center, rhat, M_PI + bh, 3.0 * M_PI - bh));
        g.density = Density::ball(lam);
        g.closed_form = ball::profile_C(bh, lam);
        g.corners.push_back(
            {{std::sin(bh), std::cos(bh)}, lam, 1.0, 0.5 * M_PI, 0.5 * M_PI});
        g.corners.push_back(
            {{std::sin(bh), -std::cos(bh)}, lam, 1.0, 0.5 * M_PI, 0.5 * M_PI});
    } else if (fam == "line") {
        const double r = spec.aux > 0.0 ? spec.aux : 1.0;
        const double alpha = std::acos(1.0 / lam);
        const double sa = std::sin(alpha);
        const double ca = std::cos(alpha);
        pieces.push_back(Piece::seg({-r * sa, 0.0}, {r * sa, 0.0}));
        pieces.push_back(
            Piece::arc({0.0, r * ca}, r, alpha - 0.5 * M_PI, 1.5 * M_PI - alpha));
        g.density = Density::line(lam);
        g.closed_form = {lam * r * r * (M_PI - alpha + sa * ca),
                         2.0 * r * ((M_PI - alpha) * lam + sa)};
        g.corners.push_back({{r * sa, 0.0}, 1.0, lam, 0.0, alpha});
        g.corners.push_back({{-r * sa, 0.0}, 1.0, lam, 0.0, alpha});
    } else if (fam == "gauss:h" || fam == "gauss:v") {
        const double t = spec.param;
        const double W = 6.0;
        if (!(t >= 0.0 && t < W)) throw InvalidSpec("gauss offset out of range");
        if (fam == "gauss:h") {
            pieces.push_back(Piece::seg({-W, t}, {W, t}));
            pieces.push_back(Piece::seg({W, t}, {W, W}));
            pieces.push_back(Piece::seg({W, W}, {-W, W}));
            pieces.push_back(Piece::seg({-W, W}, {-W, t}));
            g.closed_form = gaussmod::horizontal_profile(t);
        } else {
            pieces.push_back(Piece::seg({t, -W}, {W, -W}));
            pieces.push_back(Piece::seg({W, -W}, {W, W}));
            pieces.push_back(Piece::seg({W, W}, {t, W}));
            pieces.push_back(Piece::seg({t, W}, {t, -W}));
            g.closed_form = gaussmod::vertical_profile(t);
        }
        g.density = Density::gauss_mod();
    } else if (fam == "disk") {
        const double r = spec.param;
        if (!(r > 0.0)) throw InvalidSpec("disk needs a positive radius");
        pieces.push_back(Piece::arc({spec.aux, 0.0}, r, 0.0, 2.0 * M_PI));
        g.density = Density::constant();
        g.closed_form = {M_PI * r * r, 2.0 * M_PI * r};
    } else {
        throw InvalidSpec("sample_candidate: unknown family " + fam);
    }

    g.polygon = emit_pieces(pieces, segments);
    return g;
}

// ---- random perturbation probe ----

ProbeReport perturbation_probe(const Polygon& poly, const Density& density,
                               double magnitude, int trials, std::uint64_t seed) {
    const std::size_t n = poly.size();
    if (n < 16) throw InvalidSpec("perturbation_probe: polygon too coarse");
    ProbeReport report;
    report.trials = trials;
    report.seed = seed;
    report.magnitude = magnitude;
    report.base_area = weighted_area(poly, density);
    report.base_perimeter = weighted_perimeter(poly, density);
    report.min_perimeter_change = std::numeric_limits<double>::infinity();

    std::vector<Vec2> normals(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& prev = poly.vertices[(i + n - 1) % n];
        const Vec2& next = poly.vertices[(i + 1) % n];
        const Vec2 t = (next - prev).normalized();
        normals[i] = {t.y, -t.x};  // outward for counterclockwise orientation
    }

    constexpr int kHarmonics = 8;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    for (int trial = 0; trial < trials; ++trial) {
        double ac[kHarmonics], bc[kHarmonics];
        for (int k = 0; k < kHarmonics; ++k) {
            ac[k] = unit(rng);
            bc[k] = unit(rng);
        }
        std::vector<double> disp(n, 0.0);
        double peak = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double s = 2.0 * M_PI * static_cast<double>(i) / n;
            double v = 0.0;
            for (int k = 0; k < kHarmonics; ++k)
                v += ac[k] * std::cos((k + 1) * s) + bc[k] * std::sin((k + 1) * s);
            disp[i] = v;
            peak = std::max(peak, std::abs(v));
        }
        const double scale = magnitude / peak;

        auto shape = [&](double tau) {
            Polygon p;
            p.vertices.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                p.vertices[i] =
                    poly.vertices[i] + (disp[i] * scale + tau) * normals[i];
            return p;
        };

        // secant on the uniform offset, dA/dtau ~ weighted perimeter
        double tau0 = 0.0;
        double g0 = weighted_area(shape(tau0), density) - report.base_area;
        double tau1 = -g0 / report.base_perimeter;
        double g1 = weighted_area(shape(tau1), density) - report.base_area;
        bool ok = std::abs(g1) < 1e-8;
        for (int it = 0; it < 60 && !ok; ++it) {
            if (g1 == g0) break;
            const double tau2 = tau1 - g1 * (tau1 - tau0) / (g1 - g0);
            tau0 = tau1;
            g0 = g1;
            tau1 = tau2;
            g1 = weighted_area(shape(tau1), density) - report.base_area;
            ok = std::abs(g1) < 1e-8;
        }
        if (!ok) {
            ++report.area_restore_failures;
            continue;
        }
        const double dp =
            weighted_perimeter(shape(tau1), density) - report.base_perimeter;
        report.min_perimeter_change = std::min(report.min_perimeter_change, dp);
    }
    if (!std::isfinite(report.min_perimeter_change)) report.min_perimeter_change = 0.0;
    return report;
}

}  // namespace isodens
