#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isodens/acceptance.hpp"
#include "isodens/ball.hpp"
#include "isodens/calibration.hpp"
#include "isodens/density.hpp"
#include "isodens/gaussmod.hpp"
#include "isodens/oracle.hpp"
#include "isodens/stationarity.hpp"
#include "isodens/strip.hpp"

namespace py = pybind11;
using namespace isodens;

namespace {

py::dict crossover_dict(const CrossoverReport& r) {
    py::dict d;
    d["value"] = r.value;
    d["perimeter"] = r.perimeter;
    d["bracket"] = py::make_tuple(r.bracket_lo, r.bracket_hi);
    return d;
}

py::dict verify_dict(const std::string& family, double lambda, double param,
                     double aux, int segments) {
    const CandidateGeometry g =
        sample_candidate({family, lambda, param, aux}, segments);
    const double a = weighted_area(g.polygon, g.density);
    const double p = weighted_perimeter(g.polygon, g.density);
    py::dict d;
    d["closed_form"] = py::make_tuple(g.closed_form.area, g.closed_form.perimeter);
    d["oracle"] = py::make_tuple(a, p);
    d["rel_error"] =
        py::make_tuple(std::abs(a - g.closed_form.area) / std::abs(g.closed_form.area),
                       std::abs(p - g.closed_form.perimeter) /
                           std::abs(g.closed_form.perimeter));
    return d;
}

}  // namespace

PYBIND11_MODULE(_isodens, m) {
    m.doc() = "isoperimetric profiles for planar weighted densities";

    auto strip_m = m.def_submodule("strip");
    strip_m.def("profile_i", &strip::profile_i, py::arg("v"));
    strip_m.def("profile_ii", &strip::profile_ii, py::arg("v"));
    strip_m.def(
        "profile_iii",
        [](double h, double lam) {
            const ProfilePoint p = strip::profile_iii(h, lam);
            return py::make_tuple(p.area, p.perimeter);
        },
        py::arg("h"), py::arg("lam"));
    strip_m.def(
        "profile_iv",
        [](double h, double lam) {
            const ProfilePoint p = strip::profile_iv(h, lam);
            return py::make_tuple(p.area, p.perimeter);
        },
        py::arg("h"), py::arg("lam"));
    strip_m.def(
        "crossover_v0",
        [](double lam) { return crossover_dict(strip::crossover_v0(lam)); },
        py::arg("lam"));
    strip_m.def("arc_gap", &strip::arc_gap, py::arg("x"));

    auto ball_m = m.def_submodule("ball");
    ball_m.def("profile_a", &ball::profile_a, py::arg("v"));
    ball_m.def("profile_big", &ball::profile_big, py::arg("v"), py::arg("lam"));
    ball_m.def(
        "profile_b",
        [](double alpha, double lam) {
            const ball::LensProfile p = ball::profile_b(alpha, lam);
            return py::make_tuple(p.area, p.perimeter, ball::to_string(p.shape_class));
        },
        py::arg("alpha"), py::arg("lam"));
    ball_m.def("profile_A", &ball::profile_A, py::arg("v"), py::arg("lam"));
    ball_m.def(
        "profile_B",
        [](double beta, double lam) {
            const ProfilePoint p = ball::profile_B(beta, lam);
            return py::make_tuple(p.area, p.perimeter);
        },
        py::arg("beta"), py::arg("lam"));
    ball_m.def(
        "profile_C",
        [](double beta_hat, double lam) {
            const ProfilePoint p = ball::profile_C(beta_hat, lam);
            return py::make_tuple(p.area, p.perimeter);
        },
        py::arg("beta_hat"), py::arg("lam"));
    ball_m.def(
        "crossover",
        [](double lam) -> py::object {
            if (lam > 1.0) return crossover_dict(ball::crossover_gt1(lam));
            const ball::CrossoverLt1 c = ball::crossover_lt1(lam);
            py::dict d;
            d["v1"] = crossover_dict(c.v1);
            d["v2"] = crossover_dict(c.v2);
            d["coincide"] = c.coincide;
            return d;
        },
        py::arg("lam"));

    auto gauss_m = m.def_submodule("gaussmod");
    gauss_m.def(
        "horizontal_profile",
        [](double y) {
            const ProfilePoint p = gaussmod::horizontal_profile(y);
            return py::make_tuple(p.area, p.perimeter);
        },
        py::arg("y"));
    gauss_m.def(
        "vertical_profile",
        [](double x) {
            const ProfilePoint p = gaussmod::vertical_profile(x);
            return py::make_tuple(p.area, p.perimeter);
        },
        py::arg("x"));
    gauss_m.def("equal_volume_x", &gaussmod::equal_volume_x, py::arg("y"));
    gauss_m.def("dominance_margin", &gaussmod::dominance_margin, py::arg("y"));
    gauss_m.def("dominance_constant", &gaussmod::dominance_constant);
    gauss_m.def("crossover_y",
                [] { return crossover_dict(gaussmod::crossover_y()); });

    m.def("line_density_ratio", &line_density_ratio, py::arg("lam"));
    m.def("oracle_verify", &verify_dict, py::arg("family"), py::arg("lam"),
          py::arg("param"), py::arg("aux") = 0.0, py::arg("segments") = 10000);
    m.def("gauss_mod_total_mass",
          [] { return *total_mass(Density::gauss_mod()); });
    m.def("run_acceptance", [] {
        py::list out;
        for (const AcceptanceResult& r : run_acceptance()) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });
}
