#include "isodens/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "isodens/errors.hpp"
#include "isodens/quadrature.hpp"

namespace isodens {

CalibrationCase calibration_case(const std::string& id) {
    CalibrationCase c;
    c.id = id;
    if (id == "cone") {
        c.x0 = -2.0;
        c.x1 = 2.0;
        c.y0 = 0.5;
        c.y1 = 3.0;
        c.f = [](double x, double y) { return std::hypot(x, y); };
        c.g = [](double x, double y) {
            const double r = std::hypot(x, y);
            return Vec2{-x / r, y / r};
        };
        c.phi = [](double x) { return std::sqrt(1.0 + x * x); };
        c.phi_prime = [](double x) { return x / std::sqrt(1.0 + x * x); };
    } else if (id == "halfplane") {
        c.x0 = -2.0;
        c.x1 = 2.0;
        c.y0 = -2.0;
        c.y1 = 2.0;
        c.f = [](double, double) { return 1.0; };
        c.g = [](double, double) { return Vec2{0.0, 1.0}; };
        c.phi = [](double) { return 1.0; };
        c.phi_prime = [](double) { return 0.0; };
    } else if (id == "exp-x") {
        c.x0 = 0.5;
        c.x1 = 2.0;
        c.y0 = -1.0;
        c.y1 = 1.0;
        c.f = [](double x, double) { return std::exp(x); };
        auto dphi = [](double x) { return 1.0 / std::sqrt(2.0 * std::exp(2.0 * x) - 1.0); };
        c.phi = [dphi](double x) {
            return integrate(dphi, 0.5, x, 1e-14);
        };
        c.phi_prime = dphi;
        c.g = [dphi](double x, double) {
            const double p = dphi(x);
            const double s = std::sqrt(1.0 + p * p);
            return Vec2{p / s, -1.0 / s};
        };
    } else {
        throw InvalidSpec("calibration_case: unknown id " + id);
    }
    return c;
}

CalibrationResiduals calibration_residuals(const CalibrationCase& c, double grid_step) {
    if (!(grid_step > 0.0)) throw DomainError("calibration_residuals: grid_step > 0");
    const double h = grid_step;
    CalibrationResiduals r{0.0, 0.0, 0.0};

    auto fg = [&](double x, double y) {
        const Vec2 g = c.g(x, y);
        const double f = c.f(x, y);
        return Vec2{f * g.x, f * g.y};
    };

    for (double x = c.x0; x <= c.x1 + 1e-12; x += h) {
        for (double y = c.y0; y <= c.y1 + 1e-12; y += h) {
            if (c.f(x, y) < 1e-12)
                throw SingularPointInWindow("calibration: density degenerates at grid point");
            r.max_norm_excess = std::max(r.max_norm_excess, c.g(x, y).norm() - 1.0);
            if (x - h < c.x0 || x + h > c.x1 || y - h < c.y0 || y + h > c.y1)
                continue;
            const double div = (fg(x + h, y).x - fg(x - h, y).x) / (2.0 * h) +
                               (fg(x, y + h).y - fg(x, y - h).y) / (2.0 * h);
            r.max_div = std::max(r.max_div, std::abs(div));
        }
    }

    for (double x = c.x0; x <= c.x1 + 1e-12; x += h) {
        const double y = c.phi(x);
        if (y < c.y0 || y > c.y1) continue;
        const double p = c.phi_prime(x);
        const double s = std::sqrt(1.0 + p * p);
        const Vec2 nu{-p / s, 1.0 / s};
        const Vec2 g = c.g(x, y);
        const Vec2 diff = g - nu;
        const Vec2 sum = g + nu;
        // orientation-free mismatch
        r.max_normal_mismatch =
            std::max(r.max_normal_mismatch, std::min(diff.norm(), sum.norm()));
    }
    return r;
}

namespace {

double mse_max_residual(const std::vector<double>& phi, double x0, double h,
                        const std::function<double(double, double)>& f,
                        const std::function<double(double, double)>& f_y) {
    const std::size_t n = phi.size();
    if (n < 5) throw InsufficientPoints("mse_residual: need at least 5 samples");
    if (!(h > 0.0)) throw DomainError("mse_residual: h > 0");
    std::vector<double> q(n, 0.0);
    std::vector<double> slope(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double x = x0 + h * static_cast<double>(i);
        const double p = (phi[i + 1] - phi[i - 1]) / (2.0 * h);
        slope[i] = p;
        q[i] = f(x, phi[i]) * p / std::sqrt(1.0 + p * p);
    }
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double x = x0 + h * static_cast<double>(i);
        const double s = std::sqrt(1.0 + slope[i] * slope[i]);
        const double res =
            (q[i + 1] - q[i - 1]) / (2.0 * h) - s * f_y(x, phi[i]);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

}  // namespace

double mse_residual(const std::vector<double>& phi, double x0, double h,
                    const std::function<double(double)>& f) {
    return mse_max_residual(
        phi, x0, h, [&](double x, double) { return f(x); },
        [](double, double) { return 0.0; });
}

double mse_residual_full(const std::vector<double>& phi, double x0, double h,
                         const std::function<double(double, double)>& f,
                         const std::function<double(double, double)>& f_y) {
    return mse_max_residual(phi, x0, h, f, f_y);
}

OrderStudy div_order_study(const CalibrationCase& c, double grid_step) {
    OrderStudy s;
    s.coarse = calibration_residuals(c, grid_step).max_div;
    s.fine = calibration_residuals(c, 0.5 * grid_step).max_div;
    if (s.coarse < 1e-13 && s.fine < 1e-13) {
        s.below_floor = true;
        s.order = 2.0;
        return s;
    }
    s.order = std::log2(s.coarse / s.fine);
    return s;
}

OrderStudy mse_order_study(const std::string& id, double grid_step) {
    const CalibrationCase c = calibration_case(id);
    auto residual_at = [&](double h) {
        const int n = static_cast<int>(std::floor((c.x1 - c.x0) / h)) + 1;
        std::vector<double> phi(n);
        for (int i = 0; i < n; ++i) phi[i] = c.phi(c.x0 + h * i);
        if (id == "cone") {
            return mse_residual_full(
                phi, c.x0, h, c.f,
                [](double x, double y) { return y / std::hypot(x, y); });
        }
        return mse_residual(phi, c.x0, h, [&](double x) { return c.f(x, 0.0); });
    };
    OrderStudy s;
    s.coarse = residual_at(grid_step);
    s.fine = residual_at(0.5 * grid_step);
    if (s.coarse < 1e-13 && s.fine < 1e-13) {
        s.below_floor = true;
        s.order = 2.0;
        return s;
    }
    s.order = std::log2(s.coarse / s.fine);
    return s;
}

}  // namespace isodens
