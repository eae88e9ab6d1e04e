#pragma once

// Derivative-free minimizers used by the bound constructions. Internal.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "salpeter/errors.hpp"

namespace salpeter::detail {

struct LineMinimum {
    double x;
    double value;
};

// Minimize f over x > 0 assuming unimodality: geometric expansion from x0
// to bracket the minimum, then golden-section in log x to the requested
// relative width. Throws OptimizationFailure naming the runaway direction
// when no interior bracket exists.
inline LineMinimum minimize_positive(const std::function<double(double)>& f, double x0,
                                     double relative_width = 1e-8, double growth = 2.0) {
    const double y_limit = 40.0;  // e^40 each way
    double y0 = std::log(x0);
    double step = std::log(growth);

    double y_mid = y0, f_mid = f(x0);
    double y_lo = y0 - step, f_lo = f(std::exp(y_lo));
    double y_hi = y0 + step, f_hi = f(std::exp(y_hi));

    // Walk downhill until a three-point bracket appears.
    while (!(f_mid <= f_lo && f_mid <= f_hi)) {
        if (f_lo < f_hi) {
            y_hi = y_mid; f_hi = f_mid;
            y_mid = y_lo; f_mid = f_lo;
            y_lo = y_mid - step;
            if (y_lo < -y_limit)
                throw OptimizationFailure("no interior minimum: objective decreases toward 0");
            f_lo = f(std::exp(y_lo));
        } else {
            y_lo = y_mid; f_lo = f_mid;
            y_mid = y_hi; f_mid = f_hi;
            y_hi = y_mid + step;
            if (y_hi > y_limit)
                throw OptimizationFailure("no interior minimum: objective decreases toward infinity");
            f_hi = f(std::exp(y_hi));
        }
    }

    constexpr double inv_phi = 0.6180339887498949;
    double a = y_lo, b = y_hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(std::exp(c)), fd = f(std::exp(d));
    while (b - a > relative_width) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(std::exp(c));
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(std::exp(d));
        }
    }
    double x = std::exp(0.5 * (a + b));
    return {x, f(x)};
}

struct Point2 {
    std::array<double, 2> x;
    double value;
};

struct Box2 {
    std::array<double, 2> lo;
    std::array<double, 2> hi;

    std::array<double, 2> clamp(std::array<double, 2> p) const {
        for (int i = 0; i < 2; ++i) p[i] = std::min(std::max(p[i], lo[i]), hi[i]);
        return p;
    }
    bool near_upper_edge(const std::array<double, 2>& p, double rel = 1e-3) const {
        for (int i = 0; i < 2; ++i)
            if (hi[i] - p[i] <= rel * (hi[i] - lo[i])) return true;
        return false;
    }
    bool near_lower_edge(const std::array<double, 2>& p, double rel = 1e-3) const {
        for (int i = 0; i < 2; ++i)
            if (p[i] - lo[i] <= rel * (hi[i] - lo[i])) return true;
        return false;
    }
};

// Box-constrained Nelder-Mead; candidates outside the box are clamped onto
// it. Converged when the simplex diameter and value spread both shrink
// below their tolerances.
inline Point2 nelder_mead_2d(const std::function<double(std::array<double, 2>)>& f,
                             std::array<double, 2> start, const Box2& box,
                             double diameter_tol = 1e-4, double value_tol = 1e-6,
                             int max_iterations = 400) {
    auto eval = [&](std::array<double, 2> p) { return Point2{p, f(p)}; };

    std::array<Point2, 3> s;
    s[0] = eval(box.clamp(start));
    for (int i = 0; i < 2; ++i) {
        auto p = start;
        double span = box.hi[i] - box.lo[i];
        p[i] = p[i] + 0.05 * span <= box.hi[i] ? p[i] + 0.05 * span : p[i] - 0.05 * span;
        s[i + 1] = eval(box.clamp(p));
    }

    auto order = [&]() {
        if (s[0].value > s[1].value) std::swap(s[0], s[1]);
        if (s[1].value > s[2].value) std::swap(s[1], s[2]);
        if (s[0].value > s[1].value) std::swap(s[0], s[1]);
    };
    auto diameter = [&]() {
        double d = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                d = std::max(d, std::hypot(s[i].x[0] - s[j].x[0], s[i].x[1] - s[j].x[1]));
        return d;
    };

    order();
    for (int it = 0; it < max_iterations; ++it) {
        if (diameter() < diameter_tol && s[2].value - s[0].value < value_tol) break;
        std::array<double, 2> centroid{0.5 * (s[0].x[0] + s[1].x[0]),
                                       0.5 * (s[0].x[1] + s[1].x[1])};
        auto blend = [&](double alpha) {
            return box.clamp({centroid[0] + alpha * (centroid[0] - s[2].x[0]),
                              centroid[1] + alpha * (centroid[1] - s[2].x[1])});
        };
        Point2 reflected = eval(blend(1.0));
        if (reflected.value < s[0].value) {
            Point2 expanded = eval(blend(2.0));
            s[2] = expanded.value < reflected.value ? expanded : reflected;
        } else if (reflected.value < s[1].value) {
            s[2] = reflected;
        } else {
            Point2 contracted = eval(blend(-0.5));
            if (contracted.value < s[2].value) {
                s[2] = contracted;
            } else {
                for (int i = 1; i < 3; ++i)
                    s[i] = eval({0.5 * (s[i].x[0] + s[0].x[0]), 0.5 * (s[i].x[1] + s[0].x[1])});
            }
        }
        order();
    }
    return s[0];
}

}  // namespace salpeter::detail
