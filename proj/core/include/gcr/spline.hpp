#pragma once

#include <cstddef>
#include <vector>

namespace gcr {

/// C^2 piecewise-cubic interpolant with not-a-knot end conditions.
/// Not-a-knot keeps the interior O(h^4) accuracy up to the boundary, which
/// natural end conditions would degrade to O(h^2).
class CubicSpline {
public:
    CubicSpline() = default;

    /// Build from strictly increasing knots and matching values.
    /// Requires at least 4 points.
    CubicSpline(std::vector<double> knots, std::vector<double> values);

    double operator()(double x) const { return eval(x, 0); }

    /// Evaluate the interpolant or one of its derivatives (order 0..3).
    /// Evaluation outside [front, back] extrapolates the end cubic.
    double eval(double x, int order) const;

    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::size_t interval(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_; // second derivatives at the knots
};

} // namespace gcr
