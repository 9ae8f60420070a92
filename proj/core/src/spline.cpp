#include "gcr/spline.hpp"

#include <algorithm>
#include <cmath>

#include "gcr/errors.hpp"

namespace gcr {

CubicSpline::CubicSpline(std::vector<double> knots, std::vector<double> values)
    : x_(std::move(knots)), y_(std::move(values)) {
    const std::size_t n = x_.size();
    if (n < 4 || y_.size() != n)
        throw InvalidParameter("CubicSpline: need >= 4 matching knot/value pairs");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i + 1] > x_[i]))
            throw InvalidParameter("CubicSpline: knots must be strictly increasing");

    std::vector<double> h(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

    // Second-derivative unknowns M_0..M_{n-1}. Interior rows are the usual
    // continuity equations; not-a-knot expresses M_0 and M_{n-1} through
    // their neighbours:
    //   M_0     = ((h0+h1) M_1 - h0 M_2) / h1
    //   M_{n-1} = ((h_{n-2}+h_{n-3}) M_{n-2} - h_{n-2} M_{n-3}) / h_{n-3}
    // Substituting gives a tridiagonal system for M_1..M_{n-2}.
    const std::size_t m = n - 2; // unknowns M_1..M_{n-2}
    std::vector<double> lo(m, 0.0), di(m, 0.0), up(m, 0.0), rhs(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t i = k + 1;
        lo[k] = h[i - 1] / 6.0;
        di[k] = (h[i - 1] + h[i]) / 3.0;
        up[k] = h[i] / 6.0;
        rhs[k] = (y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1];
    }
    // Fold the boundary expressions into the first and last rows.
    di[0] += lo[0] * (h[0] + h[1]) / h[1];
    up[0] -= lo[0] * h[0] / h[1];
    lo[0] = 0.0;
    di[m - 1] += up[m - 1] * (h[n - 2] + h[n - 3]) / h[n - 3];
    lo[m - 1] -= up[m - 1] * h[n - 2] / h[n - 3];
    up[m - 1] = 0.0;

    // Thomas algorithm.
    for (std::size_t k = 1; k < m; ++k) {
        const double w = lo[k] / di[k - 1];
        di[k] -= w * up[k - 1];
        rhs[k] -= w * rhs[k - 1];
    }
    std::vector<double> sol(m);
    sol[m - 1] = rhs[m - 1] / di[m - 1];
    for (std::size_t k = m - 1; k-- > 0;)
        sol[k] = (rhs[k] - up[k] * sol[k + 1]) / di[k];

    m_.assign(n, 0.0);
    for (std::size_t k = 0; k < m; ++k) m_[k + 1] = sol[k];
    m_[0] = ((h[0] + h[1]) * m_[1] - h[0] * m_[2]) / h[1];
    m_[n - 1] = ((h[n - 2] + h[n - 3]) * m_[n - 2] - h[n - 2] * m_[n - 3]) / h[n - 3];
}

std::size_t CubicSpline::interval(double x) const {
    // index i with x in [x_i, x_{i+1}); clamped so end cubics extrapolate
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::ptrdiff_t idx = std::distance(x_.begin(), it) - 1;
    return static_cast<std::size_t>(
        std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(x_.size()) - 2));
}

double CubicSpline::eval(double x, int order) const {
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    switch (order) {
        case 0:
            return a * y_[i] + b * y_[i + 1]
                 + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
        case 1:
            return (y_[i + 1] - y_[i]) / h
                 + ((3.0 * b * b - 1.0) * m_[i + 1] - (3.0 * a * a - 1.0) * m_[i]) * h / 6.0;
        case 2:
            return a * m_[i] + b * m_[i + 1];
        case 3:
            return (m_[i + 1] - m_[i]) / h;
        default:
            throw InvalidParameter("CubicSpline::eval: order must be 0..3");
    }
}

} // namespace gcr
