#include "gcr/curves.hpp"

#include <algorithm>
#include <cmath>

namespace gcr {

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(a);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

PseudoSphereCurve PseudoSphereCurve::analytic(PseudoSphereKind kind, Map position, Map d1, Map d2,
                                              Map d3, double t_min, double t_max) {
    if (!position) throw InvalidParameter("PseudoSphereCurve: position map required");
    PseudoSphereCurve c;
    c.kind_ = kind;
    c.f0_ = std::move(position);
    c.d1_ = std::move(d1);
    c.d2_ = std::move(d2);
    c.d3_ = std::move(d3);
    c.t_min_ = t_min;
    c.t_max_ = t_max;
    return c;
}

PseudoSphereCurve PseudoSphereCurve::hyperbola() {
    return analytic(
        PseudoSphereKind::Hyperboloid,
        [](double t) -> MinkVector3 { return {std::cosh(t), std::sinh(t), 0.0}; },
        [](double t) -> MinkVector3 { return {std::sinh(t), std::cosh(t), 0.0}; },
        [](double t) -> MinkVector3 { return {std::cosh(t), std::sinh(t), 0.0}; },
        [](double t) -> MinkVector3 { return {std::sinh(t), std::cosh(t), 0.0}; });
}

PseudoSphereCurve PseudoSphereCurve::circle() {
    return analytic(
        PseudoSphereKind::DeSitter,
        [](double t) -> MinkVector3 { return {0.0, std::cos(t), std::sin(t)}; },
        [](double t) -> MinkVector3 { return {0.0, -std::sin(t), std::cos(t)}; },
        [](double t) -> MinkVector3 { return {0.0, -std::cos(t), -std::sin(t)}; },
        [](double t) -> MinkVector3 { return {0.0, std::sin(t), -std::cos(t)}; });
}

PseudoSphereCurve PseudoSphereCurve::from_samples(PseudoSphereKind kind,
                                                  std::vector<double> params,
                                                  const std::vector<MinkVector3>& points) {
    if (params.size() != points.size() || params.size() < 4)
        throw DegenerateSample("from_samples: need >= 4 matching parameter/point pairs");
    std::vector<double> c0(points.size()), c1(points.size()), c2(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        c0[i] = points[i].c0;
        c1[i] = points[i].c1;
        c2[i] = points[i].c2;
    }
    PseudoSphereCurve c;
    c.kind_ = kind;
    c.t_min_ = params.front();
    c.t_max_ = params.back();
    c.spline_c0_.emplace(params, std::move(c0));
    c.spline_c1_.emplace(params, std::move(c1));
    c.spline_c2_.emplace(std::move(params), std::move(c2));
    return c;
}

MinkVector3 PseudoSphereCurve::eval(double t, int order) const {
    const double span = t_max_ - t_min_;
    const double slack = std::isfinite(span) ? 1e-9 * std::max(1.0, span) : 0.0;
    if (t < t_min_ - slack || t > t_max_ + slack)
        throw OutOfDomain("curve parameter outside domain");
    if (order < 0 || order > 3) throw InvalidParameter("eval: order must be 0..3");

    if (sampled())
        return {spline_c0_->eval(t, order), spline_c1_->eval(t, order), spline_c2_->eval(t, order)};

    switch (order) {
        case 0:
            return f0_(t);
        case 1:
            if (d1_) return d1_(t);
            return (f0_(t + fd_step) - f0_(t - fd_step)) / (2.0 * fd_step);
        case 2:
            if (d2_) return d2_(t);
            return (f0_(t + fd_step) - 2.0 * f0_(t) + f0_(t - fd_step)) / (fd_step * fd_step);
        default:
            if (d3_) return d3_(t);
            if (d2_) return (d2_(t + fd_step) - d2_(t - fd_step)) / (2.0 * fd_step);
            return (f0_(t + 2.0 * fd_step) - 2.0 * f0_(t + fd_step) + 2.0 * f0_(t - fd_step)
                    - f0_(t - 2.0 * fd_step))
                 / (2.0 * fd_step * fd_step * fd_step);
    }
}

CurveValidation validate_curve(const PseudoSphereCurve& c, const std::vector<double>& grid) {
    return validate_curve(c, grid, c.surface_tol(), c.arclen_tol());
}

CurveValidation validate_curve(const PseudoSphereCurve& c, const std::vector<double>& grid,
                               double tol_surface, double tol_arclen) {
    CurveValidation v;
    const double target = constraint_value(c.kind());
    for (double t : grid) {
        const MinkVector3 p = c.eval(t, 0);
        const MinkVector3 d = c.eval(t, 1);
        v.max_constraint_residual =
            std::max(v.max_constraint_residual, std::fabs(lorentz_inner(p, p) - target));
        v.max_speed_residual =
            std::max(v.max_speed_residual, std::fabs(lorentz_inner(d, d) - 1.0));
    }
    v.pass = v.max_constraint_residual < tol_surface && v.max_speed_residual < tol_arclen;
    return v;
}

MinkVector3 binormal(const PseudoSphereCurve& c, double t) {
    return lorentz_cross(c.eval(t, 0), c.eval(t, 1));
}

GeodesicCoefficient geodesic_coefficient(const PseudoSphereCurve& c, double t) {
    const MinkVector3 d1 = c.eval(t, 1);
    const MinkVector3 cross = lorentz_cross(c.eval(t, 0), c.eval(t, 2));
    GeodesicCoefficient gc;
    gc.value = lorentz_inner(cross, d1) / lorentz_inner(d1, d1);
    gc.residual = euclid_norm(cross - gc.value * d1);
    return gc;
}

namespace {

/// Scale a point onto the pseudo-sphere of the given kind.
MinkVector3 project_to_constraint(PseudoSphereKind kind, const MinkVector3& p) {
    const double q = lorentz_inner(p, p);
    if (kind == PseudoSphereKind::Hyperboloid) {
        if (!(q < 0.0) || !(p.c0 > 0.0))
            throw DegenerateSample("resample: point not in the future time-like cone");
    } else if (!(q > 0.0)) {
        throw DegenerateSample("resample: point not space-like");
    }
    return p / std::sqrt(std::fabs(q));
}

} // namespace

PseudoSphereCurve resample_to_arclength(PseudoSphereKind kind, const std::vector<double>& params,
                                        const std::vector<MinkVector3>& points) {
    const std::size_t n = params.size();
    if (n < 4 || points.size() != n)
        throw DegenerateSample("resample: need >= 4 matching parameter/point pairs");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const MinkVector3 chord = points[i + 1] - points[i];
        if (euclid_norm(chord) == 0.0 || lorentz_inner(chord, chord) <= 0.0)
            throw DegenerateSample("resample: causal or zero chord between samples");
    }

    PseudoSphereCurve raw = PseudoSphereCurve::from_samples(kind, params, points);

    // Cumulative Lorentzian arclength by the trapezoidal rule on a refined
    // grid of the interpolant.
    const std::size_t fine_n = 16 * (n - 1) + 1;
    const std::vector<double> fine = linspace(params.front(), params.back(), fine_n);
    std::vector<double> speed(fine_n), sigma(fine_n, 0.0);
    for (std::size_t i = 0; i < fine_n; ++i) {
        const MinkVector3 d = raw.eval(fine[i], 1);
        const double q = lorentz_inner(d, d);
        if (!(q > 0.0))
            throw DegenerateSample("resample: interpolated tangent not space-like");
        speed[i] = std::sqrt(q);
        if (i > 0)
            sigma[i] = sigma[i - 1] + 0.5 * (speed[i] + speed[i - 1]) * (fine[i] - fine[i - 1]);
    }

    // Invert sigma(t) at uniformly spaced arclength values.
    std::vector<double> out_params = linspace(0.0, sigma.back(), n);
    std::vector<MinkVector3> out_points(n);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double target = out_params[i];
        while (j + 2 < fine_n && sigma[j + 1] < target) ++j;
        const double seg = sigma[j + 1] - sigma[j];
        const double w = seg > 0.0 ? (target - sigma[j]) / seg : 0.0;
        const double t = fine[j] + w * (fine[j + 1] - fine[j]);
        out_points[i] = project_to_constraint(kind, raw.eval(t, 0));
    }
    return PseudoSphereCurve::from_samples(kind, std::move(out_params), out_points);
}

} // namespace gcr
