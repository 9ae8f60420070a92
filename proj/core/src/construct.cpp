#include "gcr/construct.hpp"

#include <cmath>
#include <string>

namespace gcr {

namespace {

const char* case_name(GcrCase c) {
    return c == GcrCase::TimeLikeCone ? "timelike-cone" : "spacelike-cone";
}

} // namespace

MinkVector3 GCRSurface::position_unchecked(double s, double t) const {
    const double u = profile_.u(s);
    const MinkVector3 phi = curve_.eval(t, 0);
    const MinkVector3 psi = lorentz_cross(phi, curve_.eval(t, 1));
    return s * (std::cosh(u) * phi + std::sinh(u) * psi);
}

MinkVector3 GCRSurface::position(double s, double t) const {
    const double s_slack = 1e-9 * std::max(1.0, s_domain_.span());
    const double t_slack = 1e-9 * std::max(1.0, t_domain_.span());
    if (s < s_domain_.lo - s_slack || s > s_domain_.hi + s_slack)
        throw OutOfDomain("eval_surface: s=" + std::to_string(s) + " outside ["
                          + std::to_string(s_domain_.lo) + ", " + std::to_string(s_domain_.hi)
                          + "]");
    if (t < t_domain_.lo - t_slack || t > t_domain_.hi + t_slack)
        throw OutOfDomain("eval_surface: t=" + std::to_string(t) + " outside ["
                          + std::to_string(t_domain_.lo) + ", " + std::to_string(t_domain_.hi)
                          + "]");
    return position_unchecked(s, t);
}

double GCRSurface::theta(double s) const {
    const double su = s * profile_.du(s);
    if (case_ == GcrCase::TimeLikeCone) {
        if (!(std::fabs(su) > 1.0))
            throw AngleUnsolvable("coth(theta) = s u' = " + std::to_string(su)
                                  + " has no solution (requires |s u'| > 1) at s="
                                  + std::to_string(s));
        return std::atanh(1.0 / su); // arccoth, sign following s u'
    }
    if (!(std::fabs(su) < 1.0))
        throw AngleUnsolvable("tanh(theta) = s u' = " + std::to_string(su)
                              + " has no solution (requires |s u'| < 1) at s="
                              + std::to_string(s));
    return std::atanh(su);
}

MinkVector3 GCRSurface::normal(double s, double t) const {
    const double w = theta(s) + profile_.u(s);
    const MinkVector3 phi = curve_.eval(t, 0);
    const MinkVector3 psi = lorentz_cross(phi, curve_.eval(t, 1));
    if (case_ == GcrCase::TimeLikeCone)
        return std::cosh(w) * phi + std::sinh(w) * psi;
    return -(std::sinh(w) * phi + std::cosh(w) * psi);
}

GCRSurface::Decomposition GCRSurface::predicted_decomposition(double s, double t) const {
    Decomposition d;
    d.mu = s;
    d.theta = theta(s);
    const double w = d.theta + profile_.u(s);
    const MinkVector3 phi = curve_.eval(t, 0);
    const MinkVector3 psi = lorentz_cross(phi, curve_.eval(t, 1));
    if (case_ == GcrCase::TimeLikeCone)
        d.e1 = -(std::sinh(w) * phi + std::cosh(w) * psi);
    else
        d.e1 = std::cosh(w) * phi + std::sinh(w) * psi;
    return d;
}

GCRSurface::PredictedMetric GCRSurface::predicted_metric(double s, double t) const {
    PredictedMetric m;
    const double th = theta(s);
    const double u = profile_.u(s);
    const double sh = std::sinh(th), ch = std::cosh(th);
    m.g_ss = case_ == GcrCase::TimeLikeCone ? 1.0 / (sh * sh) : 1.0 / (ch * ch);
    const double c = geodesic_coefficient(curve_, t).value;
    const double mt = s * std::cosh(u) + c * s * std::sinh(u);
    m.g_tt = mt * mt;
    return m;
}

SurfaceJet GCRSurface::analytic_jet(double s, double t) const {
    const double u = profile_.u(s);
    const double du = profile_.du(s);
    const double d2u = profile_.d2u(s);
    const double C = std::cosh(u), S = std::sinh(u);

    const MinkVector3 phi = curve_.eval(t, 0);
    const MinkVector3 dphi = curve_.eval(t, 1);
    const MinkVector3 d2phi = curve_.eval(t, 2);
    const MinkVector3 d3phi = curve_.eval(t, 3);
    const MinkVector3 psi = lorentz_cross(phi, dphi);
    const MinkVector3 dpsi = lorentz_cross(phi, d2phi); // phi' ^ phi' drops out
    const MinkVector3 d2psi = lorentz_cross(dphi, d2phi) + lorentz_cross(phi, d3phi);

    const double a = C + s * du * S; // d/ds (s cosh u)
    const double b = S + s * du * C; // d/ds (s sinh u)
    const double da = (2.0 * du + s * d2u) * S + s * du * du * C;
    const double db = (2.0 * du + s * d2u) * C + s * du * du * S;

    SurfaceJet j;
    j.s = s;
    j.t = t;
    j.x = s * (C * phi + S * psi);
    j.x_s = a * phi + b * psi;
    j.x_ss = da * phi + db * psi;
    j.x_t = s * (C * dphi + S * dpsi);
    j.x_st = a * dphi + b * dpsi;
    j.x_tt = s * (C * d2phi + S * d2psi);
    return j;
}

SurfaceMap GCRSurface::as_map() const {
    SurfaceMap m;
    GCRSurface self = *this;
    m.position = [self](double s, double t) { return self.position_unchecked(s, t); };
    m.xs = [self](double s, double t) { return self.analytic_jet(s, t).x_s; };
    m.xt = [self](double s, double t) { return self.analytic_jet(s, t).x_t; };
    m.xss = [self](double s, double t) { return self.analytic_jet(s, t).x_ss; };
    m.xst = [self](double s, double t) { return self.analytic_jet(s, t).x_st; };
    m.xtt = [self](double s, double t) { return self.analytic_jet(s, t).x_tt; };
    return m;
}

GCRSurface build_surface(GcrCase surface_case, ProfileU profile, PseudoSphereCurve curve,
                         Interval s_domain, Interval t_domain) {
    const PseudoSphereKind expected = surface_case == GcrCase::TimeLikeCone
                                          ? PseudoSphereKind::Hyperboloid
                                          : PseudoSphereKind::DeSitter;
    if (curve.kind() != expected)
        throw KindMismatch(std::string("build_surface: ") + case_name(surface_case)
                           + " requires a "
                           + (expected == PseudoSphereKind::Hyperboloid ? "hyperboloid"
                                                                        : "de Sitter")
                           + " curve");
    if (!(s_domain.lo < s_domain.hi) || !(t_domain.lo < t_domain.hi))
        throw InvalidParameter("build_surface: degenerate parameter domain");
    if (!(s_domain.lo > 0.0))
        throw OutOfDomain("build_surface: s domain must satisfy s > 0 (the s > 0 chart "
                          "excludes s = 0)");
    if (t_domain.lo < curve.t_min() || t_domain.hi > curve.t_max())
        throw OutOfDomain("build_surface: t domain exceeds curve domain");

    const CurveValidation cv = validate_curve(curve, linspace(t_domain.lo, t_domain.hi, 33));
    if (!cv.pass)
        throw InvalidParameter(
            "build_surface: generating curve fails pseudo-sphere validation (constraint "
            "residual "
            + std::to_string(cv.max_constraint_residual) + ", speed residual "
            + std::to_string(cv.max_speed_residual) + ")");

    GCRSurface surf(surface_case, std::move(profile), std::move(curve), s_domain, t_domain);
    for (double s : linspace(s_domain.lo, s_domain.hi, 33)) {
        surf.profile().check_domain(s);   // OutOfDomain when the range leaves validity
        (void)surf.theta(s);              // AngleUnsolvable when the s u' condition fails
    }
    return surf;
}

} // namespace gcr
