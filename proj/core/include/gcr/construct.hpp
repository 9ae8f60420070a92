#pragma once

#include "gcr/curves.hpp"
#include "gcr/profile.hpp"
#include "gcr/surface_map.hpp"

namespace gcr {

/// Cone the constructed surface lies in, by the sign of <x,x>.
enum class GcrCase { TimeLikeCone, SpaceLikeCone };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double span() const { return hi - lo; }
};

/// A classified generalized-constant-ratio surface
///
///   x(s,t) = s ( cosh u(s) phi(t) + sinh u(s) (phi ^ phi')(t) ),  s > 0,
///
/// with phi on H^2(-1) (time-like cone, coth(theta) = s u') or on S^2_1(1)
/// (space-like cone, tanh(theta) = s u'). Immutable; evaluation is pure.
class GCRSurface {
public:
    GcrCase surface_case() const { return case_; }
    const ProfileU& profile() const { return profile_; }
    const PseudoSphereCurve& curve() const { return curve_; }
    const Interval& s_domain() const { return s_domain_; }
    const Interval& t_domain() const { return t_domain_; }

    /// x(s,t); throws OutOfDomain outside the declared parameter rectangle.
    MinkVector3 position(double s, double t) const;

    /// Angle function of s alone. Time-like cone: theta = arccoth(s u'),
    /// positive branch for s u' > 1 and negative for s u' < -1, so sinh(theta)
    /// and s u' share sign. Space-like cone: theta = arctanh(s u').
    double theta(double s) const;

    /// Closed-form unit normal, <N,N> = -1.
    /// Time-like cone:  N =  cosh(theta+u) phi + sinh(theta+u) phi^phi'.
    /// Space-like cone: N = -(sinh(theta+u) phi + cosh(theta+u) phi^phi'),
    /// the sign frozen so x = s(cosh theta e1 + sinh theta N) holds with e1
    /// along the tangential part of x (cross-checked against the
    /// finite-difference normal).
    MinkVector3 normal(double s, double t) const;

    struct Decomposition {
        double mu = 0.0;    ///< |<x,x>|^(1/2) = s
        double theta = 0.0;
        MinkVector3 e1;     ///< unit tangent along x^T closing the decomposition
    };

    /// Quantities of x = mu sinh(theta) e1 + mu cosh(theta) N (time-like cone)
    /// resp. x = mu cosh(theta) e1 + mu sinh(theta) N (space-like cone).
    Decomposition predicted_decomposition(double s, double t) const;

    struct PredictedMetric {
        double g_ss = 0.0;
        double g_tt = 0.0; ///< (s cosh u + C(t) s sinh u)^2
    };

    /// Closed-form induced metric: g_ss = 1/sinh^2(theta) (time-like cone)
    /// or 1/cosh^2(theta) (space-like cone); g_st = 0.
    PredictedMetric predicted_metric(double s, double t) const;

    /// Jet assembled from the closed-form partials (curve derivatives exact
    /// where supplied, finite differences otherwise).
    SurfaceJet analytic_jet(double s, double t) const;

    /// Map for grid verification: evaluates the closed form anywhere the
    /// profile and curve are defined, without the rectangle check.
    SurfaceMap as_map() const;

private:
    friend GCRSurface build_surface(GcrCase, ProfileU, PseudoSphereCurve, Interval, Interval);
    GCRSurface(GcrCase c, ProfileU p, PseudoSphereCurve cv, Interval sd, Interval td)
        : case_(c), profile_(std::move(p)), curve_(std::move(cv)), s_domain_(sd), t_domain_(td) {}

    MinkVector3 position_unchecked(double s, double t) const;

    GcrCase case_;
    ProfileU profile_;
    PseudoSphereCurve curve_;
    Interval s_domain_, t_domain_;
};

/// Validates curve kind against the cone, curve constraints, profile
/// validity, and the s u' range condition on a probe grid before returning.
/// Throws KindMismatch, AngleUnsolvable, OutOfDomain or InvalidParameter.
GCRSurface build_surface(GcrCase surface_case, ProfileU profile, PseudoSphereCurve curve,
                         Interval s_domain, Interval t_domain);

} // namespace gcr
