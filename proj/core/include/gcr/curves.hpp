#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "gcr/minkowski.hpp"
#include "gcr/spline.hpp"

namespace gcr {

/// Constraint surface a generating curve lives on.
/// Hyperboloid: <phi,phi> = -1 with c0 > 0 (future sheet of H^2(-1)).
/// DeSitter:    <phi,phi> = +1 (de Sitter sphere S^2_1(1)).
enum class PseudoSphereKind { Hyperboloid, DeSitter };

inline double constraint_value(PseudoSphereKind k) {
    return k == PseudoSphereKind::Hyperboloid ? -1.0 : 1.0;
}

/// Default tolerances separating modeling error from FD error.
inline constexpr double kSurfaceTolAnalytic = 1e-8;
inline constexpr double kArclenTolAnalytic = 1e-8;
inline constexpr double kSurfaceTolSampled = 1e-5;
inline constexpr double kArclenTolSampled = 1e-5;
inline constexpr double kFrameTol = 1e-6;

/// Unit-speed curve on H^2(-1) or S^2_1(1), either analytic (map plus
/// optional derivatives) or sampled (C^2 cubic interpolation in ambient
/// coordinates). Immutable after construction; evaluation is pure.
class PseudoSphereCurve {
public:
    using Map = std::function<MinkVector3(double)>;

    static PseudoSphereCurve analytic(PseudoSphereKind kind, Map position,
                                      Map d1 = nullptr, Map d2 = nullptr, Map d3 = nullptr,
                                      double t_min = -std::numeric_limits<double>::infinity(),
                                      double t_max = std::numeric_limits<double>::infinity());

    /// phi(t) = (cosh t, sinh t, 0): the geodesic of H^2(-1) through (1,0,0).
    static PseudoSphereCurve hyperbola();

    /// phi(t) = (0, cos t, sin t): a closed space-like geodesic of S^2_1(1).
    static PseudoSphereCurve circle();

    /// Sampled curve; parameters strictly increasing, >= 4 points.
    static PseudoSphereCurve from_samples(PseudoSphereKind kind, std::vector<double> params,
                                          const std::vector<MinkVector3>& points);

    /// phi, phi', phi'' or phi''' at t. Analytic derivatives are used when
    /// supplied; otherwise central finite differences of step fd_step on the
    /// map (sampled curves differentiate the interpolant).
    MinkVector3 eval(double t, int order = 0) const;

    PseudoSphereKind kind() const { return kind_; }
    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    bool sampled() const { return static_cast<bool>(spline_c0_); }
    bool has_analytic_derivatives() const { return sampled() || (d1_ && d2_); }

    double surface_tol() const { return sampled() ? kSurfaceTolSampled : kSurfaceTolAnalytic; }
    double arclen_tol() const { return sampled() ? kArclenTolSampled : kArclenTolAnalytic; }

    /// Step for finite-difference fallbacks on analytic maps without
    /// supplied derivatives.
    double fd_step = 1e-4;

private:
    PseudoSphereCurve() = default;

    PseudoSphereKind kind_ = PseudoSphereKind::Hyperboloid;
    Map f0_, d1_, d2_, d3_;
    std::optional<CubicSpline> spline_c0_, spline_c1_, spline_c2_;
    double t_min_ = 0.0, t_max_ = 0.0;
};

struct CurveValidation {
    double max_constraint_residual = 0.0; ///< max |<phi,phi> -+ 1|
    double max_speed_residual = 0.0;      ///< max |<phi',phi'> - 1|
    bool pass = false;
};

/// Residual summary over a parameter grid; reports failures, never throws.
CurveValidation validate_curve(const PseudoSphereCurve& c, const std::vector<double>& grid);
CurveValidation validate_curve(const PseudoSphereCurve& c, const std::vector<double>& grid,
                               double tol_surface, double tol_arclen);

/// psi = phi ^ phi'. Unit space-like on the hyperboloid, unit time-like on
/// the de Sitter sphere.
MinkVector3 binormal(const PseudoSphereCurve& c, double t);

struct GeodesicCoefficient {
    double value = 0.0;    ///< C(t) with phi ^ phi'' = C(t) phi'
    double residual = 0.0; ///< Euclidean norm of phi ^ phi'' - C phi'
};

/// Frame coefficient C(t) of the generating curve. Zero exactly when the
/// curve is a geodesic of its pseudo-sphere. The residual must stay below
/// the frame tolerance for the coefficient to be meaningful.
GeodesicCoefficient geodesic_coefficient(const PseudoSphereCurve& c, double t);

/// Reparametrize a sampled curve by cumulative Lorentzian arclength
/// (trapezoidal on sqrt<phi',phi'>), then project every output point back
/// onto the pseudo-sphere by scaling. The result passes validate_curve at
/// 10x the sampled arclength tolerance.
PseudoSphereCurve resample_to_arclength(PseudoSphereKind kind, const std::vector<double>& params,
                                        const std::vector<MinkVector3>& points);

/// n equally spaced values covering [a, b] inclusive.
std::vector<double> linspace(double a, double b, std::size_t n);

} // namespace gcr
