#pragma once

#include <vector>

#include "gcr/errors.hpp"
#include "gcr/spline.hpp"

namespace gcr {

/// Radial profile u(s) of a classified surface, with derivative access.
class ProfileU {
public:
    enum class Kind { PowerLog, FlatCaseI, Tabulated };

    /// u = a ln s + b on s > 0. s u' = a, so the angle is constant.
    static ProfileU power_log(double a, double b);

    /// u = c1 - arccosh(c2/s) on 0 < s < c2 (strict: arccosh argument > 1).
    /// u' = c2 / (s sqrt(c2^2 - s^2)).
    static ProfileU flat_case1(double c1, double c2);

    /// C^2 piecewise-cubic interpolation of (s, u) samples, differentiated
    /// analytically.
    static ProfileU tabulated(std::vector<double> s, std::vector<double> u);

    double u(double s) const;
    double du(double s) const;
    double d2u(double s) const;

    Kind kind() const { return kind_; }
    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }

    /// Throws OutOfDomain when s lies outside the validity interval
    /// (FlatCaseI excludes both endpoints).
    void check_domain(double s) const;

    // parameters, for config echo
    double param_a() const { return a_; }
    double param_b() const { return b_; }
    double param_c1() const { return c1_; }
    double param_c2() const { return c2_; }

private:
    ProfileU() = default;

    Kind kind_ = Kind::PowerLog;
    double a_ = 0.0, b_ = 0.0;
    double c1_ = 0.0, c2_ = 0.0;
    CubicSpline spline_;
    double s_min_ = 0.0, s_max_ = 0.0;
    bool open_ends_ = false;
};

/// Factory for the flat family of the time-like cone.
inline ProfileU flat_profile_case1(double c1, double c2) { return ProfileU::flat_case1(c1, c2); }

} // namespace gcr
