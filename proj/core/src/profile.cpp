#include "gcr/profile.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gcr {

ProfileU ProfileU::power_log(double a, double b) {
    ProfileU p;
    p.kind_ = Kind::PowerLog;
    p.a_ = a;
    p.b_ = b;
    p.s_min_ = 0.0;
    p.s_max_ = std::numeric_limits<double>::infinity();
    p.open_ends_ = true;
    return p;
}

ProfileU ProfileU::flat_case1(double c1, double c2) {
    if (!(c2 > 0.0)) throw InvalidParameter("flat_case1: c2 must be positive");
    ProfileU p;
    p.kind_ = Kind::FlatCaseI;
    p.c1_ = c1;
    p.c2_ = c2;
    p.s_min_ = 0.0;
    p.s_max_ = c2;
    p.open_ends_ = true;
    return p;
}

ProfileU ProfileU::tabulated(std::vector<double> s, std::vector<double> u) {
    ProfileU p;
    p.kind_ = Kind::Tabulated;
    if (s.empty()) throw InvalidParameter("tabulated: empty sample list");
    p.s_min_ = s.front();
    p.s_max_ = s.back();
    p.spline_ = CubicSpline(std::move(s), std::move(u));
    return p;
}

void ProfileU::check_domain(double s) const {
    const bool inside = open_ends_ ? (s > s_min_ && s < s_max_) : (s >= s_min_ && s <= s_max_);
    if (!inside)
        throw OutOfDomain("profile parameter s=" + std::to_string(s)
                          + " outside validity interval (" + std::to_string(s_min_) + ", "
                          + std::to_string(s_max_) + ")");
}

double ProfileU::u(double s) const {
    check_domain(s);
    switch (kind_) {
        case Kind::PowerLog:
            return a_ * std::log(s) + b_;
        case Kind::FlatCaseI:
            return c1_ - std::acosh(c2_ / s);
        default:
            return spline_.eval(s, 0);
    }
}

double ProfileU::du(double s) const {
    check_domain(s);
    switch (kind_) {
        case Kind::PowerLog:
            return a_ / s;
        case Kind::FlatCaseI:
            return c2_ / (s * std::sqrt(c2_ * c2_ - s * s));
        default:
            return spline_.eval(s, 1);
    }
}

double ProfileU::d2u(double s) const {
    check_domain(s);
    switch (kind_) {
        case Kind::PowerLog:
            return -a_ / (s * s);
        case Kind::FlatCaseI: {
            const double r2 = c2_ * c2_ - s * s;
            return c2_ * (2.0 * s * s - c2_ * c2_) / (s * s * r2 * std::sqrt(r2));
        }
        default:
            return spline_.eval(s, 2);
    }
}

} // namespace gcr
