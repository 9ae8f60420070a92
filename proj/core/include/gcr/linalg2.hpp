#pragma once

#include <cmath>

#include "gcr/errors.hpp"

namespace gcr {

/// Components of a tangent vector in the (s,t) coordinate basis.
struct Vec2 {
    double s = 0.0;
    double t = 0.0;

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.s + b.s, a.t + b.t}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.s - b.s, a.t - b.t}; }
    friend Vec2 operator*(double k, const Vec2& v) { return {k * v.s, k * v.t}; }
    Vec2 operator-() const { return {-s, -t}; }
};

/// 2x2 matrix acting on coordinate components.
struct Mat2 {
    double ss = 0.0, st = 0.0;
    double ts = 0.0, tt = 0.0;

    double det() const { return ss * tt - st * ts; }
    double trace() const { return ss + tt; }

    Vec2 apply(const Vec2& v) const { return {ss * v.s + st * v.t, ts * v.s + tt * v.t}; }

    Mat2 inverse() const {
        const double d = det();
        if (d == 0.0) throw DegenerateMetric("Mat2: singular matrix");
        return {tt / d, -st / d, -ts / d, ss / d};
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.ss * b.ss + a.st * b.ts, a.ss * b.st + a.st * b.tt,
                a.ts * b.ss + a.tt * b.ts, a.ts * b.st + a.tt * b.tt};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.ss - b.ss, a.st - b.st, a.ts - b.ts, a.tt - b.tt};
    }
};

inline double dot_g(const Mat2& g, const Vec2& a, const Vec2& b) {
    return a.s * (g.ss * b.s + g.st * b.t) + a.t * (g.ts * b.s + g.tt * b.t);
}

inline double norm_g(const Mat2& g, const Vec2& a) {
    return std::sqrt(std::max(0.0, dot_g(g, a, a)));
}

/// Solve g a = rhs for a symmetric positive-definite g.
inline Vec2 solve_spd(const Mat2& g, const Vec2& rhs) {
    const double d = g.det();
    if (!(d > 0.0) || !(g.ss > 0.0))
        throw DegenerateMetric("solve_spd: metric not positive definite");
    return {(g.tt * rhs.s - g.st * rhs.t) / d, (-g.ts * rhs.s + g.ss * rhs.t) / d};
}

} // namespace gcr
