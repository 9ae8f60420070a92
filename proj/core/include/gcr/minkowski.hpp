#pragma once

#include <cmath>

#include "gcr/errors.hpp"

namespace gcr {

/// Default tolerance on the quadratic form used to decide whether a vector
/// counts as light-like. Chosen for unit-scale vectors; configurable at every
/// call site that classifies causal character.
inline constexpr double kNullTol = 1e-10;

/// Vector of Minkowski 3-space E^3_1 with signature (-,+,+).
/// c0 is the time-like coordinate, c1 and c2 the space-like ones.
struct MinkVector3 {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    friend MinkVector3 operator+(const MinkVector3& a, const MinkVector3& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend MinkVector3 operator-(const MinkVector3& a, const MinkVector3& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    friend MinkVector3 operator*(double k, const MinkVector3& v) {
        return {k * v.c0, k * v.c1, k * v.c2};
    }
    friend MinkVector3 operator*(const MinkVector3& v, double k) { return k * v; }
    friend MinkVector3 operator/(const MinkVector3& v, double k) {
        return {v.c0 / k, v.c1 / k, v.c2 / k};
    }
    MinkVector3 operator-() const { return {-c0, -c1, -c2}; }
};

enum class CausalCharacter { SpaceLike, TimeLike, LightLike };

/// <v,w> = -v0*w0 + v1*w1 + v2*w2.
inline double lorentz_inner(const MinkVector3& v, const MinkVector3& w) {
    return -v.c0 * w.c0 + v.c1 * w.c1 + v.c2 * w.c2;
}

/// Euclidean norm of the coordinate triple; used only for scale estimates
/// and residual reporting, never as a Lorentzian quantity.
inline double euclid_norm(const MinkVector3& v) {
    return std::sqrt(v.c0 * v.c0 + v.c1 * v.c1 + v.c2 * v.c2);
}

/// |<v,v>|^(1/2); the Lorentzian length of a non-null vector.
inline double lorentz_norm(const MinkVector3& v) {
    return std::sqrt(std::fabs(lorentz_inner(v, v)));
}

inline CausalCharacter causal_character(const MinkVector3& v, double null_tol = kNullTol) {
    if (null_tol < 0.0) throw InvalidParameter("causal_character: null tolerance must be >= 0");
    const double q = lorentz_inner(v, v);
    if (q > null_tol) return CausalCharacter::SpaceLike;
    if (q < -null_tol) return CausalCharacter::TimeLike;
    return CausalCharacter::LightLike;
}

/// Lorentzian cross product, defined by <v ^ w, z> = det(v, w, z) for all z
/// (columns v, w, z in standard coordinates). The component form below is the
/// unique solution of that identity against the three basis vectors.
inline MinkVector3 lorentz_cross(const MinkVector3& v, const MinkVector3& w) {
    return {-(v.c1 * w.c2 - v.c2 * w.c1),
            v.c2 * w.c0 - v.c0 * w.c2,
            v.c0 * w.c1 - v.c1 * w.c0};
}

/// det of the 3x3 matrix with columns v, w, z.
inline double det3(const MinkVector3& v, const MinkVector3& w, const MinkVector3& z) {
    return v.c0 * (w.c1 * z.c2 - w.c2 * z.c1)
         - w.c0 * (v.c1 * z.c2 - v.c2 * z.c1)
         + z.c0 * (v.c1 * w.c2 - v.c2 * w.c1);
}

/// Lorentzian time-like angle between v and w.
///
/// Both time-like: the theta >= 0 with |<v,w>| = |v||w| cosh(theta).
/// One space-like, one time-like: |<v,w>| = |v||w| sinh(theta).
/// Mixed time orientations are accepted; the absolute value in both
/// defining relations makes the result orientation-independent.
double lorentz_angle(const MinkVector3& v, const MinkVector3& w, double null_tol = kNullTol);

/// v / |<v,v>|^(1/2). The self inner product of the result is +-1 with the
/// sign of the argument preserved.
MinkVector3 normalize(const MinkVector3& v, double null_tol = kNullTol);

} // namespace gcr
