#include "gcr/minkowski.hpp"

#include <algorithm>

namespace gcr {

double lorentz_angle(const MinkVector3& v, const MinkVector3& w, double null_tol) {
    const CausalCharacter cv = causal_character(v, null_tol);
    const CausalCharacter cw = causal_character(w, null_tol);
    if (cv == CausalCharacter::LightLike || cw == CausalCharacter::LightLike)
        throw NullArgument("lorentz_angle: light-like argument");
    if (cv == CausalCharacter::SpaceLike && cw == CausalCharacter::SpaceLike)
        throw BothSpaceLike("lorentz_angle: undefined for two space-like vectors");

    const double r = std::fabs(lorentz_inner(v, w)) / (lorentz_norm(v) * lorentz_norm(w));
    if (cv == CausalCharacter::TimeLike && cw == CausalCharacter::TimeLike) {
        // reverse Cauchy-Schwarz guarantees r >= 1; clamp roundoff
        return std::acosh(std::max(r, 1.0));
    }
    return std::asinh(r);
}

MinkVector3 normalize(const MinkVector3& v, double null_tol) {
    const double q = lorentz_inner(v, v);
    if (std::fabs(q) <= null_tol)
        throw NullVector("normalize: vector is light-like");
    return v / std::sqrt(std::fabs(q));
}

} // namespace gcr
