#pragma once

#include <functional>

#include "gcr/minkowski.hpp"

namespace gcr {

/// Parametrized surface patch (s,t) -> E^3_1. Analytic partials are optional;
/// when all five are present, jets are assembled exactly, otherwise by
/// second-order central differences.
struct SurfaceMap {
    using Map = std::function<MinkVector3(double, double)>;

    Map position;
    Map xs, xt, xss, xst, xtt;

    bool has_analytic_jets() const {
        return static_cast<bool>(xs) && xt && xss && xst && xtt;
    }
};

/// Position and partial derivatives through second order at one point.
struct SurfaceJet {
    double s = 0.0, t = 0.0;
    MinkVector3 x, x_s, x_t, x_ss, x_st, x_tt;
};

/// Assemble the jet; analytic partials are used when supplied, otherwise
/// central differences of the given step (mixed partial by the symmetric
/// four-point stencil).
SurfaceJet jet(const SurfaceMap& map, double s, double t, double fd_step);

} // namespace gcr
