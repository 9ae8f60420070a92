#pragma once

#include <array>
#include <optional>

#include "gcr/linalg2.hpp"
#include "gcr/minkowski.hpp"
#include "gcr/surface_map.hpp"

namespace gcr {

/// Defaults consistent with second-order stencils in double precision.
inline constexpr double kDefaultFdStep = 1e-4;
inline constexpr double kEigTol = 1e-10;
inline constexpr double kUmbilicTol = 1e-7;
inline constexpr double kFrameTolAnalytic = 1e-8;
inline constexpr double kFrameTolFd = 1e-4;

/// Future-pointing unit normal: normalize(x_s ^ x_t) with the c0 component
/// made positive. Time-like for a space-like surface point.
/// Throws DegenerateTangentPlane when x_s, x_t are dependent and NotSpaceLike
/// when the normal direction is not time-like.
MinkVector3 unit_normal(const SurfaceJet& j, double null_tol = kNullTol);

/// First and second fundamental forms, shape operator and principal data at
/// one space-like point. Conventions: b_ij = <x_ij, N>, S = g^-1 b, so that
/// <S X, Y> = b(X, Y) with the future-pointing N; the sign this induces on
/// the principal curvatures is pinned once by the umbilic-sheet golden test.
struct ShapeData {
    Mat2 g;      ///< first fundamental form, positive definite
    Mat2 b;      ///< second fundamental form
    Mat2 S;      ///< shape operator g^-1 b
    double k1 = 0.0, k2 = 0.0; ///< principal curvatures, |k1| >= |k2|
    Vec2 dir1, dir2;           ///< g-normalized eigenvector components
    MinkVector3 N;
    bool umbilic = false;      ///< |k1 - k2| below the umbilic tolerance
};

/// Optional preferred direction breaks the eigenvector tie at umbilic points
/// (the caller passes the tangential direction of x when known).
ShapeData shape_data(const SurfaceJet& j, const std::optional<Vec2>& preferred = std::nullopt,
                     double null_tol = kNullTol);

struct GaussianCurvature {
    double extrinsic = 0.0; ///< k1 k2 = det S
    double intrinsic = 0.0; ///< -extrinsic (time-like normal)
};

GaussianCurvature gaussian_curvature(const ShapeData& sd);

/// Metric from first-order data only (analytic partials when present).
Mat2 first_fundamental(const SurfaceMap& map, double s, double t, double fd_step);

/// Christoffel symbols of the induced metric from central differences of the
/// metric field: Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij).
/// Index 0 = s, index 1 = t; gamma[k].ss etc. give Gamma^k_ij.
using Christoffels = std::array<Mat2, 2>;
Christoffels christoffels(const SurfaceMap& map, double s, double t, double fd_step);

/// Intrinsic Gaussian curvature by the Brioschi formula on finite differences
/// of the metric field. Serves as the independent route for the
/// Gauss-equation consistency check against -det S.
double brioschi_intrinsic_K(const SurfaceMap& map, double s, double t, double fd_step);

} // namespace gcr
