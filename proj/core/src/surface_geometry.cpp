#include "gcr/surface_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace gcr {

SurfaceJet jet(const SurfaceMap& map, double s, double t, double fd_step) {
    if (!map.position) throw InvalidParameter("jet: map has no position function");
    SurfaceJet j;
    j.s = s;
    j.t = t;
    try {
        if (map.has_analytic_jets()) {
            j.x = map.position(s, t);
            j.x_s = map.xs(s, t);
            j.x_t = map.xt(s, t);
            j.x_ss = map.xss(s, t);
            j.x_st = map.xst(s, t);
            j.x_tt = map.xtt(s, t);
            return j;
        }
        const double h = fd_step;
        const MinkVector3 c = map.position(s, t);
        const MinkVector3 sp = map.position(s + h, t), sm = map.position(s - h, t);
        const MinkVector3 tp = map.position(s, t + h), tm = map.position(s, t - h);
        const MinkVector3 pp = map.position(s + h, t + h), pm = map.position(s + h, t - h);
        const MinkVector3 mp = map.position(s - h, t + h), mm = map.position(s - h, t - h);
        j.x = c;
        j.x_s = (sp - sm) / (2.0 * h);
        j.x_t = (tp - tm) / (2.0 * h);
        j.x_ss = (sp - 2.0 * c + sm) / (h * h);
        j.x_tt = (tp - 2.0 * c + tm) / (h * h);
        j.x_st = (pp - pm - mp + mm) / (4.0 * h * h);
        return j;
    } catch (const OutOfDomain& e) {
        throw StencilOutOfDomain(std::string("jet: ") + e.what());
    }
}

MinkVector3 unit_normal(const SurfaceJet& j, double null_tol) {
    const MinkVector3 cross = lorentz_cross(j.x_s, j.x_t);
    const double scale = std::max(1.0, euclid_norm(j.x_s) * euclid_norm(j.x_t));
    const double len = euclid_norm(cross);
    if (len <= 1e-12 * scale)
        throw DegenerateTangentPlane("unit_normal: x_s and x_t are linearly dependent");
    const MinkVector3 dir = cross / len;
    const double q = lorentz_inner(dir, dir);
    if (q >= -null_tol)
        throw NotSpaceLike("unit_normal: normal direction is not time-like "
                           "(surface not space-like at this point)");
    const MinkVector3 n = dir / std::sqrt(-q);
    return n.c0 > 0.0 ? n : -n;
}

ShapeData shape_data(const SurfaceJet& j, const std::optional<Vec2>& preferred,
                     double null_tol) {
    ShapeData sd;
    sd.N = unit_normal(j, null_tol);
    sd.g = {lorentz_inner(j.x_s, j.x_s), lorentz_inner(j.x_s, j.x_t),
            lorentz_inner(j.x_s, j.x_t), lorentz_inner(j.x_t, j.x_t)};
    if (!(sd.g.ss > 0.0) || !(sd.g.det() > 0.0))
        throw DegenerateMetric("shape_data: induced metric not positive definite");
    sd.b = {lorentz_inner(j.x_ss, sd.N), lorentz_inner(j.x_st, sd.N),
            lorentz_inner(j.x_st, sd.N), lorentz_inner(j.x_tt, sd.N)};
    sd.S = sd.g.inverse() * sd.b;

    // S is g-self-adjoint, so the spectrum is real; clamp roundoff in the
    // discriminant.
    const double tr = sd.S.trace();
    const double disc = std::max(0.0, tr * tr - 4.0 * sd.S.det());
    const double root = std::sqrt(disc);
    double ka = 0.5 * (tr + root);
    double kb = 0.5 * (tr - root);

    const double kscale = std::max({1.0, std::fabs(ka), std::fabs(kb)});
    sd.umbilic = std::fabs(ka - kb) < kUmbilicTol * kscale;

    auto eigenvector = [&](double k) -> Vec2 {
        // rows of S - k I; take the better-conditioned one
        const Vec2 r1{sd.S.st, k - sd.S.ss};
        const Vec2 r2{k - sd.S.tt, sd.S.ts};
        const double n1 = std::fabs(r1.s) + std::fabs(r1.t);
        const double n2 = std::fabs(r2.s) + std::fabs(r2.t);
        Vec2 v = n1 >= n2 ? r1 : r2;
        const double n = norm_g(sd.g, v);
        return {v.s / n, v.t / n};
    };

    if (sd.umbilic) {
        // Every direction is principal; return a g-orthonormal pair, honoring
        // the caller's preference when given.
        Vec2 v = preferred.value_or(Vec2{1.0, 0.0});
        if (norm_g(sd.g, v) == 0.0) v = {1.0, 0.0};
        const double nv = norm_g(sd.g, v);
        sd.dir1 = {v.s / nv, v.t / nv};
        // (-w_t, w_s) with w = g dir1 is g-orthogonal to dir1
        const Vec2 w{sd.g.ss * sd.dir1.s + sd.g.st * sd.dir1.t,
                     sd.g.ts * sd.dir1.s + sd.g.tt * sd.dir1.t};
        const Vec2 v2{-w.t, w.s};
        const double n2 = norm_g(sd.g, v2);
        sd.dir2 = {v2.s / n2, v2.t / n2};
        sd.k1 = ka;
        sd.k2 = kb;
        return sd;
    }

    Vec2 va = eigenvector(ka);
    Vec2 vb = eigenvector(kb);
    if (std::fabs(ka) >= std::fabs(kb)) {
        sd.k1 = ka; sd.dir1 = va;
        sd.k2 = kb; sd.dir2 = vb;
    } else {
        sd.k1 = kb; sd.dir1 = vb;
        sd.k2 = ka; sd.dir2 = va;
    }
    return sd;
}

GaussianCurvature gaussian_curvature(const ShapeData& sd) {
    GaussianCurvature k;
    k.extrinsic = sd.S.det();
    k.intrinsic = -k.extrinsic; // Gauss equation with <N,N> = -1
    return k;
}

Mat2 first_fundamental(const SurfaceMap& map, double s, double t, double fd_step) {
    MinkVector3 xs, xt;
    try {
        if (map.xs && map.xt) {
            xs = map.xs(s, t);
            xt = map.xt(s, t);
        } else {
            xs = (map.position(s + fd_step, t) - map.position(s - fd_step, t)) / (2.0 * fd_step);
            xt = (map.position(s, t + fd_step) - map.position(s, t - fd_step)) / (2.0 * fd_step);
        }
    } catch (const OutOfDomain& e) {
        throw StencilOutOfDomain(std::string("first_fundamental: ") + e.what());
    }
    return {lorentz_inner(xs, xs), lorentz_inner(xs, xt),
            lorentz_inner(xs, xt), lorentz_inner(xt, xt)};
}

Christoffels christoffels(const SurfaceMap& map, double s, double t, double fd_step) {
    const double h = fd_step;
    const Mat2 g = first_fundamental(map, s, t, h);
    if (!(g.ss > 0.0) || !(g.det() > 0.0))
        throw DegenerateMetric("christoffels: induced metric not positive definite");
    const Mat2 gsp = first_fundamental(map, s + h, t, h);
    const Mat2 gsm = first_fundamental(map, s - h, t, h);
    const Mat2 gtp = first_fundamental(map, s, t + h, h);
    const Mat2 gtm = first_fundamental(map, s, t - h, h);

    // dg[d][i][j] = d_d g_ij
    double gm[2][2] = {{g.ss, g.st}, {g.ts, g.tt}};
    double dg[2][2][2];
    auto fill = [](const Mat2& p, const Mat2& m, double hh, double out[2][2]) {
        out[0][0] = (p.ss - m.ss) / (2.0 * hh);
        out[0][1] = (p.st - m.st) / (2.0 * hh);
        out[1][0] = out[0][1];
        out[1][1] = (p.tt - m.tt) / (2.0 * hh);
    };
    fill(gsp, gsm, h, dg[0]);
    fill(gtp, gtm, h, dg[1]);

    const Mat2 ginv_m = g.inverse();
    const double ginv[2][2] = {{ginv_m.ss, ginv_m.st}, {ginv_m.ts, ginv_m.tt}};
    (void)gm;

    double gamma[2][2][2];
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int jj = 0; jj < 2; ++jj) {
                double sum = 0.0;
                for (int l = 0; l < 2; ++l)
                    sum += ginv[k][l] * (dg[i][jj][l] + dg[jj][i][l] - dg[l][i][jj]);
                gamma[k][i][jj] = 0.5 * sum;
            }

    Christoffels out;
    out[0] = {gamma[0][0][0], gamma[0][0][1], gamma[0][1][0], gamma[0][1][1]};
    out[1] = {gamma[1][0][0], gamma[1][0][1], gamma[1][1][0], gamma[1][1][1]};
    return out;
}

double brioschi_intrinsic_K(const SurfaceMap& map, double s, double t, double fd_step) {
    const double h = fd_step;
    // metric field on the 3x3 stencil; [a][b] = offsets (a-1, b-1) in (s, t)
    Mat2 G[3][3];
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            G[a][b] = first_fundamental(map, s + (a - 1) * h, t + (b - 1) * h, h);

    const double E = G[1][1].ss, F = G[1][1].st, Gm = G[1][1].tt;
    const double E_s = (G[2][1].ss - G[0][1].ss) / (2.0 * h);
    const double E_t = (G[1][2].ss - G[1][0].ss) / (2.0 * h);
    const double G_s = (G[2][1].tt - G[0][1].tt) / (2.0 * h);
    const double G_t = (G[1][2].tt - G[1][0].tt) / (2.0 * h);
    const double F_s = (G[2][1].st - G[0][1].st) / (2.0 * h);
    const double F_t = (G[1][2].st - G[1][0].st) / (2.0 * h);
    const double E_tt = (G[1][2].ss - 2.0 * E + G[1][0].ss) / (h * h);
    const double G_ss = (G[2][1].tt - 2.0 * Gm + G[0][1].tt) / (h * h);
    const double F_st = (G[2][2].st - G[2][0].st - G[0][2].st + G[0][0].st) / (4.0 * h * h);

    const double a00 = -0.5 * E_tt + F_st - 0.5 * G_ss;
    auto det3x3 = [](double m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    double A[3][3] = {{a00, 0.5 * E_s, F_s - 0.5 * E_t},
                      {F_t - 0.5 * G_s, E, F},
                      {0.5 * G_t, F, Gm}};
    double B[3][3] = {{0.0, 0.5 * E_t, 0.5 * G_s},
                      {0.5 * E_t, E, F},
                      {0.5 * G_s, F, Gm}};
    const double den = E * Gm - F * F;
    if (!(den > 0.0))
        throw DegenerateMetric("brioschi_intrinsic_K: metric not positive definite");
    return (det3x3(A) - det3x3(B)) / (den * den);
}

} // namespace gcr
