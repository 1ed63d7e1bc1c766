#include "lws/surface.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace lws {

FundamentalForms fundamental_forms(const Jet2& jet) {
    FundamentalForms ff{};
    ff.E = lorentz_dot(jet.Xu, jet.Xu);
    ff.F = lorentz_dot(jet.Xu, jet.Xv);
    ff.G = lorentz_dot(jet.Xv, jet.Xv);
    ff.W = ff.E * ff.G - ff.F * ff.F;

    const double tol = degeneracy_tolerance(jet);
    if (std::fabs(ff.W) <= tol) {
        throw DegeneratePatch("lightlike tangent plane: |EG-F^2| = " +
                              std::to_string(std::fabs(ff.W)) + " <= tol " +
                              std::to_string(tol));
    }
    ff.epsilon = ff.W > 0.0 ? 1 : -1;

    // e = det(Xu,Xv,Xuu)/sqrt(eps W), likewise f and g. eps*W = |W| > 0 by
    // construction; negative radicands beyond tolerance were rejected above.
    const double root = std::sqrt(ff.epsilon * ff.W);
    ff.e = det3(jet.Xu, jet.Xv, jet.Xuu) / root;
    ff.f = det3(jet.Xu, jet.Xv, jet.Xuv) / root;
    ff.g = det3(jet.Xu, jet.Xv, jet.Xvv) / root;
    return ff;
}

CurvatureData curvature(const Jet2& jet) {
    const FundamentalForms ff = fundamental_forms(jet);
    const double root = std::sqrt(ff.epsilon * ff.W);

    MVec3 n = lorentz_cross(jet.Xu, jet.Xv) / root;

    // Canonical orientation. Spacelike: future-directed, <N,E3> = -N.z < 0.
    // Timelike: <N,e1> >= 0, tie broken by <N,e2> >= 0.
    double flip = 1.0;
    if (ff.epsilon == 1) {
        if (-n.z >= 0.0) flip = -1.0;
    } else {
        if (n.x < 0.0 || (n.x == 0.0 && n.y < 0.0)) flip = -1.0;
    }
    n = flip * n;

    const double e = flip * ff.e;
    const double f = flip * ff.f;
    const double g = flip * ff.g;

    CurvatureData out{};
    out.epsilon = ff.epsilon;
    out.N = n;
    out.H = -0.5 * ff.epsilon * (e * ff.G - 2.0 * f * ff.F + g * ff.E) / ff.W;
    out.K = -ff.epsilon * (e * g - f * f) / ff.W;
    return out;
}

Jet2 jets_from_map(const SmoothMap& f, double u, double v, JetMode mode,
                   double h) {
    Jet2 j{};
    if (mode == JetMode::AutomaticDifferentiation) {
        const auto r = f.taylor(ad::Taylor2::var_u(u), ad::Taylor2::var_v(v));
        j.X = {r[0].v, r[1].v, r[2].v};
        j.Xu = {r[0].du, r[1].du, r[2].du};
        j.Xv = {r[0].dv, r[1].dv, r[2].dv};
        j.Xuu = {r[0].duu, r[1].duu, r[2].duu};
        j.Xuv = {r[0].duv, r[1].duv, r[2].duv};
        j.Xvv = {r[0].dvv, r[1].dvv, r[2].dvv};
        return j;
    }

    auto at = [&](double uu, double vv) {
        const auto a = f.value(uu, vv);
        return MVec3{a[0], a[1], a[2]};
    };
    const MVec3 c = at(u, v);
    const MVec3 pu = at(u + h, v), mu = at(u - h, v);
    const MVec3 pv = at(u, v + h), mv = at(u, v - h);
    const MVec3 pp = at(u + h, v + h), pm = at(u + h, v - h);
    const MVec3 mp = at(u - h, v + h), mm = at(u - h, v - h);

    j.X = c;
    j.Xu = (pu - mu) / (2.0 * h);
    j.Xv = (pv - mv) / (2.0 * h);
    j.Xuu = (pu - 2.0 * c + mu) / (h * h);
    j.Xvv = (pv - 2.0 * c + mv) / (h * h);
    j.Xuv = (pp - pm - mp + mm) / (4.0 * h * h);
    return j;
}

namespace {

template <class Fn>
void for_grid(const SurfacePatch& patch, const GridSpec& grid, Fn fn) {
    const int nu = grid.nu < 1 ? 1 : grid.nu;
    const int nv = grid.nv < 1 ? 1 : grid.nv;
    for (int i = 0; i < nu; ++i) {
        const double u = i == nu - 1
                             ? patch.u1
                             : patch.u0 + (patch.u1 - patch.u0) * i / (nu - 1);
        for (int k = 0; k < nv; ++k) {
            const double v = k == nv - 1
                                 ? patch.v1
                                 : patch.v0 + (patch.v1 - patch.v0) * k / (nv - 1);
            fn(u, v);
        }
    }
}

} // namespace

CausalCharacter classify_patch(const SurfacePatch& patch, const GridSpec& grid) {
    if (grid.nu < 1 || grid.nv < 1) throw InvalidDomain("empty sampling grid");
    bool any_pos = false, any_neg = false, any_null = false;
    for_grid(patch, grid, [&](double u, double v) {
        const Jet2 j = patch.jet(u, v);
        const double E = lorentz_dot(j.Xu, j.Xu);
        const double F = lorentz_dot(j.Xu, j.Xv);
        const double G = lorentz_dot(j.Xv, j.Xv);
        const double W = E * G - F * F;
        const double tol = degeneracy_tolerance(j);
        if (W > tol)
            any_pos = true;
        else if (W < -tol)
            any_neg = true;
        else
            any_null = true;
    });
    if (any_null || (any_pos && any_neg))
        throw MixedCausality("W changes sign or degenerates on the grid");
    return any_pos ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

std::array<double, 2> w_range(const SurfacePatch& patch, const GridSpec& grid) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for_grid(patch, grid, [&](double u, double v) {
        const Jet2 j = patch.jet(u, v);
        const double E = lorentz_dot(j.Xu, j.Xu);
        const double F = lorentz_dot(j.Xu, j.Xv);
        const double G = lorentz_dot(j.Xv, j.Xv);
        const double W = E * G - F * F;
        lo = std::fmin(lo, W);
        hi = std::fmax(hi, W);
    });
    return {lo, hi};
}

} // namespace lws
