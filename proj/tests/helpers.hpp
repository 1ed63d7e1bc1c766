#pragma once

// Shared builders for the verification and acceptance suites.

#include <array>
#include <vector>

#include "lws/rotational.hpp"
#include "lws/surface.hpp"
#include "lws/weingarten.hpp"

namespace lwstest {

inline lws::WeingartenProblem make_problem(lws::AxisKind axis, double a, double b,
                                           double c, int eps, double lambda,
                                           lws::Branch br, double mu = 0.0) {
    lws::WeingartenProblem p;
    p.a = a;
    p.b = b;
    p.c = c;
    p.epsilon = eps;
    p.axis = axis;
    p.lambda = lambda;
    p.branch = br;
    p.mu = mu;
    return p;
}

// Upper sheet of H^{2,1}(r; p0), spacelike, engine H = +1/r.
inline lws::SmoothMap pseudohyperbolic_map(double r, lws::MVec3 p0) {
    return lws::make_smooth_map([r, p0](auto u, auto v) {
        using std::sin;
        using std::cos;
        using std::sinh;
        using std::cosh;
        using lws::ad::sin;
        using lws::ad::cos;
        using lws::ad::sinh;
        using lws::ad::cosh;
        return std::array{p0.x + r * sinh(u) * cos(v), p0.y + r * sinh(u) * sin(v),
                          p0.z + r * cosh(u)};
    });
}

// Band of S^{2,1}(r; p0) with u > 0, timelike, engine H = -1/r.
inline lws::SmoothMap pseudosphere_map(double r, lws::MVec3 p0) {
    return lws::make_smooth_map([r, p0](auto u, auto v) {
        using std::sinh;
        using std::cosh;
        using std::sqrt;
        using lws::ad::sinh;
        using lws::ad::cosh;
        using lws::ad::sqrt;
        auto z = sqrt(r * r - u * u);
        return std::array{p0.x + u, p0.y + z * cosh(v), p0.z + z * sinh(v)};
    });
}

inline std::vector<lws::MVec3> sample_points(const lws::SurfacePatch& patch,
                                             int nu, int nv) {
    std::vector<lws::MVec3> pts;
    pts.reserve(static_cast<std::size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i) {
        const double u =
            i == nu - 1 ? patch.u1 : patch.u0 + (patch.u1 - patch.u0) * i / (nu - 1);
        for (int k = 0; k < nv; ++k) {
            const double v =
                k == nv - 1 ? patch.v1
                            : patch.v0 + (patch.v1 - patch.v0) * k / (nv - 1);
            pts.push_back(patch.jet(u, v).X);
        }
    }
    return pts;
}

} // namespace lwstest
