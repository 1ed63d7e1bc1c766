#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "lws/ad.hpp"
#include "lws/errors.hpp"
#include "lws/minkowski.hpp"

namespace lws {

/// Value and first/second partials of a map R^2 -> E_1^3 at one parameter
/// point. Producers must guarantee symmetry of mixed partials (Xuv = Xvu).
struct Jet2 {
    MVec3 X;
    MVec3 Xu, Xv;
    MVec3 Xuu, Xuv, Xvv;
};

/// Parametrized surface patch over a rectangular domain. The evaluator must
/// be re-entrant; non-degeneracy (|EG-F^2| > tol) is checked lazily by the
/// curvature operations.
struct SurfacePatch {
    std::function<Jet2(double, double)> jet;
    double u0 = 0.0, u1 = 1.0;
    double v0 = 0.0, v1 = 1.0;
};

/// Coefficients of the first and second fundamental forms.
/// e,f,g are taken with respect to the raw normal Xu x Xv / sqrt(eps W);
/// curvature() applies the orientation convention on top of them.
struct FundamentalForms {
    double E, F, G;
    double e, f, g;
    double W;    // EG - F^2
    int epsilon; // +1 spacelike (W>0), -1 timelike (W<0)
};

struct CurvatureData {
    double H;
    double K;
    MVec3 N; // unit normal, canonical orientation (see curvature())
    int epsilon;
};

/// Degeneracy tolerance: 1e-10 * max(1, |Xu|^2 |Xv|^2) (Euclidean norms).
inline double degeneracy_tolerance(const Jet2& j) {
    return 1e-10 * std::fmax(1.0, euclid_norm2(j.Xu) * euclid_norm2(j.Xv));
}

/// First and second fundamental form coefficients at a point.
/// Throws DegeneratePatch if |EG-F^2| <= tol.
FundamentalForms fundamental_forms(const Jet2& jet);

/// Mean and Gauss curvature with the canonical normal orientation:
///   - spacelike patches (eps=+1): N future-directed, <N,(0,0,1)> < 0;
///   - timelike patches (eps=-1): the branch with <N,(1,0,0)> >= 0,
///     ties broken by <N,(0,1,0)> >= 0.
/// Flipping the normal flips the sign of H (K is orientation-free).
CurvatureData curvature(const Jet2& jet);

enum class JetMode { AutomaticDifferentiation, CentralDifferences };

/// A twice-differentiable map usable both at double (central differences)
/// and at Taylor2 (exact forward-mode jets).
struct SmoothMap {
    std::function<std::array<double, 3>(double, double)> value;
    std::function<std::array<ad::Taylor2, 3>(ad::Taylor2, ad::Taylor2)> taylor;
};

template <class F>
SmoothMap make_smooth_map(F f) {
    return SmoothMap{
        [f](double u, double v) {
            return f(u, v);
        },
        [f](ad::Taylor2 u, ad::Taylor2 v) {
            return f(u, v);
        }};
}

/// Jets of an arbitrary smooth map. AD mode propagates exact second-order
/// Taylor coefficients; central-differences mode is O(h^2) and serves as an
/// independent oracle.
Jet2 jets_from_map(const SmoothMap& f, double u, double v, JetMode mode,
                   double h = 1e-4);

inline SurfacePatch patch_from_map(const SmoothMap& f, double u0, double u1,
                                   double v0, double v1,
                                   JetMode mode = JetMode::AutomaticDifferentiation,
                                   double h = 1e-4) {
    return SurfacePatch{
        [f, mode, h](double u, double v) { return jets_from_map(f, u, v, mode, h); },
        u0, u1, v0, v1};
}

struct GridSpec {
    int nu = 30;
    int nv = 15;
};

/// Causal character of a patch sampled on a uniform grid: Spacelike if
/// W > tol everywhere, Timelike if W < -tol everywhere.
/// Throws MixedCausality if W changes sign or degenerates on the grid.
CausalCharacter classify_patch(const SurfacePatch& patch, const GridSpec& grid);

/// W range over a grid (min, max), no classification. Used by reporting.
std::array<double, 2> w_range(const SurfacePatch& patch, const GridSpec& grid);

} // namespace lws
