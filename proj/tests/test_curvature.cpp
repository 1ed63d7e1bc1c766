#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "lws/rotational.hpp"
#include "lws/surface.hpp"

using namespace lws;

namespace {

SmoothMap planar_graph() {
    return make_smooth_map([](auto u, auto v) { return std::array{u, v, u * 0.0}; });
}

// Upper sheet of the pseudohyperbolic surface H^{2,1}(r; p0).
SmoothMap pseudohyperbolic_map(double r, MVec3 p0) {
    return make_smooth_map([r, p0](auto u, auto v) {
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

// Pseudosphere S^{2,1}(r; p0) as a rot22-style band with u > 0 (so the
// engine's timelike normal rule picks the outward normal consistently).
SmoothMap pseudosphere_map(double r, MVec3 p0) {
    return make_smooth_map([r, p0](auto u, auto v) {
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

Profile linear_profile(double slope, double lo, double hi) {
    Profile p;
    p.u_min = lo;
    p.u_max = hi;
    p.eval = [slope](double u) { return ProfileJet{slope * u, slope, 0.0}; };
    return p;
}

Profile constant_profile(double z0, double lo, double hi) {
    Profile p;
    p.u_min = lo;
    p.u_max = hi;
    p.eval = [z0](double) { return ProfileJet{z0, 0.0, 0.0}; };
    return p;
}

} // namespace

TEST_CASE("fundamental forms of coordinate planes") {
    const SurfacePatch sp = patch_from_map(planar_graph(), -1, 1, -1, 1);
    const FundamentalForms ff = fundamental_forms(sp.jet(0.3, -0.2));
    CHECK(ff.E == doctest::Approx(1.0));
    CHECK(ff.F == doctest::Approx(0.0));
    CHECK(ff.G == doctest::Approx(1.0));
    CHECK(ff.e == doctest::Approx(0.0));
    CHECK(ff.f == doctest::Approx(0.0));
    CHECK(ff.g == doctest::Approx(0.0));
    CHECK(ff.epsilon == 1);

    // timelike plane x-z
    const SmoothMap tl = make_smooth_map(
        [](auto u, auto v) { return std::array{u, v * 0.0, v}; });
    const FundamentalForms ft =
        fundamental_forms(patch_from_map(tl, -1, 1, -1, 1).jet(0.1, 0.4));
    CHECK(ft.E == doctest::Approx(1.0));
    CHECK(ft.F == doctest::Approx(0.0));
    CHECK(ft.G == doctest::Approx(-1.0));
    CHECK(ft.epsilon == -1);
}

TEST_CASE("rot1 with constant z has W = u^2") {
    const SurfacePatch patch =
        revolve(AxisKind::TimelikeAxis, constant_profile(3.0, 0.5, 2.0));
    for (double u : {0.5, 1.0, 1.7}) {
        const FundamentalForms ff = fundamental_forms(patch.jet(u, 0.9));
        CHECK(ff.W == doctest::Approx(u * u).epsilon(1e-14));
    }
}

TEST_CASE("W identity holds: W == E*G - F^2") {
    const SurfacePatch patch = patch_from_map(
        pseudohyperbolic_map(1.3, {0.2, -0.1, 0.4}), 0.2, 1.4, 0.0, 6.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> du(0.2, 1.4), dv(0.0, 6.0);
    for (int i = 0; i < 50; ++i) {
        const FundamentalForms ff = fundamental_forms(patch.jet(du(rng), dv(rng)));
        CHECK(std::fabs(ff.W - (ff.E * ff.G - ff.F * ff.F)) <=
              1e-12 * std::fmax(1.0, std::fabs(ff.W)));
    }
}

TEST_CASE("pseudo-quadric curvatures H = eps/r, K = -eps/r^2") {
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> dc(-2.0, 2.0);
    for (double r : {0.5, 1.0, 2.0}) {
        const MVec3 p0{dc(rng), dc(rng), dc(rng)};
        SUBCASE("") {}
        // spacelike: upper hyperboloid sheet, any v
        const SurfacePatch hs =
            patch_from_map(pseudohyperbolic_map(r, p0), 0.15, 1.2, 0.0, 6.2);
        for (double u : {0.15, 0.7, 1.2}) {
            for (double v : {0.0, 2.0, 4.4}) {
                const CurvatureData cd = curvature(hs.jet(u, v));
                CHECK(cd.epsilon == 1);
                CHECK(std::fabs(cd.H - 1.0 / r) <= 1e-9);
                CHECK(std::fabs(cd.K + 1.0 / (r * r)) <= 1e-9);
            }
        }
        // timelike: pseudosphere band
        const SurfacePatch ps =
            patch_from_map(pseudosphere_map(r, p0), 0.2 * r, 0.9 * r, -1.2, 1.2);
        for (double u : {0.2 * r, 0.5 * r, 0.9 * r}) {
            for (double v : {-1.2, 0.3, 1.2}) {
                const CurvatureData cd = curvature(ps.jet(u, v));
                CHECK(cd.epsilon == -1);
                CHECK(std::fabs(cd.H + 1.0 / r) <= 1e-9);
                CHECK(std::fabs(cd.K - 1.0 / (r * r)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("spacelike plane has H = K = 0") {
    const CurvatureData cd =
        curvature(patch_from_map(planar_graph(), -1, 1, -1, 1).jet(0.2, 0.8));
    CHECK(cd.H == doctest::Approx(0.0));
    CHECK(cd.K == doctest::Approx(0.0));
}

TEST_CASE("normal invariants") {
    const SurfacePatch hs = patch_from_map(pseudohyperbolic_map(1.0, {0, 0, 0}),
                                           0.2, 1.2, 0.0, 6.2);
    const SurfacePatch ps =
        patch_from_map(pseudosphere_map(1.5, {0.3, 0.0, -0.2}), 0.3, 1.3, -1.0, 1.0);
    for (const SurfacePatch* patch : {&hs, &ps}) {
        for (double u = patch->u0; u <= patch->u1; u += (patch->u1 - patch->u0) / 4) {
            for (double v = patch->v0; v <= patch->v1;
                 v += (patch->v1 - patch->v0) / 4) {
                const Jet2 j = patch->jet(u, v);
                const CurvatureData cd = curvature(j);
                const double scale = std::sqrt(euclid_norm2(j.Xu));
                CHECK(std::fabs(lorentz_dot(cd.N, cd.N) + cd.epsilon) <= 1e-10);
                CHECK(std::fabs(lorentz_dot(cd.N, j.Xu)) <= 1e-10 * scale);
                CHECK(std::fabs(lorentz_dot(cd.N, j.Xv)) <= 1e-10 * scale);
                if (cd.epsilon == 1)
                    CHECK(lorentz_dot(cd.N, MVec3{0, 0, 1}) < 0.0); // future-directed
            }
        }
    }
}

TEST_CASE("jets_from_map basics") {
    const Jet2 j =
        jets_from_map(planar_graph(), 0.4, 0.7, JetMode::AutomaticDifferentiation);
    CHECK(j.Xu.x == 1.0);
    CHECK(j.Xu.y == 0.0);
    CHECK(j.Xu.z == 0.0);
    CHECK(j.Xuu.x == 0.0);
    CHECK(j.Xuu.z == 0.0);

    // rot1 with z = u^2: Xuu = (0,0,2) at v = 0
    const SmoothMap rot1 = make_smooth_map([](auto u, auto v) {
        using std::sin;
        using std::cos;
        using lws::ad::sin;
        using lws::ad::cos;
        return std::array{u * cos(v), u * sin(v), u * u};
    });
    const Jet2 k =
        jets_from_map(rot1, 1.3, 0.0, JetMode::AutomaticDifferentiation);
    CHECK(k.Xuu.x == doctest::Approx(0.0));
    CHECK(k.Xuu.y == doctest::Approx(0.0));
    CHECK(k.Xuu.z == doctest::Approx(2.0));
}

TEST_CASE("AD and central-difference jets agree on random smooth maps") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> amp(-0.25, 0.25);
    for (int trial = 0; trial < 6; ++trial) {
        const double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng);
        const SmoothMap f = make_smooth_map([a1, a2, a3](auto u, auto v) {
            using std::sin;
            using std::cos;
            using std::sinh;
            using lws::ad::sin;
            using lws::ad::cos;
            using lws::ad::sinh;
            return std::array{u + a3 * sin(v), v - a2 * cos(u),
                              a1 * sin(u) * cos(v) + a2 * sinh(u * 0.5) +
                                  a3 * u * v};
        });
        for (double u : {-0.8, 0.3, 1.1}) {
            for (double v : {-0.9, 0.2, 1.2}) {
                const Jet2 ja =
                    jets_from_map(f, u, v, JetMode::AutomaticDifferentiation);
                const Jet2 jc =
                    jets_from_map(f, u, v, JetMode::CentralDifferences, 1e-4);
                for (auto [pa, pc] :
                     {std::pair{ja.Xu, jc.Xu}, std::pair{ja.Xv, jc.Xv},
                      std::pair{ja.Xuu, jc.Xuu}, std::pair{ja.Xuv, jc.Xuv},
                      std::pair{ja.Xvv, jc.Xvv}}) {
                    CHECK(std::fabs(pa.x - pc.x) <= 1e-6 * std::fmax(1.0, std::fabs(pa.x)));
                    CHECK(std::fabs(pa.y - pc.y) <= 1e-6 * std::fmax(1.0, std::fabs(pa.y)));
                    CHECK(std::fabs(pa.z - pc.z) <= 1e-6 * std::fmax(1.0, std::fabs(pa.z)));
                }
            }
        }
    }
}

TEST_CASE("classify_patch on rot1 graphs") {
    const SurfacePatch sp =
        revolve(AxisKind::TimelikeAxis, linear_profile(0.5, 1.0, 2.0));
    CHECK(classify_patch(sp, {8, 8}) == CausalCharacter::Spacelike);

    const SurfacePatch tl =
        revolve(AxisKind::TimelikeAxis, linear_profile(2.0, 1.0, 2.0));
    CHECK(classify_patch(tl, {8, 8}) == CausalCharacter::Timelike);

    const SurfacePatch nul =
        revolve(AxisKind::TimelikeAxis, linear_profile(1.0, 1.0, 2.0));
    CHECK_THROWS_AS(classify_patch(nul, {8, 8}), MixedCausality);
}

TEST_CASE("degenerate patch is a hard error") {
    const SurfacePatch nul =
        revolve(AxisKind::TimelikeAxis, linear_profile(1.0, 1.0, 2.0));
    CHECK_THROWS_AS(curvature(nul.jet(1.5, 0.3)), DegeneratePatch);
}

TEST_CASE("H and K are v-independent on rotational patches") {
    // spacelike rot1 graph, full turn
    Profile prof;
    prof.u_min = 0.8;
    prof.u_max = 2.0;
    prof.eval = [](double u) {
        // z = sqrt(1+u^2)/2: z' = u/(2 sqrt(1+u^2)), |z'| < 1/2
        const double s = std::sqrt(1.0 + u * u);
        return ProfileJet{0.5 * s, 0.5 * u / s, 0.5 / (s * s * s)};
    };
    Profile hyp; // z = sqrt(1+u^2), spacelike for rot21, admissible for rot3
    hyp.u_min = 0.3;
    hyp.u_max = 1.6;
    hyp.eval = [](double u) {
        const double s = std::sqrt(1.0 + u * u);
        return ProfileJet{s, u / s, 1.0 / (s * s * s)};
    };
    Profile band; // z = sqrt(4-u^2) on u in (0,2): rot22 profile
    band.u_min = 0.4;
    band.u_max = 1.6;
    band.eval = [](double u) {
        const double z = std::sqrt(4.0 - u * u);
        return ProfileJet{z, -u / z, -4.0 / (z * z * z)};
    };
    Profile down; // z' < 0, timelike for rot3 (eps = -1)
    down.u_min = 0.4;
    down.u_max = 1.6;
    down.eval = [](double u) { return ProfileJet{1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u)}; };

    const SurfacePatch sp = revolve(AxisKind::TimelikeAxis, prof);
    // timelike rot1 graph, branch-consistent v-window inside (-pi/2, pi/2)
    const SurfacePatch tl =
        revolve(AxisKind::TimelikeAxis, linear_profile(3.0, 1.0, 2.0), -1.2, 1.2);
    const SurfacePatch r21 = revolve(AxisKind::SpacelikeAxisI, hyp, -1.4, 1.4);
    const SurfacePatch r22 = revolve(AxisKind::SpacelikeAxisII, band, -1.4, 1.4);
    const SurfacePatch r3s = revolve(AxisKind::LightlikeAxis, hyp, -1.4, 1.4);
    // timelike lightlike-axis patch: sign-definite v-window
    const SurfacePatch r3t = revolve(AxisKind::LightlikeAxis, down, 0.1, 1.5);

    for (const SurfacePatch* patch : {&sp, &tl, &r21, &r22, &r3s, &r3t}) {
        for (double u : {patch->u0 + 0.1, 0.5 * (patch->u0 + patch->u1)}) {
            const CurvatureData ref = curvature(patch->jet(u, patch->v0));
            for (int i = 0; i <= 12; ++i) {
                const double v = patch->v0 + (patch->v1 - patch->v0) * i / 12.0;
                const CurvatureData cd = curvature(patch->jet(u, v));
                CHECK(std::fabs(cd.H - ref.H) <= 1e-8);
                CHECK(std::fabs(cd.K - ref.K) <= 1e-8);
            }
        }
    }
}
