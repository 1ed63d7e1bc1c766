#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lws/verify.hpp"

using namespace lws;
using lwstest::make_problem;

TEST_CASE("residual of a pseudohyperbolic surface under 2H + K = 0") {
    // H = 2, K = -4 on H^{2,1}(1/2)
    const SurfacePatch patch = patch_from_map(
        lwstest::pseudohyperbolic_map(0.5, {0, 0, 0}), 0.2, 1.2, 0.0, 6.2);
    const ResidualReport rep = weingarten_residual(patch, 2, 1, 0, {20, 12});
    CHECK(rep.max_residual <= 1e-8);
    CHECK(rep.mean_residual <= rep.max_residual);
    CHECK(rep.causal_class == CausalCharacter::Spacelike);
    CHECK(rep.worst.size() == 10);
}

TEST_CASE("residual of the flat plane under H = 0") {
    Profile flat;
    flat.u_min = 0.5;
    flat.u_max = 2.0;
    flat.eval = [](double) { return ProfileJet{1.0, 0.0, 0.0}; };
    const SurfacePatch patch = revolve(AxisKind::TimelikeAxis, flat);
    const ResidualReport rep = weingarten_residual(patch, 1, 0, 0, {10, 10});
    CHECK(rep.max_residual <= 1e-14);
}

TEST_CASE("residual is sensitive to a 1% profile perturbation") {
    const auto p =
        make_problem(AxisKind::TimelikeAxis, 2, 1, 0, 1, 1, Branch::Minus, 0.0);
    const Profile exact =
        closed_form({ClosedFormFamily::TimelikeAxis_LambdaEqB, p}, 0.5, 2.0);
    Profile scaled;
    scaled.u_min = exact.u_min;
    scaled.u_max = exact.u_max;
    scaled.eval = [exact](double u) {
        ProfileJet j = exact.eval(u);
        j.z *= 1.01;
        j.zp *= 1.01;
        j.zpp *= 1.01;
        return j;
    };
    const SurfacePatch patch = revolve(AxisKind::TimelikeAxis, scaled);
    // orientation-corrected coefficients (sigma = -1 for spacelike rot1)
    const ResidualReport rep = weingarten_residual(patch, -2, 1, 0, {15, 9});
    CHECK(rep.max_residual > 1e-3);
}

TEST_CASE("degenerate patches are reported with the offending point") {
    Profile cone;
    cone.u_min = 0.5;
    cone.u_max = 2.0;
    cone.eval = [](double u) { return ProfileJet{u, 1.0, 0.0}; };
    const SurfacePatch patch = revolve(AxisKind::TimelikeAxis, cone);
    CHECK_THROWS_AS(weingarten_residual(patch, 1, 0, 0, {5, 5}), DegeneratePatch);
}

TEST_CASE("identify_quadric recovers the lambda=b pseudohyperbolic surface") {
    const auto p =
        make_problem(AxisKind::TimelikeAxis, 2, 1, 0, 1, 1, Branch::Minus, 0.6);
    const Profile prof =
        closed_form({ClosedFormFamily::TimelikeAxis_LambdaEqB, p}, 0.3, 2.0);
    const SurfacePatch patch = revolve(AxisKind::TimelikeAxis, prof);
    const QuadricFit fit = identify_quadric(lwstest::sample_points(patch, 15, 15));
    CHECK(fit.kind == QuadricKind::PseudoHyperbolic);
    CHECK(std::fabs(fit.radius - 0.5) <= 1e-6);
    CHECK(std::fabs(fit.center.x) <= 1e-6);
    CHECK(std::fabs(fit.center.y) <= 1e-6);
    CHECK(std::fabs(fit.center.z - 0.6) <= 1e-6);
}

TEST_CASE("identify_quadric recovers the spacelike-II pseudosphere") {
    const auto p = make_problem(AxisKind::SpacelikeAxisII, 2, 1, 0, -1, 0,
                                Branch::Plus, 0.25);
    const Profile prof =
        closed_form({ClosedFormFamily::SpacelikeII_LambdaZero, p}, 0.05, 0.7);
    const SurfacePatch patch = revolve(AxisKind::SpacelikeAxisII, prof);
    const QuadricFit fit = identify_quadric(lwstest::sample_points(patch, 15, 15));
    CHECK(fit.kind == QuadricKind::PseudoSphere);
    CHECK(std::fabs(fit.radius - 0.5) <= 1e-6); // C = 2
    CHECK(std::fabs(fit.center.x - 0.25) <= 1e-6);
    CHECK(std::fabs(fit.center.y) <= 1e-6);
    CHECK(std::fabs(fit.center.z) <= 1e-6);
}

TEST_CASE("identify_quadric rejects a non-quadric surface") {
    const auto p =
        make_problem(AxisKind::TimelikeAxis, 2, 1, 1, 1, 2, Branch::Plus, 0.0);
    const Profile prof =
        closed_form({ClosedFormFamily::TimelikeAxis_ZeroDiscriminant, p}, 0.3, 2.5);
    const SurfacePatch patch = revolve(AxisKind::TimelikeAxis, prof);
    const QuadricFit fit = identify_quadric(lwstest::sample_points(patch, 15, 15));
    CHECK(fit.kind == QuadricKind::None);
}

TEST_CASE("identify_quadric needs ten points") {
    std::vector<MVec3> few(9, MVec3{1, 0, 0});
    CHECK_THROWS_AS(identify_quadric(few), InsufficientPoints);
}

TEST_CASE("compare_profiles basics") {
    const auto id = [](double u) { return u * u; };
    CHECK(compare_profiles(id, id, 0.0, 1.0, 50) == 0.0);
    // pure vertical shifts are absorbed
    const auto shifted = [](double u) { return u * u + 3.7; };
    CHECK(compare_profiles(id, shifted, 0.0, 1.0, 50) <= 1e-14);
}

TEST_CASE("closed form vs numeric oracle (zero-discriminant, timelike axis)") {
    const auto p =
        make_problem(AxisKind::TimelikeAxis, 2, 1, 1, 1, 2, Branch::Plus, 0.0);
    const Profile cf =
        closed_form({ClosedFormFamily::TimelikeAxis_ZeroDiscriminant, p}, 0.3, 2.2);
    const GeneratingCurve curve = integrate_profile(p, 0.3, 2.2, 180);
    CHECK(compare_profiles(cf, curve.profile(), 0.3, 2.2, 101) <= 1e-7);
}

TEST_CASE("oriented residual reports the orientation sign") {
    // spacelike rot1 instance: sigma = -1
    const auto p =
        make_problem(AxisKind::TimelikeAxis, 2, 1, 0, 1, 1, Branch::Minus, 0.0);
    const Profile prof =
        closed_form({ClosedFormFamily::TimelikeAxis_LambdaEqB, p}, 0.5, 2.0);
    const SurfacePatch patch = revolve(AxisKind::TimelikeAxis, prof);
    const auto [rep, orient] = oriented_weingarten_residual(patch, 2, 1, 0, {15, 9});
    CHECK(orient == -1);
    CHECK(rep.max_residual <= 1e-9);
    CHECK(orient ==
          generator_orientation_sign(AxisKind::TimelikeAxis, 1, -1));
}
