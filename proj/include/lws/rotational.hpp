#pragma once

#include <array>
#include <functional>

#include "lws/minkowski.hpp"
#include "lws/surface.hpp"

namespace lws {

/// The three rotation groups of E_1^3, with the spacelike axis split by its
/// two parametrizations:
///   TimelikeAxis    X(u,v) = (u cos v, u sin v, z(u)),          u != 0
///   SpacelikeAxisI  X(u,v) = (u, z(u) sinh v, z(u) cosh v),     z != 0
///   SpacelikeAxisII X(u,v) = (u, z(u) cosh v, z(u) sinh v),     z != 0
///   LightlikeAxis   X(u,v) = (-2uv, z(u)+u-uv^2, z(u)-u-uv^2),  u != 0
/// SpacelikeAxisII surfaces are always timelike (W = -z^2(1+z'^2)).
enum class AxisKind { TimelikeAxis, SpacelikeAxisI, SpacelikeAxisII, LightlikeAxis };

const char* to_string(AxisKind k);

struct ProfileJet {
    double z, zp, zpp;
};

/// Generating profile z(u) with analytic first and second derivatives on an
/// open interval. The interval must exclude u=0 (all axes) and, for the
/// spacelike-axis parametrizations, z=0 (checked lazily at evaluation).
struct Profile {
    std::function<ProfileJet(double)> eval;
    double u_min = 0.0;
    double u_max = 0.0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

/// Rotation by parameter v about the canonical axis of the given kind.
/// Every matrix preserves lorentz_dot and has determinant +1, and satisfies
/// X(u,v) = R_v * X(u,0) for the parametrizations above.
Mat3 rotation_matrix(AxisKind kind, double v);

MVec3 apply_rotation(const Mat3& m, const MVec3& p);

/// Orbit v -> R_v * p. Throws FixedPoint if p lies on the axis (for the
/// lightlike axis: if p is in the degenerate plane span{e1,(0,1,1)}, y=z).
std::function<MVec3(double)> orbit(AxisKind kind, const MVec3& p);

/// Rotational surface swept by the profile. Jets are assembled analytically
/// from (z, z', z'') and the v-dependence; nothing is differenced in v.
/// The v-domain defaults to [0, 2pi] for the timelike axis and [-1.5, 1.5]
/// otherwise.
SurfacePatch revolve(AxisKind kind, const Profile& profile);
SurfacePatch revolve(AxisKind kind, const Profile& profile, double v0, double v1);

/// Generating curve of the rot3 parametrization: alpha(u) = (0, u+z, -u+z).
MVec3 lightlike_generator(double u, double z);

/// Global sign relating the engine's canonical normal orientation to the
/// orientation implicitly used by the generating-curve ODEs of each axis
/// kind. A profile solving the first integral for coefficients (a,b,c)
/// satisfies  sigma*a*H + b*K = c  with the engine's H, where
/// sigma = generator_orientation_sign(axis, epsilon, sign of z').
/// The sign is -1 for spacelike surfaces and -sign(z') for timelike ones
/// (z' keeps a fixed sign along any valid timelike profile).
///
/// For timelike patches the engine's pointwise normal rule is not
/// rotation-equivariant on two kinds: timelike-axis patches need a v-window
/// inside (-pi/2, pi/2) and lightlike-axis timelike patches a v-window with
/// v > 0; on those windows the sign is exact.
int generator_orientation_sign(AxisKind axis, int epsilon, int zprime_sign);

} // namespace lws
