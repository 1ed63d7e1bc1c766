#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lws/minkowski.hpp"
#include "lws/rotational.hpp"
#include "lws/surface.hpp"

namespace lws {

struct ResidualOffender {
    double u, v;
    double residual;
};

struct ResidualReport {
    GridSpec grid;
    double max_residual = 0.0;
    double mean_residual = 0.0;
    CausalCharacter causal_class = CausalCharacter::Spacelike;
    double w_min = 0.0, w_max = 0.0;
    std::vector<ResidualOffender> worst; // up to 10, largest first
};

/// Pointwise |a*H + b*K - c| aggregated over a uniform grid on the patch.
/// DegeneratePatch is propagated with the offending parameter point in the
/// message.
ResidualReport weingarten_residual(const SurfacePatch& patch, double a,
                                   double b, double c, const GridSpec& grid);

/// Same residual scanned with both global normal orientations (a vs -a).
/// Returns the report of the smaller max residual and the orientation sign
/// that achieved it. The engine's canonical normal and the generating-curve
/// ODE orientation differ by a per-case global sign (see
/// generator_orientation_sign); this helper makes verification independent
/// of that bookkeeping.
std::pair<ResidualReport, int> oriented_weingarten_residual(
    const SurfacePatch& patch, double a, double b, double c,
    const GridSpec& grid);

enum class QuadricKind { PseudoHyperbolic, PseudoSphere, None };

const char* to_string(QuadricKind k);

struct QuadricFit {
    QuadricKind kind = QuadricKind::None;
    MVec3 center{};
    double radius = 0.0;
    double rms_deviation = 0.0;
};

/// Least-squares fit of <p - p0, p - p0> = s over (p0, s); the model is
/// linear in (2*p0, s - <p0,p0>) and is solved by pivoted normal equations.
/// kind = PseudoHyperbolic when s < 0 (radius sqrt(-s)), PseudoSphere when
/// s > 0, None when the fit residual exceeds tol (default
/// 1e-6 * scale^2) or the radius degenerates.
/// Throws InsufficientPoints for fewer than 10 points.
QuadricFit identify_quadric(const std::vector<MVec3>& points, double tol = 0.0);

/// sup |z1 - z2| over n uniform samples of [lo, hi], after subtracting the
/// mean difference (the vertical shift absorbs mu).
double compare_profiles(const std::function<double(double)>& z1,
                        const std::function<double(double)>& z2, double lo,
                        double hi, int n);

double compare_profiles(const Profile& p1, const Profile& p2, double lo,
                        double hi, int n);

} // namespace lws
