#pragma once

#include <string>
#include <vector>

#include "lws/errors.hpp"
#include "lws/rotational.hpp"

namespace lws {

enum class Branch { Plus, Minus };

const char* to_string(Branch b);

/// One instance of the generating-curve problem for aH + bK = c.
///
/// lambda is the integration constant of the first integral; branch selects
/// the +/- root of the phi-quadratic; mu is the translation constant:
/// vertical shift z(u_start) for the timelike/lightlike axes, the initial
/// height z(u_start) for spacelike-axis integration, and the u-translation
/// u0 in the spacelike closed forms.
struct WeingartenProblem {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    int epsilon = 1; // +1 spacelike surface, -1 timelike surface
    AxisKind axis = AxisKind::TimelikeAxis;
    double lambda = 0.0;
    Branch branch = Branch::Plus;
    double mu = 0.0;

    /// Throws DomainViolation unless (a,b) != (0,0), epsilon is +-1, and
    /// epsilon == -1 when axis == SpacelikeAxisII.
    void validate() const;
};

/// Left-hand side of the first integral, arranged so solutions satisfy
/// value == lambda:
///   timelike axis  : eps*a*u*z' / sqrt(eps(1-z'^2)) + b/(1-z'^2) + c*u^2
///   spacelike I    : eps*a*z   / sqrt(eps(1-z'^2)) + b/(1-z'^2) + c*z^2
///   spacelike II   : -a*z / sqrt(1+z'^2) + b/(1+z'^2) - c*z^2
///   lightlike      : (a/4)*u/sqrt(eps*z') - b/(8 z') - (c/2)*u^2
/// Throws DomainViolation when the radicand precondition fails.
double first_integral_lhs(const WeingartenProblem& p, double u, double z,
                          double zprime);

/// Root of the phi-quadratic at s (s is u for the timelike/lightlike axes,
/// z for the spacelike axes). For the lightlike axis the returned value is
/// psi = sqrt(eps*z'). b == 0 degenerates the timelike/spacelike quadratics
/// to a linear equation (single root, branch ignored); for the lightlike
/// axis with c == 0 and lambda == 0 the quadratic loses its leading term
/// and the surviving root is b*eps/(2 a u).
/// Throws NegativeDiscriminant / ZeroDenominator.
double solve_phi(const WeingartenProblem& p, double s);

/// d(phi)/ds of the solve_phi root; feeds the analytic z'' of profiles.
double solve_phi_derivative(const WeingartenProblem& p, double s);

/// Recover z' from phi:
///   timelike    : z' = phi / sqrt(eps + phi^2)        (needs eps+phi^2 > 0)
///   spacelike I : z'^2 = 1 - eps/phi^2  (eps=+1 needs phi>=1, -1 needs phi>0)
///   spacelike II: z'^2 = 1/phi^2 - 1    (needs 0 < phi <= 1)
///   lightlike   : z' = eps*phi^2        (phi = sqrt(eps z') >= 0)
/// For the spacelike axes only z'^2 is determined; the nonnegative root is
/// returned and the integrator's sign policy picks the sign.
double invert_phi(AxisKind axis, int epsilon, double phi);

enum class StopReason {
    ReachedEnd,
    DiscriminantZero,
    CausalDegeneration,
    AxisContact,    // z -> 0 (spacelike axes)
    ZeroDenominator, // c u^2 + 2 lambda -> 0 (lightlike axis)
    Verticality      // |z'| -> infinity (graph parametrization fails)
};

const char* to_string(StopReason r);

struct IntegrationOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int zprime_sign = 1; // initial z' sign for the spacelike axes
};

struct CurveSample {
    double u, z, zprime;
};

/// Sampled generating profile together with the problem it solves and the
/// interval actually integrated. Immutable after construction.
struct GeneratingCurve {
    std::vector<CurveSample> samples;
    WeingartenProblem problem;
    double valid_lo = 0.0, valid_hi = 0.0;
    StopReason stop = StopReason::ReachedEnd;

    /// First-integral value at one sample (== lambda up to integration error).
    double first_integral_at(const CurveSample& s) const;

    /// Profile evaluator over the validity interval. z between samples is
    /// cubic-Hermite interpolated (O(h^4)); z' and z'' are recomputed
    /// analytically from the first integral, never differenced.
    Profile profile() const;
};

/// Integrate the generating-curve ODE from u_start towards u_end, sampling
/// at n_samples uniform points. Halts early with a reported stop reason when
/// the discriminant crosses zero, |z'^2 - 1| <= 1e-8 (causal degeneration),
/// z -> 0 on the spacelike axes, or the lightlike denominator vanishes.
/// Throws ImmediateDomainViolation when the problem is invalid at u_start.
GeneratingCurve integrate_profile(const WeingartenProblem& p, double u_start,
                                  double u_end, int n_samples,
                                  const IntegrationOptions& opts = {});

enum class ClosedFormFamily {
    TimelikeAxis_LambdaEqB,
    TimelikeAxis_ZeroDiscriminant,
    SpacelikeI_LambdaZero,
    SpacelikeI_ZeroDiscriminant,
    SpacelikeII_LambdaZero,
    SpacelikeII_ZeroDiscriminant,
    Lightlike_LambdaZero,
    Lightlike_ZeroDiscriminant
};

const char* to_string(ClosedFormFamily f);

struct ClosedFormCase {
    ClosedFormFamily family;
    WeingartenProblem problem;
};

/// Constant C of the family's closed form (for the problem's branch).
double closed_form_constant(const ClosedFormCase& c);

/// Analytic (z, z', z'') evaluator of the family's closed form on
/// [u_min, u_max]. Throws InapplicableCase when the family's applicability
/// predicate fails and InvalidDomain when the interval leaves the formula's
/// domain.
///
/// Lightlike_ZeroDiscriminant note: under the case constraints a^2 = 4bc*eps
/// and C^2 = -8b*eps*lambda the arctanh coefficient c*C^2 + 2a^2*lambda
/// vanishes identically, so the solution reduces to the exact rational form
///   z = mu - a*(eps*a*u + B*C) / (16 c (c u^2 + 2 lambda)),  B = branch sign.
/// That reduction is what this evaluator implements; the literal printed
/// forms are available below for adjudication.
Profile closed_form(const ClosedFormCase& c, double u_min, double u_max);

enum class ClassificationItem { Timelike, SpacelikeA, SpacelikeB, Lightlike48 };

/// The zero-discriminant classification formulas circulate with nested +-
/// signs whose admissible combinations are not individually pinned down.
/// ClassificationSigns makes every choice explicit so each variant can be
/// checked against the ODE. Members an item does not use are ignored.
struct ClassificationSigns {
    int outer = 1;       // sign in front of C/a (items 1: whole radical)
    int radical = 1;     // sign in front of the square root
    int middle = 1;      // sign inside the radicand, on (u +- mu)^2
    int translation = 1; // sign of the mu translation
};

/// Literal evaluator of the classification's z(u) for the selected item and
/// sign assignment. Lightlike48 is the 1/48-prefactor variant of the
/// lightlike zero-discriminant solution with C = 2 sqrt(b eps (lambda - b));
/// it does not solve the ODE (closed_form carries the verified reduction)
/// and ships for the adjudication comparison.
Profile classification_profile(ClassificationItem item,
                               const WeingartenProblem& p,
                               const ClassificationSigns& signs, double u_min,
                               double u_max);

/// Literal evaluator of the 1/64-prefactor arctanh variant of the lightlike
/// zero-discriminant solution (C = sqrt(-8 b eps lambda)); pm_sign resolves
/// its coupled -+/+- pair. Shipped for the adjudication comparison.
Profile lightlike_rational_arctanh_profile(const WeingartenProblem& p,
                                           int pm_sign, double u_min,
                                           double u_max);

/// True when the sign assignment makes the literal formula an actual
/// solution: max |first_integral_lhs - lambda| <= tol*(1+|lambda|)
/// over n samples of [u_min, u_max] (false as well when the formula is not
/// evaluable there).
bool classification_assignment_valid(ClassificationItem item,
                                     const WeingartenProblem& p,
                                     const ClassificationSigns& signs,
                                     double u_min, double u_max, int n = 41,
                                     double tol = 1e-6);

} // namespace lws
