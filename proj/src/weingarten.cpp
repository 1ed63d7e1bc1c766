#include "lws/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lws/ad.hpp"
#include "lws/ode.hpp"

namespace lws {

using ad::Taylor1;

const char* to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::ReachedEnd: return "reached-end";
        case StopReason::DiscriminantZero: return "discriminant-zero";
        case StopReason::CausalDegeneration: return "causal-degeneration";
        case StopReason::AxisContact: return "axis-contact";
        case StopReason::ZeroDenominator: return "zero-denominator";
        case StopReason::Verticality: return "verticality";
    }
    return "unknown";
}

const char* to_string(ClosedFormFamily f) {
    switch (f) {
        case ClosedFormFamily::TimelikeAxis_LambdaEqB: return "timelike-lambda-eq-b";
        case ClosedFormFamily::TimelikeAxis_ZeroDiscriminant: return "timelike-zero-discriminant";
        case ClosedFormFamily::SpacelikeI_LambdaZero: return "spacelike-i-lambda-zero";
        case ClosedFormFamily::SpacelikeI_ZeroDiscriminant: return "spacelike-i-zero-discriminant";
        case ClosedFormFamily::SpacelikeII_LambdaZero: return "spacelike-ii-lambda-zero";
        case ClosedFormFamily::SpacelikeII_ZeroDiscriminant: return "spacelike-ii-zero-discriminant";
        case ClosedFormFamily::Lightlike_LambdaZero: return "lightlike-lambda-zero";
        case ClosedFormFamily::Lightlike_ZeroDiscriminant: return "lightlike-zero-discriminant";
    }
    return "unknown";
}

void WeingartenProblem::validate() const {
    if (a == 0.0 && b == 0.0)
        throw DomainViolation("(a,b) must not both vanish");
    if (epsilon != 1 && epsilon != -1)
        throw DomainViolation("epsilon must be +1 or -1");
    if (axis == AxisKind::SpacelikeAxisII && epsilon != -1)
        throw DomainViolation("spacelike-ii surfaces are always timelike (epsilon=-1)");
}

double first_integral_lhs(const WeingartenProblem& p, double u, double z,
                          double zprime) {
    const double eps = p.epsilon;
    switch (p.axis) {
        case AxisKind::TimelikeAxis: {
            const double q = eps * (1.0 - zprime * zprime);
            if (q <= 0.0)
                throw DomainViolation("eps*(1 - z'^2) must be positive");
            return eps * p.a * u * zprime / std::sqrt(q) +
                   p.b / (1.0 - zprime * zprime) + p.c * u * u;
        }
        case AxisKind::SpacelikeAxisI: {
            const double q = eps * (1.0 - zprime * zprime);
            if (q <= 0.0)
                throw DomainViolation("eps*(1 - z'^2) must be positive");
            return eps * p.a * z / std::sqrt(q) +
                   p.b / (1.0 - zprime * zprime) + p.c * z * z;
        }
        case AxisKind::SpacelikeAxisII: {
            const double q = 1.0 + zprime * zprime;
            return -p.a * z / std::sqrt(q) + p.b / q - p.c * z * z;
        }
        case AxisKind::LightlikeAxis: {
            const double q = eps * zprime;
            if (q <= 0.0) throw DomainViolation("eps*z' must be positive");
            return 0.25 * p.a * u / std::sqrt(q) - p.b / (8.0 * zprime) -
                   0.5 * p.c * u * u;
        }
    }
    throw DomainViolation("unknown axis kind");
}

namespace {

double sgn_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

struct PhiEval {
    bool ok = false;
    double phi = 0.0;
    double dphi = 0.0;
    StopReason why = StopReason::ReachedEnd;
};

// Root of the phi-quadratic and its s-derivative, without throwing.
PhiEval eval_phi(const WeingartenProblem& p, double s) {
    PhiEval r;
    const double eps = p.epsilon;
    const double sg = p.branch == Branch::Plus ? 1.0 : -1.0;
    switch (p.axis) {
        case AxisKind::TimelikeAxis: {
            if (p.b == 0.0) {
                if (s == 0.0 || p.a == 0.0) {
                    r.why = StopReason::ZeroDenominator;
                    return r;
                }
                r.phi = eps * (p.lambda - p.c * s * s) / (p.a * s);
                r.dphi = -eps * (p.c * s * s + p.lambda) / (p.a * s * s);
                r.ok = true;
                return r;
            }
            const double D = p.a * p.a - 4.0 * p.b * p.c * eps;
            const double disc = D * s * s + 4.0 * p.b * eps * (p.lambda - p.b);
            if (disc < 0.0) {
                r.why = StopReason::DiscriminantZero;
                return r;
            }
            const double root = std::sqrt(disc);
            r.phi = (-p.a * s + sg * root) / (2.0 * p.b);
            r.dphi = (-p.a + (D == 0.0 ? 0.0 : sg * D * s / root)) / (2.0 * p.b);
            r.ok = true;
            return r;
        }
        case AxisKind::SpacelikeAxisI: {
            if (p.b == 0.0) {
                if (s == 0.0 || p.a == 0.0) {
                    r.why = StopReason::ZeroDenominator;
                    return r;
                }
                r.phi = eps * (p.lambda - p.c * s * s) / (p.a * s);
                r.dphi = -eps * (p.c * s * s + p.lambda) / (p.a * s * s);
                r.ok = true;
                return r;
            }
            const double D = p.a * p.a - 4.0 * p.b * p.c * eps;
            const double disc = D * s * s + 4.0 * p.b * eps * p.lambda;
            if (disc < 0.0) {
                r.why = StopReason::DiscriminantZero;
                return r;
            }
            const double root = std::sqrt(disc);
            r.phi = (-p.a * s + sg * root) / (2.0 * p.b);
            r.dphi = (-p.a + (D == 0.0 ? 0.0 : sg * D * s / root)) / (2.0 * p.b);
            r.ok = true;
            return r;
        }
        case AxisKind::SpacelikeAxisII: {
            if (p.b == 0.0) {
                if (s == 0.0 || p.a == 0.0) {
                    r.why = StopReason::ZeroDenominator;
                    return r;
                }
                r.phi = -(p.c * s * s + p.lambda) / (p.a * s);
                r.dphi = (p.lambda - p.c * s * s) / (p.a * s * s);
                r.ok = true;
                return r;
            }
            const double D2 = p.a * p.a + 4.0 * p.b * p.c;
            const double disc = D2 * s * s + 4.0 * p.b * p.lambda;
            if (disc < 0.0) {
                r.why = StopReason::DiscriminantZero;
                return r;
            }
            const double root = std::sqrt(disc);
            r.phi = (p.a * s + sg * root) / (2.0 * p.b);
            r.dphi = (p.a + (D2 == 0.0 ? 0.0 : sg * D2 * s / root)) / (2.0 * p.b);
            r.ok = true;
            return r;
        }
        case AxisKind::LightlikeAxis: {
            if (p.c == 0.0 && p.lambda == 0.0) {
                // Quadratic loses its leading term: -2*a*u*psi + b*eps = 0.
                if (p.a == 0.0 || s == 0.0 || p.b == 0.0) {
                    r.why = StopReason::ZeroDenominator;
                    return r;
                }
                r.phi = p.b * eps / (2.0 * p.a * s);
                r.dphi = -p.b * eps / (2.0 * p.a * s * s);
                r.ok = true;
                return r;
            }
            const double q = p.c * s * s + 2.0 * p.lambda;
            const double qscale =
                std::fmax(1.0, std::fabs(p.c) * s * s + 2.0 * std::fabs(p.lambda));
            if (std::fabs(q) <= 1e-12 * qscale) {
                r.why = StopReason::ZeroDenominator;
                return r;
            }
            const double D = p.a * p.a - 4.0 * p.b * p.c * eps;
            const double disc = D * s * s - 8.0 * p.b * eps * p.lambda;
            if (disc < 0.0) {
                r.why = StopReason::DiscriminantZero;
                return r;
            }
            const double root = std::sqrt(disc);
            const double den = 4.0 * eps * q;
            const double num = p.a * eps * s + sg * root;
            r.phi = num / den;
            const double dnum = p.a * eps + (D == 0.0 ? 0.0 : sg * D * s / root);
            r.dphi = (dnum * den - num * 8.0 * eps * p.c * s) / (den * den);
            r.ok = true;
            return r;
        }
    }
    r.why = StopReason::ReachedEnd;
    return r;
}

[[noreturn]] void throw_phi_error(const PhiEval& r) {
    switch (r.why) {
        case StopReason::DiscriminantZero:
            throw NegativeDiscriminant("phi-quadratic has no real root here");
        case StopReason::ZeroDenominator:
            throw ZeroDenominator("degenerate phi equation (vanishing denominator)");
        default:
            throw DomainViolation("phi equation not solvable here");
    }
}

} // namespace

double solve_phi(const WeingartenProblem& p, double s) {
    p.validate();
    const PhiEval r = eval_phi(p, s);
    if (!r.ok) throw_phi_error(r);
    return r.phi;
}

double solve_phi_derivative(const WeingartenProblem& p, double s) {
    p.validate();
    const PhiEval r = eval_phi(p, s);
    if (!r.ok) throw_phi_error(r);
    return r.dphi;
}

double invert_phi(AxisKind axis, int epsilon, double phi) {
    const double eps = epsilon;
    switch (axis) {
        case AxisKind::TimelikeAxis: {
            const double q = eps + phi * phi;
            if (q <= 0.0)
                throw DomainViolation("timelike inversion needs eps + phi^2 > 0");
            return phi / std::sqrt(q);
        }
        case AxisKind::SpacelikeAxisI: {
            if (phi <= 0.0)
                throw DomainViolation("spacelike-i inversion needs phi > 0");
            if (epsilon == 1) {
                if (phi < 1.0 - 1e-12)
                    throw DomainViolation("spacelike-i (eps=+1) needs phi >= 1");
                return std::sqrt(std::fmax(0.0, 1.0 - 1.0 / (phi * phi)));
            }
            return std::sqrt(1.0 + 1.0 / (phi * phi));
        }
        case AxisKind::SpacelikeAxisII: {
            if (phi <= 0.0 || phi > 1.0 + 1e-12)
                throw DomainViolation("spacelike-ii inversion needs 0 < phi <= 1");
            return std::sqrt(std::fmax(0.0, 1.0 / (phi * phi) - 1.0));
        }
        case AxisKind::LightlikeAxis: {
            if (phi < 0.0)
                throw DomainViolation("lightlike inversion needs phi = sqrt(eps z') >= 0");
            return eps * phi * phi;
        }
    }
    throw DomainViolation("unknown axis kind");
}

// ---------------------------------------------------------------------------
// integrate_profile
// ---------------------------------------------------------------------------

namespace {

bool graph_axis(AxisKind a) {
    return a == AxisKind::TimelikeAxis || a == AxisKind::LightlikeAxis;
}

// z' for the explicitly-integrable axes (timelike/lightlike), nothrow.
bool explicit_zprime(const WeingartenProblem& p, double u, double* zp,
                     double* zpp = nullptr) {
    const PhiEval r = eval_phi(p, u);
    if (!r.ok) return false;
    const double eps = p.epsilon;
    if (p.axis == AxisKind::TimelikeAxis) {
        const double q = eps + r.phi * r.phi;
        if (q <= 0.0) return false;
        *zp = r.phi / std::sqrt(q);
        if (zpp) *zpp = r.dphi * eps / (q * std::sqrt(q));
        return true;
    }
    if (r.phi <= 0.0) return false; // psi = sqrt(eps z') must be positive
    *zp = eps * r.phi * r.phi;
    if (zpp) *zpp = 2.0 * eps * r.phi * r.dphi;
    return true;
}

struct SpacelikeRhs {
    const WeingartenProblem& p;
    bool operator()(double /*u*/, const OdeState& y, OdeState& dy) const {
        const double z = y[0];
        if (z == 0.0) return false;
        const PhiEval r = eval_phi(p, z);
        if (!r.ok || r.phi == 0.0 || !std::isfinite(r.dphi)) return false;
        const double phi3 = r.phi * r.phi * r.phi;
        const double zpp = p.axis == AxisKind::SpacelikeAxisI
                               ? p.epsilon * r.dphi / phi3
                               : -r.dphi / phi3;
        if (!std::isfinite(zpp)) return false;
        dy[0] = y[1];
        dy[1] = zpp;
        return true;
    }
};

// Classify why integration stopped at (u, y). The stop point itself is the
// last valid state, so hard domain failures are probed slightly beyond it in
// the direction of travel; soft conditions are tested at the stop point with
// loose thresholds (several causes can coincide, e.g. z -> 0 forces z' to
// blow up on the spacelike axes; the first matching label wins).
StopReason probe_stop_reason(const WeingartenProblem& p, double u,
                             const OdeState& y, double dir) {
    const double eps = p.epsilon;
    if (graph_axis(p.axis)) {
        const double du = dir * std::fmax(1e-9, 1e-9 * std::fabs(u));
        const PhiEval beyond = eval_phi(p, u + du);
        if (!beyond.ok) return beyond.why;
        if (p.axis == AxisKind::LightlikeAxis) {
            const double q = p.c * u * u + 2.0 * p.lambda;
            const double qscale =
                std::fmax(1.0, std::fabs(p.c) * u * u + 2.0 * std::fabs(p.lambda));
            if (std::fabs(q) <= 1e-4 * qscale) return StopReason::ZeroDenominator;
            const PhiEval r = eval_phi(p, u);
            if (r.ok && r.phi <= 1e-4) return StopReason::CausalDegeneration;
            return StopReason::Verticality;
        }
        const PhiEval r = eval_phi(p, u);
        if (r.ok) {
            const double q = eps + r.phi * r.phi;
            if (q > 0.0) {
                const double zp = r.phi / std::sqrt(q);
                if (std::fabs(zp * zp - 1.0) <= 1e-4)
                    return StopReason::CausalDegeneration;
            }
        }
        return StopReason::Verticality;
    }
    // Spacelike axes: state is (z, z'); the domain boundary lives in z.
    const double z = y[0], zp = y[1];
    if (std::fabs(z) <= 1e-2 * std::fmax(1.0, std::fabs(p.mu)))
        return StopReason::AxisContact;
    const double dz =
        (zp >= 0.0 ? dir : -dir) * std::fmax(1e-9, 1e-9 * std::fabs(z));
    const PhiEval beyond = eval_phi(p, z + dz);
    if (!beyond.ok) return beyond.why;
    if (p.axis == AxisKind::SpacelikeAxisI && std::fabs(zp * zp - 1.0) <= 1e-4)
        return StopReason::CausalDegeneration;
    return StopReason::Verticality;
}

} // namespace

GeneratingCurve integrate_profile(const WeingartenProblem& p, double u_start,
                                  double u_end, int n_samples,
                                  const IntegrationOptions& opts) {
    p.validate();
    if (n_samples < 2) throw InvalidDomain("need at least two samples");
    if (u_start == u_end) throw InvalidDomain("empty integration interval");
    const double lo = std::fmin(u_start, u_end), hi = std::fmax(u_start, u_end);
    if (lo <= 0.0 && hi >= 0.0)
        throw InvalidDomain("integration interval must exclude u=0");
    if (opts.zprime_sign != 1 && opts.zprime_sign != -1)
        throw InvalidDomain("zprime_sign must be +1 or -1");

    GeneratingCurve curve;
    curve.problem = p;

    std::vector<double> targets(n_samples);
    for (int i = 0; i < n_samples; ++i)
        targets[i] = u_start + (u_end - u_start) * i / (n_samples - 1);
    targets.back() = u_end;

    OdeOptions ode_opts;
    ode_opts.abs_tol = opts.abs_tol;
    ode_opts.rel_tol = opts.rel_tol;
    ode_opts.max_step = std::fabs(u_end - u_start) / 50.0;

    std::function<bool(double, const OdeState&, OdeState&)> rhs;
    std::function<bool(double, const OdeState&)> valid;
    std::function<double(double, const OdeState&)> zprime_of;
    OdeState y0{};
    int dim = 1;

    if (graph_axis(p.axis)) {
        y0[0] = p.mu;
        rhs = [p](double u, const OdeState&, OdeState& dy) {
            double zp;
            if (!explicit_zprime(p, u, &zp)) return false;
            dy[0] = zp;
            dy[1] = 0.0;
            return true;
        };
        if (p.axis == AxisKind::TimelikeAxis) {
            valid = [p](double u, const OdeState&) {
                double zp;
                if (!explicit_zprime(p, u, &zp)) return false;
                return std::fabs(zp * zp - 1.0) > 1e-8;
            };
        } else {
            valid = [p](double u, const OdeState&) {
                const PhiEval r = eval_phi(p, u);
                return r.ok && r.phi >= 1e-6; // |z'| >= 1e-12, keeps sign of W
            };
        }
        zprime_of = [p](double u, const OdeState&) {
            double zp = 0.0;
            explicit_zprime(p, u, &zp);
            return zp;
        };
    } else {
        dim = 2;
        const double z0 = p.mu;
        if (z0 == 0.0)
            throw ImmediateDomainViolation("initial height z(u_start)=mu must be nonzero");
        const PhiEval r0 = eval_phi(p, z0);
        if (!r0.ok)
            throw ImmediateDomainViolation(
                std::string("phi not solvable at the start: ") + to_string(r0.why));
        double zp0;
        try {
            zp0 = invert_phi(p.axis, p.epsilon, r0.phi);
        } catch (const DomainViolation& e) {
            throw ImmediateDomainViolation(e.what());
        }
        y0[0] = z0;
        y0[1] = opts.zprime_sign * zp0;
        rhs = SpacelikeRhs{p};
        const double axis_tol = 1e-9 * std::fmax(1.0, std::fabs(z0));
        if (p.axis == AxisKind::SpacelikeAxisI) {
            valid = [axis_tol](double, const OdeState& y) {
                return std::fabs(y[0]) > axis_tol &&
                       std::fabs(y[1] * y[1] - 1.0) > 1e-8;
            };
        } else {
            valid = [axis_tol](double, const OdeState& y) {
                return std::fabs(y[0]) > axis_tol && std::fabs(y[1]) < 1e9;
            };
        }
        zprime_of = [](double, const OdeState& y) { return y[1]; };
    }

    const double dir = u_end > u_start ? 1.0 : -1.0;
    {
        OdeState dy{};
        if (!rhs(u_start, y0, dy) || !valid(u_start, y0)) {
            throw ImmediateDomainViolation(
                std::string("problem invalid at u_start: ") +
                to_string(probe_stop_reason(p, u_start, y0, dir)));
        }
    }

    const OdeStatus st = integrate_ode(
        rhs, dim, u_start, y0, targets, ode_opts, valid,
        [&](double u, const OdeState& y) {
            curve.samples.push_back({u, y[0], zprime_of(u, y)});
        });

    if (!st.reached_end) {
        // Keep the furthest valid point as a final sample, unless the slope
        // is blowing up there (a near-singular endpoint would poison the
        // Hermite interpolation of the last segment).
        if (!curve.samples.empty() &&
            std::fabs(st.u_stop - curve.samples.back().u) >
                1e-12 * std::fmax(1.0, std::fabs(st.u_stop))) {
            const double zp_stop = zprime_of(st.u_stop, st.y_stop);
            if (std::fabs(zp_stop) <=
                3.0 * (1.0 + std::fabs(curve.samples.back().zprime))) {
                curve.samples.push_back({st.u_stop, st.y_stop[0], zp_stop});
            }
        }
        curve.stop = probe_stop_reason(p, st.u_stop, st.y_stop, dir);
    } else {
        curve.stop = StopReason::ReachedEnd;
    }
    if (curve.samples.empty())
        throw ImmediateDomainViolation("no valid samples produced");
    curve.valid_lo = std::fmin(curve.samples.front().u, curve.samples.back().u);
    curve.valid_hi = std::fmax(curve.samples.front().u, curve.samples.back().u);
    return curve;
}

double GeneratingCurve::first_integral_at(const CurveSample& s) const {
    return first_integral_lhs(problem, s.u, s.z, s.zprime);
}

namespace {

// Cubic Hermite value and derivative on one segment.
void hermite_eval(const CurveSample& A, const CurveSample& B, double u,
                  double* z, double* zp) {
    const double h = B.u - A.u;
    const double t = (u - A.u) / h;
    const double t2 = t * t, t3 = t2 * t;
    *z = (2 * t3 - 3 * t2 + 1) * A.z + (t3 - 2 * t2 + t) * h * A.zprime +
         (-2 * t3 + 3 * t2) * B.z + (t3 - t2) * h * B.zprime;
    *zp = ((6 * t2 - 6 * t) * A.z + (3 * t2 - 4 * t + 1) * h * A.zprime +
           (-6 * t2 + 6 * t) * B.z + (3 * t2 - 2 * t) * h * B.zprime) /
          h;
}

} // namespace

Profile GeneratingCurve::profile() const {
    if (samples.size() < 2)
        throw InvalidDomain("generating curve has fewer than two samples");
    auto sorted = samples;
    std::sort(sorted.begin(), sorted.end(),
              [](const CurveSample& x, const CurveSample& y) { return x.u < y.u; });
    const WeingartenProblem pr = problem;

    Profile out;
    out.u_min = sorted.front().u;
    out.u_max = sorted.back().u;
    out.eval = [sorted, pr](double u) -> ProfileJet {
        if (u < sorted.front().u - 1e-12 || u > sorted.back().u + 1e-12)
            throw InvalidDomain("u outside the curve's validity interval");
        auto it = std::upper_bound(
            sorted.begin(), sorted.end(), u,
            [](double x, const CurveSample& s) { return x < s.u; });
        std::size_t i = it == sorted.begin() ? 0 : (it - sorted.begin()) - 1;
        if (i + 1 >= sorted.size()) i = sorted.size() - 2;
        double zh, zph;
        hermite_eval(sorted[i], sorted[i + 1], u, &zh, &zph);

        ProfileJet j{};
        j.z = zh;
        if (graph_axis(pr.axis)) {
            const PhiEval r = eval_phi(pr, u);
            if (!r.ok) throw_phi_error(r);
            const double eps = pr.epsilon;
            if (pr.axis == AxisKind::TimelikeAxis) {
                const double q = eps + r.phi * r.phi;
                if (q <= 0.0) throw DomainViolation("eps + phi^2 <= 0");
                j.zp = r.phi / std::sqrt(q);
                j.zpp = r.dphi * eps / (q * std::sqrt(q));
            } else {
                j.zp = eps * r.phi * r.phi;
                j.zpp = 2.0 * eps * r.phi * r.dphi;
            }
        } else {
            // z' magnitude from the first integral at the interpolated z,
            // sign from the Hermite slope; z'' analytic from phi'(z).
            const PhiEval r = eval_phi(pr, zh);
            if (!r.ok) throw_phi_error(r);
            const double phi3 = r.phi * r.phi * r.phi;
            double zp2;
            if (pr.axis == AxisKind::SpacelikeAxisI) {
                zp2 = 1.0 - pr.epsilon / (r.phi * r.phi);
                j.zpp = pr.epsilon * r.dphi / phi3;
            } else {
                zp2 = 1.0 / (r.phi * r.phi) - 1.0;
                j.zpp = -r.dphi / phi3;
            }
            j.zp = sgn_of(zph) * std::sqrt(std::fmax(0.0, zp2));
        }
        return j;
    };
    return out;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

namespace {

constexpr double kEqTol = 1e-9;

bool nearly(double x, double y, double scale) {
    return std::fabs(x - y) <= kEqTol * std::fmax(1.0, scale);
}

Profile profile_from_taylor(std::function<Taylor1(Taylor1)> f, double lo,
                            double hi) {
    Profile out;
    out.u_min = lo;
    out.u_max = hi;
    out.eval = [f](double u) {
        const Taylor1 t = f(Taylor1::variable(u));
        return ProfileJet{t.v, t.d, t.dd};
    };
    return out;
}

void require_interval(double lo, double hi, bool exclude_zero) {
    if (!(lo < hi)) throw InvalidDomain("empty interval");
    if (exclude_zero && lo <= 0.0 && hi >= 0.0)
        throw InvalidDomain("interval must exclude u=0");
}

// Deterministic scan guard: predicate must hold on a uniform 129-point scan.
template <class F>
void require_on_interval(double lo, double hi, F pred, const char* what) {
    for (int i = 0; i <= 128; ++i) {
        const double u = lo + (hi - lo) * i / 128.0;
        if (!pred(u)) throw InvalidDomain(what);
    }
}

double branch_sign(const WeingartenProblem& p) {
    return p.branch == Branch::Plus ? 1.0 : -1.0;
}

} // namespace

double closed_form_constant(const ClosedFormCase& cf) {
    const WeingartenProblem& p = cf.problem;
    p.validate();
    const double eps = p.epsilon;
    const double sg = branch_sign(p);
    switch (cf.family) {
        case ClosedFormFamily::TimelikeAxis_LambdaEqB:
        case ClosedFormFamily::SpacelikeI_LambdaZero: {
            const double D = p.a * p.a - 4.0 * p.b * p.c * eps;
            if (p.b == 0.0) throw InapplicableCase("needs b != 0");
            if (D < -kEqTol * (p.a * p.a + 1.0))
                throw InapplicableCase("a^2 - 4bc*eps must be nonnegative");
            return (-p.a + sg * std::sqrt(std::fmax(D, 0.0))) / (2.0 * p.b);
        }
        case ClosedFormFamily::TimelikeAxis_ZeroDiscriminant: {
            const double arg = p.b * eps * (p.lambda - p.b);
            if (arg < -kEqTol) throw InapplicableCase("b*eps*(lambda-b) must be >= 0");
            return 2.0 * std::sqrt(std::fmax(arg, 0.0));
        }
        case ClosedFormFamily::SpacelikeI_ZeroDiscriminant: {
            const double arg = p.b * eps * p.lambda;
            if (arg < -kEqTol) throw InapplicableCase("b*eps*lambda must be >= 0");
            return 2.0 * std::sqrt(std::fmax(arg, 0.0));
        }
        case ClosedFormFamily::SpacelikeII_LambdaZero: {
            const double D2 = p.a * p.a + 4.0 * p.b * p.c;
            if (p.b == 0.0) throw InapplicableCase("needs b != 0");
            if (D2 < -kEqTol * (p.a * p.a + 1.0))
                throw InapplicableCase("a^2 + 4bc must be nonnegative");
            return (p.a + sg * std::sqrt(std::fmax(D2, 0.0))) / (2.0 * p.b);
        }
        case ClosedFormFamily::SpacelikeII_ZeroDiscriminant: {
            const double arg = p.b * p.lambda;
            if (arg < -kEqTol) throw InapplicableCase("b*lambda must be >= 0");
            return 2.0 * std::sqrt(std::fmax(arg, 0.0));
        }
        case ClosedFormFamily::Lightlike_LambdaZero: {
            if (p.c == 0.0)
                throw InapplicableCase("lightlike lambda=0 closed form needs c != 0");
            const double D = p.a * p.a - 4.0 * p.b * p.c * eps;
            if (D < -kEqTol * (p.a * p.a + 1.0))
                throw InapplicableCase("a^2 - 4bc*eps must be nonnegative");
            return (p.a + sg * eps * std::sqrt(std::fmax(D, 0.0))) / (4.0 * p.c);
        }
        case ClosedFormFamily::Lightlike_ZeroDiscriminant: {
            const double arg = -8.0 * p.b * eps * p.lambda;
            if (arg <= 0.0) throw InapplicableCase("-8 b eps lambda must be positive");
            return std::sqrt(arg);
        }
    }
    throw InapplicableCase("unknown closed-form family");
}

Profile closed_form(const ClosedFormCase& cf, double u_min, double u_max) {
    const WeingartenProblem p = cf.problem;
    p.validate();
    const double eps = p.epsilon;
    const double a = p.a, b = p.b, c = p.c, lam = p.lambda, mu = p.mu;
    require_interval(u_min, u_max, true);

    switch (cf.family) {
        case ClosedFormFamily::TimelikeAxis_LambdaEqB: {
            if (p.axis != AxisKind::TimelikeAxis)
                throw InapplicableCase("family is for the timelike axis");
            if (!nearly(lam, b, std::fabs(b)))
                throw InapplicableCase("needs lambda == b");
            const double C = closed_form_constant(cf);
            if (std::fabs(C) < 1e-14)
                throw InapplicableCase("C = 0 (plane z = const, not this family)");
            require_on_interval(
                u_min, u_max,
                [&](double u) { return eps + C * C * u * u > 1e-14; },
                "eps + C^2 u^2 must be positive on the interval");
            return profile_from_taylor(
                [C, eps, mu](Taylor1 u) {
                    return ad::sqrt(C * C * (u * u) + eps) / C + mu;
                },
                u_min, u_max);
        }
        case ClosedFormFamily::TimelikeAxis_ZeroDiscriminant: {
            if (p.axis != AxisKind::TimelikeAxis)
                throw InapplicableCase("family is for the timelike axis");
            const double D = a * a - 4.0 * b * c * eps;
            if (!nearly(D, 0.0, a * a + std::fabs(4 * b * c)))
                throw InapplicableCase("needs a^2 - 4bc*eps == 0");
            if (a == 0.0 || b == 0.0)
                throw InapplicableCase("needs a != 0 and b != 0");
            const double C = closed_form_constant(cf);
            const double S = -sgn_of(a * b);
            const double T = p.branch == Branch::Plus ? -1.0 : 1.0;
            const double R0 = 4.0 * eps * b * b / (a * a);
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double w = C / a + T * u;
                    return R0 + w * w > 1e-14;
                },
                "radicand must stay positive on the interval");
            return profile_from_taylor(
                [C, a, S, T, R0, mu](Taylor1 u) {
                    const Taylor1 w = T * u + C / a;
                    return S * ad::sqrt(w * w + R0) + mu;
                },
                u_min, u_max);
        }
        case ClosedFormFamily::SpacelikeI_LambdaZero: {
            if (p.axis != AxisKind::SpacelikeAxisI)
                throw InapplicableCase("family is for the spacelike axis, case I");
            if (!nearly(lam, 0.0, 1.0)) throw InapplicableCase("needs lambda == 0");
            const double C = closed_form_constant(cf);
            if (std::fabs(C) < 1e-14) throw InapplicableCase("C must be nonzero");
            const double s_out = sgn_of(C); // phi = C z > 0
            const double u0 = mu;
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double w = u - u0;
                    return eps / (C * C) + w * w > 1e-14;
                },
                "radicand must stay positive on the interval");
            return profile_from_taylor(
                [C, eps, s_out, u0](Taylor1 u) {
                    const Taylor1 w = u - u0;
                    return s_out * ad::sqrt(w * w + eps / (C * C));
                },
                u_min, u_max);
        }
        case ClosedFormFamily::SpacelikeI_ZeroDiscriminant: {
            if (p.axis != AxisKind::SpacelikeAxisI)
                throw InapplicableCase("family is for the spacelike axis, case I");
            const double D = a * a - 4.0 * b * c * eps;
            if (!nearly(D, 0.0, a * a + std::fabs(4 * b * c)))
                throw InapplicableCase("needs a^2 - 4bc*eps == 0");
            if (a == 0.0 || b == 0.0)
                throw InapplicableCase("needs a != 0 and b != 0");
            const double C = closed_form_constant(cf);
            const double B = branch_sign(p);
            const double S = -sgn_of(a * b);
            const double R0 = 4.0 * eps * b * b / (a * a);
            const double u0 = mu;
            auto z_of = [&](double u) {
                const double w = u - u0;
                return B * C / a + S * std::sqrt(R0 + w * w);
            };
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double w = u - u0;
                    return R0 + w * w > 1e-14 && std::fabs(z_of(u)) > 1e-12;
                },
                "radicand must stay positive and z nonzero on the interval");
            return profile_from_taylor(
                [C, a, B, S, R0, u0](Taylor1 u) {
                    const Taylor1 w = u - u0;
                    return S * ad::sqrt(w * w + R0) + B * C / a;
                },
                u_min, u_max);
        }
        case ClosedFormFamily::SpacelikeII_LambdaZero: {
            if (p.axis != AxisKind::SpacelikeAxisII)
                throw InapplicableCase("family is for the spacelike axis, case II");
            if (!nearly(lam, 0.0, 1.0)) throw InapplicableCase("needs lambda == 0");
            const double C = closed_form_constant(cf);
            if (std::fabs(C) < 1e-14) throw InapplicableCase("C must be nonzero");
            const double s_out = sgn_of(C); // phi = C z in (0,1]
            const double u0 = mu;
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double w = u - u0;
                    return 1.0 / (C * C) - w * w > 1e-14;
                },
                "needs (u - u0)^2 < 1/C^2 on the interval");
            return profile_from_taylor(
                [C, s_out, u0](Taylor1 u) {
                    const Taylor1 w = u - u0;
                    return s_out * ad::sqrt(1.0 / (C * C) - w * w);
                },
                u_min, u_max);
        }
        case ClosedFormFamily::SpacelikeII_ZeroDiscriminant: {
            if (p.axis != AxisKind::SpacelikeAxisII)
                throw InapplicableCase("family is for the spacelike axis, case II");
            const double D2 = a * a + 4.0 * b * c;
            if (!nearly(D2, 0.0, a * a + std::fabs(4 * b * c)))
                throw InapplicableCase("needs a^2 + 4bc == 0");
            if (a == 0.0 || b == 0.0)
                throw InapplicableCase("needs a != 0 and b != 0");
            const double C = closed_form_constant(cf);
            const double B = branch_sign(p);
            const double S = sgn_of(a * b);
            const double R0 = 4.0 * b * b / (a * a);
            const double u0 = mu;
            auto z_of = [&](double u) {
                const double w = u - u0;
                return -B * C / a + S * std::sqrt(R0 - w * w);
            };
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double w = u - u0;
                    return R0 - w * w > 1e-14 && std::fabs(z_of(u)) > 1e-12;
                },
                "radicand must stay positive and z nonzero on the interval");
            return profile_from_taylor(
                [C, a, B, S, R0, u0](Taylor1 u) {
                    const Taylor1 w = u - u0;
                    return S * ad::sqrt(R0 - w * w) - B * C / a;
                },
                u_min, u_max);
        }
        case ClosedFormFamily::Lightlike_LambdaZero: {
            if (p.axis != AxisKind::LightlikeAxis)
                throw InapplicableCase("family is for the lightlike axis");
            if (!nearly(lam, 0.0, 1.0)) throw InapplicableCase("needs lambda == 0");
            const double C = closed_form_constant(cf);
            if (std::fabs(C) < 1e-14) throw InapplicableCase("C must be nonzero");
            // psi = C/u > 0 restricts the interval to sign(u) == sign(C).
            if (!((u_min > 0.0 && C > 0.0) || (u_max < 0.0 && C < 0.0)))
                throw InvalidDomain("interval must have sign(u) == sign(C)");
            return profile_from_taylor(
                [C, eps, mu](Taylor1 u) { return -eps * C * C / u + mu; },
                u_min, u_max);
        }
        case ClosedFormFamily::Lightlike_ZeroDiscriminant: {
            if (p.axis != AxisKind::LightlikeAxis)
                throw InapplicableCase("family is for the lightlike axis");
            const double D = a * a - 4.0 * b * c * eps;
            if (!nearly(D, 0.0, a * a + std::fabs(4 * b * c)))
                throw InapplicableCase("needs a^2 - 4bc*eps == 0");
            const double C = closed_form_constant(cf);
            const double B = branch_sign(p);
            if (c == 0.0) {
                // Then a = 0 as well; psi is constant and z is linear.
                if (lam == 0.0) throw InapplicableCase("needs lambda != 0 when c = 0");
                const double psi = B * C / (8.0 * eps * lam);
                if (psi <= 0.0)
                    throw InvalidDomain("psi must be positive (try the other branch)");
                const double slope = eps * psi * psi;
                return profile_from_taylor(
                    [slope, mu](Taylor1 u) { return slope * u + mu; }, u_min,
                    u_max);
            }
            auto psi_of = [&](double u) {
                const double q = c * u * u + 2.0 * lam;
                return (a * eps * u + B * C) / (4.0 * eps * q);
            };
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double q = c * u * u + 2.0 * lam;
                    return std::fabs(q) > 1e-12 && psi_of(u) > 1e-14;
                },
                "psi must stay positive and c u^2 + 2 lambda nonzero");
            // Exact reduction: with a^2 = 4bc*eps and C^2 = -8 b eps lambda the
            // arctanh coefficient c C^2 + 2 a^2 lambda vanishes identically.
            return profile_from_taylor(
                [a, c, lam, eps, B, C, mu](Taylor1 u) {
                    const Taylor1 q = c * (u * u) + 2.0 * lam;
                    return (-a / (16.0 * c)) * ((eps * a) * u + B * C) / q + mu;
                },
                u_min, u_max);
        }
    }
    throw InapplicableCase("unknown closed-form family");
}

// ---------------------------------------------------------------------------
// Literal classification-formula evaluators (adjudication artifacts)
// ---------------------------------------------------------------------------

Profile classification_profile(ClassificationItem item,
                               const WeingartenProblem& p,
                               const ClassificationSigns& signs, double u_min,
                               double u_max) {
    p.validate();
    require_interval(u_min, u_max, true);
    const double eps = p.epsilon;
    const double a = p.a, b = p.b, c = p.c, lam = p.lambda, mu = p.mu;
    if (a == 0.0) throw InapplicableCase("classification formulas divide by a");
    const double so = signs.outer, sr = signs.radical, sm = signs.middle,
                 st = signs.translation;

    switch (item) {
        case ClassificationItem::Timelike: {
            const double arg = b * eps * (lam - b);
            if (arg < 0.0) throw InapplicableCase("b*eps*(lambda-b) must be >= 0");
            const double C = 2.0 * std::sqrt(arg);
            const double R0 = 4.0 * eps * b * b / (a * a);
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double w = C / a + sr * u;
                    return R0 + w * w > 1e-14;
                },
                "radicand must stay positive on the interval");
            return profile_from_taylor(
                [C, a, so, sr, R0, mu](Taylor1 u) {
                    const Taylor1 w = sr * u + C / a;
                    return so * ad::sqrt(w * w + R0) + mu;
                },
                u_min, u_max);
        }
        case ClassificationItem::SpacelikeA: {
            const double arg = b * eps * lam;
            if (arg < 0.0) throw InapplicableCase("b*eps*lambda must be >= 0");
            const double C = 2.0 * std::sqrt(arg);
            const double R0 = 4.0 * eps * b * b / (a * a);
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double w = u + st * mu;
                    return R0 + sm * w * w > 1e-14;
                },
                "radicand must stay positive on the interval");
            return profile_from_taylor(
                [C, a, so, sr, sm, st, R0, mu](Taylor1 u) {
                    const Taylor1 w = u + st * mu;
                    return so * C / a + sr * ad::sqrt(sm * (w * w) + R0);
                },
                u_min, u_max);
        }
        case ClassificationItem::SpacelikeB: {
            const double arg = b * lam;
            if (arg < 0.0) throw InapplicableCase("b*lambda must be >= 0");
            const double C = 2.0 * std::sqrt(arg);
            const double R0 = 4.0 * b * b / (a * a);
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    const double w = u + st * mu;
                    return R0 + sm * w * w > 1e-14;
                },
                "radicand must stay positive on the interval");
            return profile_from_taylor(
                [C, a, sr, sm, st, R0, mu](Taylor1 u) {
                    const Taylor1 w = u + st * mu;
                    return sr * ad::sqrt(sm * (w * w) + R0) - C / a;
                },
                u_min, u_max);
        }
        case ClassificationItem::Lightlike48: {
            const double arg = b * eps * (lam - b);
            if (arg < 0.0) throw InapplicableCase("b*eps*(lambda-b) must be >= 0");
            const double C = 2.0 * std::sqrt(arg);
            if (c == 0.0 || lam == 0.0)
                throw InapplicableCase("the lightlike item needs c != 0 and lambda != 0");
            if (-c / (2.0 * lam) <= 0.0 || -2.0 * c * lam <= 0.0)
                throw InapplicableCase("the lightlike item needs c*lambda < 0");
            const double k = std::sqrt(-c / (2.0 * lam));
            const double amp = eps * (c * C * C + 2.0 * a * a * lam) /
                               std::sqrt(-2.0 * c * lam);
            require_on_interval(
                u_min, u_max,
                [&](double u) {
                    return std::fabs(k * u) < 1.0 &&
                           std::fabs(2.0 * lam + c * u * u) > 1e-12;
                },
                "arctanh argument must stay in (-1,1) and the denominator nonzero");
            return profile_from_taylor(
                [a, c, lam, eps, C, k, amp, mu](Taylor1 u) {
                    const Taylor1 q = c * (u * u) + 2.0 * lam;
                    const Taylor1 rational =
                        ((c * C * C - 2.0 * a * a * lam) * u - 4.0 * a * c * lam) /
                        ((eps * c * lam) * q);
                    return (rational + amp * ad::atanh(k * u)) / 48.0 + mu;
                },
                u_min, u_max);
        }
    }
    throw InapplicableCase("unknown classification item");
}

Profile lightlike_rational_arctanh_profile(const WeingartenProblem& p,
                                           int pm_sign, double u_min,
                                           double u_max) {
    p.validate();
    require_interval(u_min, u_max, true);
    const double eps = p.epsilon;
    const double a = p.a, c = p.c, lam = p.lambda, mu = p.mu;
    const double arg = -8.0 * p.b * eps * lam;
    if (arg <= 0.0) throw InapplicableCase("-8 b eps lambda must be positive");
    const double C = std::sqrt(arg);
    if (c == 0.0 || lam == 0.0)
        throw InapplicableCase("needs c != 0 and lambda != 0");
    if (-c / (2.0 * lam) <= 0.0 || -2.0 * c * c * c * lam * lam * lam <= 0.0)
        throw InapplicableCase("needs c*lambda < 0");
    const double k = std::sqrt(-c / (2.0 * lam));
    const double amp = eps * (c * C * C + 2.0 * a * a * lam) /
                       std::sqrt(-2.0 * std::pow(c, 3) * std::pow(lam, 3));
    const double s = pm_sign >= 0 ? 1.0 : -1.0;
    require_on_interval(
        u_min, u_max,
        [&](double u) {
            return std::fabs(k * u) < 1.0 &&
                   std::fabs(2.0 * lam + c * u * u) > 1e-12;
        },
        "arctanh argument must stay in (-1,1) and the denominator nonzero");
    return profile_from_taylor(
        [a, c, lam, eps, C, k, amp, s, mu](Taylor1 u) {
            const Taylor1 q = c * (u * u) + 2.0 * lam;
            const Taylor1 rational =
                (s * eps * (c * C * C - 2.0 * a * a * lam) * u -
                 s * 4.0 * a * C * lam) /
                ((eps * c * lam) * q);
            return (rational + amp * ad::atanh(k * u)) / 64.0 + mu;
        },
        u_min, u_max);
}

bool classification_assignment_valid(ClassificationItem item,
                                     const WeingartenProblem& p,
                                     const ClassificationSigns& signs,
                                     double u_min, double u_max, int n,
                                     double tol) {
    try {
        const Profile prof = classification_profile(item, p, signs, u_min, u_max);
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const double u = u_min + (u_max - u_min) * i / (n - 1);
            const ProfileJet j = prof.eval(u);
            const double v = first_integral_lhs(p, u, j.z, j.zp);
            worst = std::fmax(worst, std::fabs(v - p.lambda));
        }
        return worst <= tol * (1.0 + std::fabs(p.lambda));
    } catch (const Error&) {
        return false;
    }
}

} // namespace lws
