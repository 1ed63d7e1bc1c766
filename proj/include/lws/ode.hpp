#pragma once

#include <array>
#include <functional>
#include <vector>

namespace lws {

// Small embedded Runge-Kutta driver (Dormand-Prince 5(4)) for the profile
// ODEs. State dimension is 1 (z) or 2 (z, z'). The right-hand side returns
// false when the point leaves the domain of the formula (discriminant < 0,
// vanishing denominator, ...); the driver then refines towards the boundary
// and stops there.

using OdeState = std::array<double, 2>;

struct OdeOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = 0.0; // required: set by the caller
};

struct OdeStatus {
    bool reached_end = true;
    double u_stop = 0.0; // last u with a valid accepted state
    OdeState y_stop{};
};

/// Integrate y' = f(u,y) from u0 to u1 (either direction), invoking
/// on_sample(u, y) at every u in targets (assumed monotone from u0 towards
/// u1, first target == u0). `valid` is checked after each accepted step;
/// when it fails (or the RHS becomes uncomputable) the driver bisects the
/// last step towards the boundary and reports where it stopped.
OdeStatus integrate_ode(
    const std::function<bool(double, const OdeState&, OdeState&)>& f, int dim,
    double u0, const OdeState& y0, const std::vector<double>& targets,
    const OdeOptions& opts,
    const std::function<bool(double, const OdeState&)>& valid,
    const std::function<void(double, const OdeState&)>& on_sample);

} // namespace lws
