#include "lws/ode.hpp"

#include <cmath>

namespace lws {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// y5 - y4 error weights (stage 2 weight is zero).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

struct StepResult {
    bool rhs_ok = false;
    bool accepted = false;
    OdeState y{};
    double err = 0.0;
};

using Rhs = std::function<bool(double, const OdeState&, OdeState&)>;

StepResult attempt_step(const Rhs& f, int dim, double u, const OdeState& y,
                        const OdeState& k1, double h, const OdeOptions& opts) {
    StepResult r;
    OdeState k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, t{};

    auto lc = [&](std::initializer_list<std::pair<double, const OdeState*>> terms) {
        for (int i = 0; i < dim; ++i) {
            double s = y[i];
            for (const auto& [w, k] : terms) s += h * w * (*k)[i];
            t[i] = s;
        }
    };

    lc({{a21, &k1}});
    if (!f(u + c2 * h, t, k2)) return r;
    lc({{a31, &k1}, {a32, &k2}});
    if (!f(u + c3 * h, t, k3)) return r;
    lc({{a41, &k1}, {a42, &k2}, {a43, &k3}});
    if (!f(u + c4 * h, t, k4)) return r;
    lc({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    if (!f(u + c5 * h, t, k5)) return r;
    lc({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    if (!f(u + h, t, k6)) return r;
    lc({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    if (!f(u + h, t, k7)) return r;
    r.rhs_ok = true;
    r.y = t;

    double err2 = 0.0;
    for (int i = 0; i < dim; ++i) {
        const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                               e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sc =
            opts.abs_tol + opts.rel_tol * std::fmax(std::fabs(y[i]), std::fabs(t[i]));
        err2 += (ei / sc) * (ei / sc);
    }
    r.err = std::sqrt(err2 / dim);
    r.accepted = r.err <= 1.0;
    return r;
}

} // namespace

OdeStatus integrate_ode(const Rhs& f, int dim, double u0, const OdeState& y0,
                        const std::vector<double>& targets,
                        const OdeOptions& opts,
                        const std::function<bool(double, const OdeState&)>& valid,
                        const std::function<void(double, const OdeState&)>& on_sample) {
    OdeStatus status;
    status.u_stop = u0;
    status.y_stop = y0;

    double u = u0;
    OdeState y = y0;
    OdeState k1{};
    if (!f(u, y, k1) || !valid(u, y)) {
        status.reached_end = false;
        return status;
    }

    double h_guess = 0.0;
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        const double target = targets[ti];
        if (ti == 0) {
            on_sample(u, y); // first target coincides with u0
            continue;
        }
        const double dir = target > u ? 1.0 : -1.0;
        if (h_guess == 0.0) h_guess = dir * opts.max_step * 0.1;

        while (dir * (target - u) > 1e-14 * std::fmax(1.0, std::fabs(target))) {
            double h = h_guess;
            if (std::fabs(h) > opts.max_step) h = dir * opts.max_step;
            if (dir * (u + h - target) > 0.0) h = target - u;

            const StepResult r = attempt_step(f, dim, u, y, k1, h, opts);
            const bool good = r.rhs_ok && r.accepted && valid(u + h, r.y);
            if (good) {
                OdeState k1_new{};
                if (!f(u + h, r.y, k1_new)) {
                    // Accepted state sits on the domain boundary; stop here.
                    u += h;
                    y = r.y;
                    status.reached_end = false;
                    status.u_stop = u;
                    status.y_stop = y;
                    return status;
                }
                u += h;
                y = r.y;
                k1 = k1_new;
                const double grow =
                    r.err > 0.0 ? 0.9 * std::pow(r.err, -0.2) : 5.0;
                h_guess = h * std::fmin(5.0, std::fmax(0.2, grow));
                if (std::fabs(h_guess) > opts.max_step) h_guess = dir * opts.max_step;
            } else {
                if (r.rhs_ok && !r.accepted) {
                    const double shrink = 0.9 * std::pow(r.err, -0.2);
                    h_guess = h * std::fmax(0.1, shrink);
                } else {
                    // Domain trouble inside the step: creep towards the
                    // boundary with halved steps.
                    h_guess = 0.5 * h;
                }
                if (std::fabs(h_guess) < 1e-14 * std::fmax(1.0, std::fabs(u))) {
                    status.reached_end = false;
                    status.u_stop = u;
                    status.y_stop = y;
                    return status;
                }
            }
        }
        on_sample(target, y);
        status.u_stop = u;
        status.y_stop = y;
    }
    return status;
}

} // namespace lws
