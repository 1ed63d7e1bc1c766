#pragma once

// Forward-mode automatic differentiation by second-order truncated Taylor
// arithmetic. Taylor1 carries (f, f', f'') in one variable; Taylor2 carries
// value, both first partials and all three second partials in two variables.
// Curvature is derivative-noise-sensitive, so these are the primary route;
// central differences exist only as an independent cross-check.

#include <cmath>

namespace lws::ad {

struct Taylor1 {
    double v = 0.0;  // value
    double d = 0.0;  // first derivative
    double dd = 0.0; // second derivative

    static Taylor1 variable(double x) { return {x, 1.0, 0.0}; }
    static Taylor1 constant(double c) { return {c, 0.0, 0.0}; }
};

inline Taylor1 operator+(const Taylor1& a, const Taylor1& b) {
    return {a.v + b.v, a.d + b.d, a.dd + b.dd};
}
inline Taylor1 operator-(const Taylor1& a, const Taylor1& b) {
    return {a.v - b.v, a.d - b.d, a.dd - b.dd};
}
inline Taylor1 operator-(const Taylor1& a) { return {-a.v, -a.d, -a.dd}; }
inline Taylor1 operator*(const Taylor1& a, const Taylor1& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d,
            a.dd * b.v + 2.0 * a.d * b.d + a.v * b.dd};
}
inline Taylor1 operator+(const Taylor1& a, double c) { return {a.v + c, a.d, a.dd}; }
inline Taylor1 operator+(double c, const Taylor1& a) { return a + c; }
inline Taylor1 operator-(const Taylor1& a, double c) { return {a.v - c, a.d, a.dd}; }
inline Taylor1 operator-(double c, const Taylor1& a) { return {c - a.v, -a.d, -a.dd}; }
inline Taylor1 operator*(const Taylor1& a, double c) { return {a.v * c, a.d * c, a.dd * c}; }
inline Taylor1 operator*(double c, const Taylor1& a) { return a * c; }
inline Taylor1 operator/(const Taylor1& a, double c) { return {a.v / c, a.d / c, a.dd / c}; }

// Composition with a scalar function given f(v), f'(v), f''(v).
inline Taylor1 compose(const Taylor1& g, double f, double fp, double fpp) {
    return {f, fp * g.d, fpp * g.d * g.d + fp * g.dd};
}

inline Taylor1 operator/(const Taylor1& a, const Taylor1& b) {
    const double iv = 1.0 / b.v;
    const Taylor1 inv = compose(b, iv, -iv * iv, 2.0 * iv * iv * iv);
    return a * inv;
}
inline Taylor1 operator/(double c, const Taylor1& b) { return Taylor1::constant(c) / b; }

inline Taylor1 sqrt(const Taylor1& g) {
    const double s = std::sqrt(g.v);
    return compose(g, s, 0.5 / s, -0.25 / (s * g.v));
}
inline Taylor1 sin(const Taylor1& g) {
    const double s = std::sin(g.v), c = std::cos(g.v);
    return compose(g, s, c, -s);
}
inline Taylor1 cos(const Taylor1& g) {
    const double s = std::sin(g.v), c = std::cos(g.v);
    return compose(g, c, -s, -c);
}
inline Taylor1 sinh(const Taylor1& g) {
    const double s = std::sinh(g.v), c = std::cosh(g.v);
    return compose(g, s, c, s);
}
inline Taylor1 cosh(const Taylor1& g) {
    const double s = std::sinh(g.v), c = std::cosh(g.v);
    return compose(g, c, s, c);
}
inline Taylor1 exp(const Taylor1& g) {
    const double e = std::exp(g.v);
    return compose(g, e, e, e);
}
inline Taylor1 atanh(const Taylor1& g) {
    const double w = 1.0 - g.v * g.v;
    return compose(g, std::atanh(g.v), 1.0 / w, 2.0 * g.v / (w * w));
}
inline Taylor1 sqr(const Taylor1& g) { return g * g; }

struct Taylor2 {
    double v = 0.0;
    double du = 0.0, dv = 0.0;
    double duu = 0.0, duv = 0.0, dvv = 0.0;

    static Taylor2 var_u(double x) { return {x, 1.0, 0.0, 0.0, 0.0, 0.0}; }
    static Taylor2 var_v(double x) { return {x, 0.0, 1.0, 0.0, 0.0, 0.0}; }
    static Taylor2 constant(double c) { return {c, 0.0, 0.0, 0.0, 0.0, 0.0}; }
};

inline Taylor2 operator+(const Taylor2& a, const Taylor2& b) {
    return {a.v + b.v, a.du + b.du, a.dv + b.dv,
            a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}
inline Taylor2 operator-(const Taylor2& a, const Taylor2& b) {
    return {a.v - b.v, a.du - b.du, a.dv - b.dv,
            a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
}
inline Taylor2 operator-(const Taylor2& a) {
    return {-a.v, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv};
}
inline Taylor2 operator*(const Taylor2& a, const Taylor2& b) {
    return {a.v * b.v,
            a.du * b.v + a.v * b.du,
            a.dv * b.v + a.v * b.dv,
            a.duu * b.v + 2.0 * a.du * b.du + a.v * b.duu,
            a.duv * b.v + a.du * b.dv + a.dv * b.du + a.v * b.duv,
            a.dvv * b.v + 2.0 * a.dv * b.dv + a.v * b.dvv};
}
inline Taylor2 operator+(const Taylor2& a, double c) {
    return {a.v + c, a.du, a.dv, a.duu, a.duv, a.dvv};
}
inline Taylor2 operator+(double c, const Taylor2& a) { return a + c; }
inline Taylor2 operator-(const Taylor2& a, double c) { return a + (-c); }
inline Taylor2 operator-(double c, const Taylor2& a) { return (-a) + c; }
inline Taylor2 operator*(const Taylor2& a, double c) {
    return {a.v * c, a.du * c, a.dv * c, a.duu * c, a.duv * c, a.dvv * c};
}
inline Taylor2 operator*(double c, const Taylor2& a) { return a * c; }
inline Taylor2 operator/(const Taylor2& a, double c) { return a * (1.0 / c); }

inline Taylor2 compose(const Taylor2& g, double f, double fp, double fpp) {
    return {f,
            fp * g.du,
            fp * g.dv,
            fpp * g.du * g.du + fp * g.duu,
            fpp * g.du * g.dv + fp * g.duv,
            fpp * g.dv * g.dv + fp * g.dvv};
}

inline Taylor2 operator/(const Taylor2& a, const Taylor2& b) {
    const double iv = 1.0 / b.v;
    return a * compose(b, iv, -iv * iv, 2.0 * iv * iv * iv);
}
inline Taylor2 operator/(double c, const Taylor2& b) { return Taylor2::constant(c) / b; }

inline Taylor2 sqrt(const Taylor2& g) {
    const double s = std::sqrt(g.v);
    return compose(g, s, 0.5 / s, -0.25 / (s * g.v));
}
inline Taylor2 sin(const Taylor2& g) {
    const double s = std::sin(g.v), c = std::cos(g.v);
    return compose(g, s, c, -s);
}
inline Taylor2 cos(const Taylor2& g) {
    const double s = std::sin(g.v), c = std::cos(g.v);
    return compose(g, c, -s, -c);
}
inline Taylor2 sinh(const Taylor2& g) {
    const double s = std::sinh(g.v), c = std::cosh(g.v);
    return compose(g, s, c, s);
}
inline Taylor2 cosh(const Taylor2& g) {
    const double s = std::sinh(g.v), c = std::cosh(g.v);
    return compose(g, c, s, c);
}
inline Taylor2 exp(const Taylor2& g) {
    const double e = std::exp(g.v);
    return compose(g, e, e, e);
}

} // namespace lws::ad
