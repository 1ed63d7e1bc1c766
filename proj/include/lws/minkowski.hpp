#pragma once

#include <cmath>
#include <string>

namespace lws {

/// Point/vector of Minkowski 3-space E_1^3 with the metric dx^2 + dy^2 - dz^2
/// (signature +,+,-). Coordinates are dimensionless doubles.
struct MVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend MVec3 operator+(const MVec3& a, const MVec3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend MVec3 operator-(const MVec3& a, const MVec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend MVec3 operator*(double s, const MVec3& v) {
        return {s * v.x, s * v.y, s * v.z};
    }
    friend MVec3 operator*(const MVec3& v, double s) { return s * v; }
    friend MVec3 operator/(const MVec3& v, double s) {
        return {v.x / s, v.y / s, v.z / s};
    }
    MVec3 operator-() const { return {-x, -y, -z}; }
    friend bool operator==(const MVec3& a, const MVec3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

const char* to_string(CausalCharacter c);

/// Lorentzian inner product <u,v> = ux*vx + uy*vy - uz*vz.
inline double lorentz_dot(const MVec3& u, const MVec3& v) {
    return u.x * v.x + u.y * v.y - u.z * v.z;
}

/// Euclidean |v|^2, used only for tolerance scaling.
inline double euclid_norm2(const MVec3& v) {
    return v.x * v.x + v.y * v.y + v.z * v.z;
}

/// Default classification tolerance: 1e-10 * max(1, |v|^2_euclid).
inline double causal_tolerance(const MVec3& v) {
    return 1e-10 * std::fmax(1.0, euclid_norm2(v));
}

/// Spacelike iff <v,v> > tol or v = 0; timelike iff <v,v> < -tol;
/// lightlike otherwise (v != 0).
CausalCharacter causal_character(const MVec3& v, double tol);

inline CausalCharacter causal_character(const MVec3& v) {
    return causal_character(v, causal_tolerance(v));
}

/// Lorentzian cross product: the unique p with <p,w> = det(u,v,w) for all w.
/// Componentwise it is the Euclidean cross product with the z component
/// sign-flipped.
MVec3 lorentz_cross(const MVec3& u, const MVec3& v);

/// det(u,v,w) of the rows u,v,w.
double det3(const MVec3& u, const MVec3& v, const MVec3& w);

} // namespace lws
