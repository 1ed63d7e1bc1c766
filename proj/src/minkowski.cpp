#include "lws/minkowski.hpp"

namespace lws {

const char* to_string(CausalCharacter c) {
    switch (c) {
        case CausalCharacter::Spacelike: return "Spacelike";
        case CausalCharacter::Timelike: return "Timelike";
        case CausalCharacter::Lightlike: return "Lightlike";
    }
    return "Unknown";
}

CausalCharacter causal_character(const MVec3& v, double tol) {
    const double q = lorentz_dot(v, v);
    if (q > tol) return CausalCharacter::Spacelike;
    if (v.x == 0.0 && v.y == 0.0 && v.z == 0.0) return CausalCharacter::Spacelike;
    if (q < -tol) return CausalCharacter::Timelike;
    return CausalCharacter::Lightlike;
}

MVec3 lorentz_cross(const MVec3& u, const MVec3& v) {
    // Euclidean cross product with the z component flipped, so that
    // <u x v, w> = det(u, v, w) under the (+,+,-) metric.
    return {u.y * v.z - u.z * v.y,
            u.z * v.x - u.x * v.z,
            -(u.x * v.y - u.y * v.x)};
}

double det3(const MVec3& u, const MVec3& v, const MVec3& w) {
    return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
           u.z * (v.x * w.y - v.y * w.x);
}

} // namespace lws
