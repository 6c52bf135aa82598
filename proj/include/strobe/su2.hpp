#pragma once

/*
 * Unit-quaternion realization of SU(2).
 *
 * A group element g = exp(i g/2 sigma.s) is stored as (w, v) with
 * w = cos(g/2), v = sin(g/2) s, so w^2 + |v|^2 = 1.  Under the matrix
 * correspondence g <-> w*I + i(sigma.v) the product carries a minus sign
 * on the cross term:
 *
 *     (w1, v1)(w2, v2) = (w1 w2 - v1.v2,  w1 v2 + w2 v1 - v1 x v2)
 *
 * Orientation convention, used verbatim everywhere downstream: conjugation
 * by exp(i g/2 sigma.s) moves a vector x to
 *
 *     x(g) = cos(g) x + sin(g) (x cross s) + (1 - cos g)(s.x) s
 *
 * i.e. the sine term is x cross s, not s cross x.  No right-hand-rule
 * "correction" is applied anywhere; all angle signs downstream inherit
 * this choice.
 */

#include <cmath>
#include <string>

#include "strobe/errors.hpp"
#include "strobe/vec3.hpp"

namespace strobe {

struct GroupElement {
    double w = 1.0;       // scalar part, cos(angle/2)
    Vec3 v;               // vector part, sin(angle/2) * axis

    static constexpr GroupElement identity() { return {1.0, {0.0, 0.0, 0.0}}; }
};

struct AxisAngle {
    Vec3 axis;            // unit
    double angle = 0.0;   // radians, any real
};

// Result of decomposing an element back into axis-angle form.  The angle is
// reduced to [0, 2pi]; reconstruction exp_axis_angle({axis, angle}) equals
// sign * g (sign is +1 on this branch because sin(angle/2) >= 0).  At
// g = +-identity the axis is undetermined: a default axis [0,0,1] is
// reported with the degenerate flag set, since orbits legitimately pass
// through the identity.
struct AxisAngleDecomp {
    Vec3 axis;
    double angle = 0.0;
    bool degenerate = false;
    int sign = 1;
};

constexpr double kUnitTol = 1e-12;

inline double norm_sq(const GroupElement& g) { return g.w * g.w + norm_sq(g.v); }
inline double norm(const GroupElement& g) { return std::sqrt(norm_sq(g)); }

inline bool is_unit(const GroupElement& g, double tol = kUnitTol) {
    return std::fabs(norm(g) - 1.0) <= tol;
}

inline GroupElement exp_axis_angle(const AxisAngle& aa) {
    if (!is_unit(aa.axis)) {
        throw std::invalid_argument("exp_axis_angle: axis must be a unit vector");
    }
    const double half = 0.5 * aa.angle;
    return {std::cos(half), std::sin(half) * aa.axis};
}

inline GroupElement exp_axis_angle(const Vec3& axis, double angle) {
    return exp_axis_angle(AxisAngle{axis, angle});
}

// Sanity window (0.5, 1.5): anything outside means the iteration has already
// gone numerically wrong and must abort, not be patched up.
inline GroupElement renormalize(const GroupElement& g) {
    const double n = norm(g);
    if (!(n > 0.5 && n < 1.5)) {
        throw NumericalInstabilityError("renormalize: element norm " + std::to_string(n) +
                                        " outside (0.5, 1.5)");
    }
    return {g.w / n, g.v / n};
}

inline GroupElement mul(const GroupElement& a, const GroupElement& b) {
    GroupElement r{a.w * b.w - dot(a.v, b.v), a.w * b.v + b.w * a.v - cross(a.v, b.v)};
    // keep products on the unit sphere; drift beyond 1e-14 gets rescaled
    const double n2 = norm_sq(r);
    if (std::fabs(n2 - 1.0) > 2e-14) {
        const double n = std::sqrt(n2);
        r.w /= n;
        r.v = r.v / n;
    }
    return r;
}

template <typename... Rest>
GroupElement mul(const GroupElement& a, const GroupElement& b, const Rest&... rest) {
    return mul(mul(a, b), rest...);
}

inline GroupElement inverse(const GroupElement& g) { return {g.w, -g.v}; }

// a g a^-1; preserves the rotation angle of g (class function).
inline GroupElement conjugate(const GroupElement& a, const GroupElement& g) {
    return mul(a, g, inverse(a));
}

inline Vec3 rotate_vector(const Vec3& x, const Vec3& s, double gamma) {
    if (!is_unit(s)) {
        throw std::invalid_argument("rotate_vector: rotation axis must be a unit vector");
    }
    const double c = std::cos(gamma);
    const double si = std::sin(gamma);
    return c * x + si * cross(x, s) + ((1.0 - c) * dot(s, x)) * s;
}

inline AxisAngleDecomp axis_angle_of(const GroupElement& g) {
    const double vn = norm(g.v);
    if (vn < 1e-14) {
        // +-identity: angle 0 or 2pi, axis undetermined
        return {{0.0, 0.0, 1.0}, g.w >= 0.0 ? 0.0 : 2.0 * M_PI, true, 1};
    }
    const double angle = 2.0 * std::atan2(vn, g.w);  // in (0, 2pi)
    return {g.v / vn, angle, false, 1};
}

// g^t through the axis-angle chart.  For conjugator use the quaternion sign
// ambiguity is irrelevant; at g = +-identity the default axis makes
// (-1)^t = exp(i t pi sigma.z), a consistent continuous branch.
inline GroupElement pow_real(const GroupElement& g, double t) {
    const AxisAngleDecomp aa = axis_angle_of(g);
    return exp_axis_angle(aa.axis, t * aa.angle);
}

inline double max_abs_diff(const GroupElement& a, const GroupElement& b) {
    return std::max(std::fabs(a.w - b.w), max_abs_diff(a.v, b.v));
}

// Distance ignoring the SU(2) double-cover sign.
inline double projective_diff(const GroupElement& a, const GroupElement& b) {
    return std::min(max_abs_diff(a, b), max_abs_diff(a, GroupElement{-b.w, -b.v}));
}

}  // namespace strobe
