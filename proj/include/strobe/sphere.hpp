#pragma once

/*
 * Constant-Q dynamics of unit vectors on the sphere.
 *
 * With Q = exp(i a/2 sigma.q), P = exp(i b/2 sigma.p) and R_0 of axis r0,
 * the even orbit R_2K is a conjugation of R_0, so only the axis moves:
 *
 *     r_2K = Rot_q(2 K a) Rot_p(K b) r0,
 *
 * and with theta = K a, lambda = b/(2a) this samples the continuous curve
 *
 *     r(theta) = Rot_q(2 theta) Rot_p(2 lambda theta) r0.
 *
 * Rot is the conjugation-orientation rotation of su2.hpp.  The projection
 * onto q decouples: r(theta).q = t(theta).q with t = Rot_p(2 lambda theta) r0,
 * which confines the motion to the band between the parallels
 *
 *     A_{1,2} = c -+ sqrt(b^2 + (a-c)^2),
 *     a = r0.q,  b = (r0 x p).q,  c = (p.r0)(p.q).
 *
 * The orbit closes at the smallest K with K*beta = 2 m pi and
 * 2 K alpha = 2 n pi; for lambda = m/n in lowest terms the curve has m-fold
 * symmetry about q.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "strobe/errors.hpp"
#include "strobe/group_map.hpp"
#include "strobe/qsequence.hpp"
#include "strobe/rational.hpp"
#include "strobe/su2.hpp"
#include "strobe/vec3.hpp"

namespace strobe {

struct SphereConfig {
    double alpha = 0.0;            // strobe half-step of Q, radians
    double beta = 0.0;             // angle of P, radians
    double lambda = 0.0;           // beta / (2 alpha)
    Vec3 p{1.0, 0.0, 0.0};
    Vec3 q{0.0, 0.0, 1.0};
    Vec3 r0{0.6, 0.0, 0.8};
    double chi0 = std::numbers::pi / 2;  // angle of R_0; must stay off 0 (mod 2pi)
    double omega = 1.0;            // time scale, d theta/dt
    std::optional<ExactAngles> exact;

    static SphereConfig from_angles(double alpha, double beta, Vec3 p = {1.0, 0.0, 0.0},
                                    Vec3 q = {0.0, 0.0, 1.0}, Vec3 r0 = {0.6, 0.0, 0.8},
                                    double chi0 = std::numbers::pi / 2, double omega = 1.0) {
        SphereConfig cfg{alpha, beta, beta / (2.0 * alpha), p, q, r0, chi0, omega, std::nullopt};
        cfg.validate();
        return cfg;
    }

    static SphereConfig from_lambda(double lambda, double alpha, Vec3 p = {1.0, 0.0, 0.0},
                                    Vec3 q = {0.0, 0.0, 1.0}, Vec3 r0 = {0.6, 0.0, 0.8},
                                    double chi0 = std::numbers::pi / 2, double omega = 1.0) {
        SphereConfig cfg{alpha, 2.0 * lambda * alpha, lambda, p, q, r0, chi0, omega, std::nullopt};
        cfg.validate();
        return cfg;
    }

    void validate() const {
        if (!is_unit(p) || !is_unit(q) || !is_unit(r0)) {
            throw std::invalid_argument("SphereConfig: p, q, r0 must be unit vectors (|norm-1| <= 1e-12)");
        }
        const double chi_mod = std::fabs(std::remainder(chi0, 2.0 * std::numbers::pi));
        if (chi_mod < 1e-12) {
            throw std::invalid_argument("SphereConfig: chi0 must be nonzero mod 2pi");
        }
        if (alpha != 0.0 && std::fabs(lambda - beta / (2.0 * alpha)) > 1e-12 * std::max(1.0, std::fabs(lambda))) {
            throw std::invalid_argument("SphereConfig: lambda inconsistent with beta/(2 alpha)");
        }
        if (omega <= 0.0) {
            throw std::invalid_argument("SphereConfig: omega must be positive");
        }
    }
};

struct Bounds {
    double a = 0.0, b = 0.0, c = 0.0;  // intermediates
    double A1 = 0.0, A2 = 0.0;         // parallels, A1 <= A2, both in [-1, 1]
};

inline Bounds bounds_of(const SphereConfig& cfg) {
    Bounds out;
    out.a = dot(cfg.r0, cfg.q);
    out.b = dot(cross(cfg.r0, cfg.p), cfg.q);
    out.c = dot(cfg.p, cfg.r0) * dot(cfg.p, cfg.q);
    const double rad = std::sqrt(out.b * out.b + (out.a - out.c) * (out.a - out.c));
    out.A1 = out.c - rad;
    out.A2 = out.c + rad;
    return out;
}

// Inner rotated vector t(theta) = Rot_p(2 lambda theta) r0.
inline Vec3 t_curve(const SphereConfig& cfg, double theta) {
    return rotate_vector(cfg.r0, cfg.p, 2.0 * cfg.lambda * theta);
}

inline Vec3 r_curve(const SphereConfig& cfg, double theta) {
    return rotate_vector(t_curve(cfg, theta), cfg.q, 2.0 * theta);
}

// Stroboscopic sample K: identical code path to r_curve at theta = K alpha.
inline Vec3 r_strobe(const SphereConfig& cfg, std::int64_t k) {
    return r_curve(cfg, static_cast<double>(k) * cfg.alpha);
}

enum class Method { Direct, ClosedForm, Ode };

struct Sample {
    std::int64_t index = 0;
    double theta = 0.0;
    Vec3 r;
    double r_dot_q = 0.0;
};

struct Trajectory {
    std::vector<Sample> samples;
    SphereConfig config;
    Method method = Method::ClosedForm;
};

// Closed-form samples K = 0 .. k_count-1.
inline Trajectory strobe_trajectory(const SphereConfig& cfg, std::int64_t k_count) {
    Trajectory t{{}, cfg, Method::ClosedForm};
    t.samples.reserve(static_cast<std::size_t>(std::max<std::int64_t>(k_count, 0)));
    for (std::int64_t k = 0; k < k_count; ++k) {
        const Vec3 r = r_strobe(cfg, k);
        t.samples.push_back({k, static_cast<double>(k) * cfg.alpha, r, dot(r, cfg.q)});
    }
    return t;
}

// Axis orbit of the direct map iteration: Q, P, R_0 built from the config,
// R_1 = Q P R_0^-1 Q^-1, renormalized each step; samples are the axes of
// R_0, R_2, ..., R_{2(k_count-1)}.
inline Trajectory direct_map_trajectory(const SphereConfig& cfg, std::int64_t k_count) {
    const GroupElement q = exp_axis_angle(cfg.q, cfg.alpha);
    const GroupElement p = exp_axis_angle(cfg.p, cfg.beta);
    const GroupElement r0 = exp_axis_angle(cfg.r0, cfg.chi0);
    const QSequence qs = QSequence::constant(q);
    Trajectory t{{}, cfg, Method::Direct};
    t.samples.reserve(static_cast<std::size_t>(std::max<std::int64_t>(k_count, 0)));
    MapState st = initial_state(r0, r1_from(q, p, r0));
    for (std::int64_t k = 0; k < k_count; ++k) {
        const GroupElement elem = (k == 0) ? r0 : st.r_curr;
        const Vec3 axis = axis_angle_of(elem).axis;
        t.samples.push_back({k, static_cast<double>(k) * cfg.alpha, axis, dot(axis, cfg.q)});
        if (k + 1 < k_count) {
            st = step(st, qs);  // to R_{2(k+1)-1}
            st = step(st, qs);  // to R_{2(k+1)}
        }
    }
    return t;
}

inline std::vector<double> axial_observable(const Trajectory& t) {
    std::vector<double> out;
    out.reserve(t.samples.size());
    for (const Sample& s : t.samples) out.push_back(s.r_dot_q);
    return out;
}

// Closure arithmetic on exact annotations only.  Returns nullopt for angle
// ratios marked irrational (the orbit never closes); refuses plain float
// configs, which should use distinct_point_count instead.
inline std::optional<ClosureResult> closure_index(const SphereConfig& cfg) {
    if (!cfg.exact) {
        throw UnsupportedInputError(
            "closure_index: config carries no exact angle annotation; "
            "use distinct_point_count for float inputs");
    }
    if (cfg.exact->kind == ExactAngles::Kind::Irrational) {
        return std::nullopt;
    }
    return closure_from_ratios(cfg.exact->alpha_over_pi, cfg.exact->beta_over_pi);
}

// Number of tol-distinct points among {r_strobe(K) : 0 <= K < k_max} under
// great-circle distance, first-seen representatives, deterministic.
inline int distinct_point_count(const SphereConfig& cfg, std::int64_t k_max, double tol = 1e-9) {
    if (k_max < 1) throw std::invalid_argument("distinct_point_count: k_max must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("distinct_point_count: tol must be positive");
    std::vector<Vec3> reps;
    for (std::int64_t k = 0; k < k_max; ++k) {
        const Vec3 r = r_strobe(cfg, k);
        bool fresh = true;
        for (const Vec3& rep : reps) {
            if (great_circle_distance(r, rep) <= tol) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(r);
    }
    return static_cast<int>(reps.size());
}

// For lambda = m/n in lowest terms the curve has m-fold symmetry about q:
// r(theta + pi n/m) = Rot_q(2 pi n/m) r(theta).  Reduces internally.
inline std::int64_t symmetry_order(const Rational& lambda) {
    return std::llabs(lambda.numerator());
}

inline std::int64_t symmetry_order(long long num, long long den) {
    return symmetry_order(Rational(num, den));
}

// The continuous symmetry R_N -> Q^kappa R_N Q^-kappa: every sample rotates
// about q by the geometric angle kappa*alpha; the axial observable is
// untouched.
inline Trajectory apply_symmetry(const Trajectory& t, double kappa) {
    Trajectory out = t;
    const double angle = kappa * t.config.alpha;
    for (Sample& s : out.samples) {
        s.r = rotate_vector(s.r, t.config.q, angle);
        s.r_dot_q = dot(s.r, t.config.q);
    }
    return out;
}

}  // namespace strobe
