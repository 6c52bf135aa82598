#pragma once

/*
 * The continuous-time side: precession of a unit vector in a rotating drive,
 *
 *     dr/dtheta = 2 r x u(theta),      u(theta) = q + lambda p(theta),
 *     p(theta)  = Rot_q(2 theta) p,
 *
 * integrated with classical fixed-step RK4.  In physical time the drive is
 * u(t) = omega u(omega t) (composition form; the q-coefficient expands to
 * 1 + lambda (1 - cos 2wt)(q.p), which for orthogonal p, q is just 1).
 * Two structural invariants: |r| is conserved, and u . dr/dtheta = 0 at
 * every evaluation.  The strobe samples r(K alpha) of sphere.hpp lie on
 * this flow exactly; strobe_check measures the deviation.
 */

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "strobe/errors.hpp"
#include "strobe/sphere.hpp"
#include "strobe/su2.hpp"
#include "strobe/vec3.hpp"

namespace strobe {

struct DriveField {
    Vec3 p{1.0, 0.0, 0.0};
    Vec3 q{0.0, 0.0, 1.0};
    double lambda = 0.0;
    double omega = 1.0;

    static DriveField of(const SphereConfig& cfg) { return {cfg.p, cfg.q, cfg.lambda, cfg.omega}; }

    void validate() const {
        if (!is_unit(p) || !is_unit(q)) {
            throw std::invalid_argument("DriveField: p and q must be unit vectors");
        }
        if (!(omega > 0.0)) {
            throw std::invalid_argument("DriveField: omega must be positive");
        }
    }
};

inline Vec3 p_of_theta(const DriveField& f, double theta) {
    return rotate_vector(f.p, f.q, 2.0 * theta);
}

inline Vec3 u_of_theta(const DriveField& f, double theta) {
    return f.q + f.lambda * p_of_theta(f, theta);
}

inline Vec3 u_of_t(const DriveField& f, double t) {
    return f.omega * u_of_theta(f, f.omega * t);
}

struct ODEState {
    double theta = 0.0;
    Vec3 r;
};

inline Vec3 vector_field(const DriveField& f, const ODEState& st) {
    return 2.0 * cross(st.r, u_of_theta(f, st.theta));
}

struct IntegrateOptions {
    double h = 1e-4;           // fixed step in theta
    bool renormalize = true;   // project back to the unit sphere each step
};

namespace detail {

template <typename Rhs>
Vec3 rk4_step(Rhs&& rhs, double t, const Vec3& r, double h) {
    const Vec3 k1 = rhs(t, r);
    const Vec3 k2 = rhs(t + 0.5 * h, r + (0.5 * h) * k1);
    const Vec3 k3 = rhs(t + 0.5 * h, r + (0.5 * h) * k2);
    const Vec3 k4 = rhs(t + h, r + h * k3);
    return r + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// March from (t, r) to t_target in full steps of h plus one trailing partial
// step that lands on t_target exactly.
template <typename Rhs>
Vec3 advance_to(Rhs&& rhs, double& t, Vec3 r, double t_target, const IntegrateOptions& opt) {
    while (t < t_target) {
        const double h = std::min(opt.h, t_target - t);
        r = rk4_step(rhs, t, r, h);
        if (!all_finite(r)) {
            throw IntegrationError("integrate: non-finite state", t);
        }
        if (opt.renormalize) r = normalized(r);
        t = (t_target - t <= opt.h) ? t_target : t + h;
    }
    return r;
}

}  // namespace detail

// Dense output at the requested ascending theta grid; the first grid point
// is the initial condition.  Deterministic for fixed inputs.
template <typename Rhs>
Trajectory integrate_grid_rhs(Rhs&& rhs, const Vec3& r0, std::span<const double> grid,
                              const IntegrateOptions& opt, const SphereConfig& meta) {
    if (grid.empty()) return Trajectory{{}, meta, Method::Ode};
    if (!(opt.h > 0.0)) throw std::invalid_argument("integrate: h must be positive");
    Trajectory out{{}, meta, Method::Ode};
    out.samples.reserve(grid.size());
    double t = grid[0];
    Vec3 r = r0;
    out.samples.push_back({0, t, r, dot(r, meta.q)});
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("integrate: theta grid must be strictly ascending");
        }
        r = detail::advance_to(rhs, t, r, grid[i], opt);
        out.samples.push_back({static_cast<std::int64_t>(i), t, r, dot(r, meta.q)});
    }
    return out;
}

inline Trajectory integrate_grid(const DriveField& f, const Vec3& r0, std::span<const double> grid,
                                 const IntegrateOptions& opt = {}) {
    SphereConfig meta;
    meta.p = f.p;
    meta.q = f.q;
    meta.lambda = f.lambda;
    meta.omega = f.omega;
    meta.alpha = opt.h;
    meta.beta = 2.0 * f.lambda * opt.h;
    meta.r0 = r0;
    auto rhs = [&f](double t, const Vec3& r) { return 2.0 * cross(r, u_of_theta(f, t)); };
    return integrate_grid_rhs(rhs, r0, grid, opt, meta);
}

// Span integration [theta0, theta1] recording every full step.
inline Trajectory integrate(const DriveField& f, const Vec3& r0, double theta0, double theta1,
                            const IntegrateOptions& opt = {}) {
    if (!(theta1 >= theta0)) throw std::invalid_argument("integrate: need theta1 >= theta0");
    const auto steps = static_cast<std::int64_t>(std::ceil((theta1 - theta0) / opt.h - 1e-12));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t i = 0; i < steps; ++i) grid.push_back(theta0 + static_cast<double>(i) * opt.h);
    grid.push_back(theta1);
    return integrate_grid(f, r0, grid, opt);
}

// Same flow parameterized by physical time t (theta = omega t).
inline Trajectory integrate_time(const DriveField& f, const Vec3& r0, double t0, double t1,
                                 const IntegrateOptions& opt = {}) {
    if (!(t1 >= t0)) throw std::invalid_argument("integrate_time: need t1 >= t0");
    SphereConfig meta;
    meta.p = f.p;
    meta.q = f.q;
    meta.lambda = f.lambda;
    meta.omega = f.omega;
    meta.alpha = opt.h;
    meta.beta = 2.0 * f.lambda * opt.h;
    meta.r0 = r0;
    const auto steps = static_cast<std::int64_t>(std::ceil((t1 - t0) / opt.h - 1e-12));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps) + 1);
    for (std::int64_t i = 0; i < steps; ++i) grid.push_back(t0 + static_cast<double>(i) * opt.h);
    grid.push_back(t1);
    auto rhs = [&f](double t, const Vec3& r) { return 2.0 * cross(r, u_of_t(f, t)); };
    return integrate_grid_rhs(rhs, r0, grid, opt, meta);
}

struct StrobeReport {
    std::int64_t k_checked = 0;
    double sup_deviation = 0.0;
    double tolerance = 0.0;
    double h = 0.0;
    bool pass = false;
};

// Integrates the flow to every strobe angle theta = K alpha, K <= k_max, and
// reports the sup-norm deviation from the closed-form samples.
inline StrobeReport strobe_check(const DriveField& f, const SphereConfig& cfg, std::int64_t k_max,
                                 double h = 1e-4, double tol = 1e-8) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(k_max) + 1);
    for (std::int64_t k = 0; k <= k_max; ++k) grid.push_back(static_cast<double>(k) * cfg.alpha);
    const Trajectory flow = integrate_grid(f, cfg.r0, grid, {h, true});
    double sup = 0.0;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const Vec3 want = r_strobe(cfg, k);
        sup = std::max(sup, norm(flow.samples[static_cast<std::size_t>(k)].r - want));
    }
    return {k_max, sup, tol, h, sup <= tol};
}

}  // namespace strobe
