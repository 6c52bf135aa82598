#pragma once

/*
 * Standalone SVG 1.1 rendering of trajectories on the unit sphere.
 * Orthographic projection into a fixed square viewport; the q axis, the
 * equator and the two bounding parallels are always drawn.  Points on the
 * far hemisphere (negative component along the projection axis) are dashed
 * or hollow, matching the usual hidden-line convention of hand-drawn
 * sphere figures.  Sparse orbits are drawn as dots, dense ones as a
 * polyline; output is byte-deterministic.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "strobe/errors.hpp"
#include "strobe/sphere.hpp"
#include "strobe/su2.hpp"

namespace strobe {

enum class SvgMark { Auto, Dots, Line };

struct SvgOptions {
    double azimuth_deg = -70.0;    // view direction, measured in the plane normal to q
    double elevation_deg = 18.0;   // lift of the view direction toward q
    double roll_deg = -10.0;       // screen tilt; default leans q up-right
    int size = 640;                // viewport edge, px
    SvgMark mark = SvgMark::Auto;
    int dots_threshold = 256;      // Auto: dots when samples <= threshold
    int max_path_points = 6000;    // polyline decimation cap
    double dot_tol = 1e-9;         // great-circle dedupe for dot rendering
};

struct Camera {
    Vec3 forward;  // unit, points toward the viewer
    Vec3 right;
    Vec3 up;

    static Camera from_q(const Vec3& q, double azimuth_deg, double elevation_deg,
                         double roll_deg) {
        const double d2r = std::numbers::pi / 180.0;
        const Vec3 e3 = normalized(q);
        const Vec3 ref = std::fabs(e3.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
        const Vec3 e1 = normalized(ref - dot(ref, e3) * e3);
        const Vec3 e2 = cross(e3, e1);
        const double az = azimuth_deg * d2r, el = elevation_deg * d2r;
        Camera cam;
        cam.forward = std::cos(el) * std::cos(az) * e1 + std::cos(el) * std::sin(az) * e2 +
                      std::sin(el) * e3;
        cam.up = normalized(e3 - dot(e3, cam.forward) * cam.forward);
        cam.right = cross(cam.up, cam.forward);
        if (roll_deg != 0.0) {
            cam.up = rotate_vector(cam.up, cam.forward, roll_deg * d2r);
            cam.right = rotate_vector(cam.right, cam.forward, roll_deg * d2r);
        }
        return cam;
    }
};

struct Projected {
    double x = 0.0;  // viewport coordinates
    double y = 0.0;
    bool front = false;
};

// front/back partition: sign of the component along the projection axis;
// zero counts as front, so no point lands in both classes.
inline bool is_front(const Camera& cam, const Vec3& r) { return dot(r, cam.forward) >= 0.0; }

inline Projected project(const Camera& cam, const Vec3& r, double cx, double cy, double scale) {
    return {cx + scale * dot(r, cam.right), cy - scale * dot(r, cam.up), is_front(cam, r)};
}

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Emit one polyline as front/back path runs, splitting segments where the
// visibility sign changes (crossing point interpolated on the chord).
inline void emit_split_polyline(std::ostream& os, const Camera& cam,
                                const std::vector<Vec3>& pts, double cx, double cy, double scale,
                                const std::string& front_class, const std::string& back_class) {
    if (pts.size() < 2) return;
    std::string front_d, back_d;
    auto append = [&](std::string& d, const Projected& pr, bool move) {
        d += move ? "M" : "L";
        d += svg_num(pr.x);
        d += ",";
        d += svg_num(pr.y);
    };
    Projected prev = project(cam, pts[0], cx, cy, scale);
    double prev_depth = dot(pts[0], cam.forward);
    append(prev.front ? front_d : back_d, prev, true);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Projected cur = project(cam, pts[i], cx, cy, scale);
        const double depth = dot(pts[i], cam.forward);
        if (cur.front == prev.front) {
            append(cur.front ? front_d : back_d, cur, false);
        } else {
            const double t = prev_depth / (prev_depth - depth);
            const Vec3 mid = pts[i - 1] + t * (pts[i] - pts[i - 1]);
            const Projected pm = project(cam, mid, cx, cy, scale);
            append(prev.front ? front_d : back_d, pm, false);
            append(cur.front ? front_d : back_d, pm, true);
            append(cur.front ? front_d : back_d, cur, false);
        }
        prev = cur;
        prev_depth = depth;
    }
    if (!back_d.empty()) os << "  <path class=\"" << back_class << "\" d=\"" << back_d << "\"/>\n";
    if (!front_d.empty())
        os << "  <path class=\"" << front_class << "\" d=\"" << front_d << "\"/>\n";
}

// Latitude circle r.q = level on the unit sphere, as a sampled polyline.
inline std::vector<Vec3> latitude_circle(const Vec3& q, double level, int segments = 720) {
    const Vec3 e3 = normalized(q);
    const Vec3 ref = std::fabs(e3.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    const Vec3 e1 = normalized(ref - dot(ref, e3) * e3);
    const Vec3 e2 = cross(e3, e1);
    const double rho = std::sqrt(std::max(0.0, 1.0 - level * level));
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(segments) + 1);
    for (int i = 0; i <= segments; ++i) {
        const double t = 2.0 * std::numbers::pi * i / segments;
        pts.push_back(level * e3 + rho * (std::cos(t) * e1 + std::sin(t) * e2));
    }
    return pts;
}

}  // namespace detail

inline void write_svg_header(std::ostream& os, int size) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
       << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
       << "  <style>\n"
       << "    .outline { fill: none; stroke: #444; stroke-width: 1.2; }\n"
       << "    .reff { fill: none; stroke: #888; stroke-width: 0.8; }\n"
       << "    .refb { fill: none; stroke: #aaa; stroke-width: 0.8; stroke-dasharray: 6 4; }\n"
       << "    .trajf { fill: none; stroke: #000; stroke-width: 1.4; }\n"
       << "    .trajb { fill: none; stroke: #555; stroke-width: 1.0; stroke-dasharray: 5 4; }\n"
       << "    .dotf { fill: #000; stroke: none; }\n"
       << "    .dotb { fill: none; stroke: #777; stroke-width: 1.0; }\n"
       << "    .start { fill: #000; stroke: #fff; stroke-width: 1.2; }\n"
       << "    .label { font-family: serif; font-style: italic; font-size: 20px; }\n"
       << "  </style>\n";
}

inline void write_svg_footer(std::ostream& os) { os << "</svg>\n"; }

// Sphere outline, equator, the two bounding parallels, and the q axis with
// an arrowhead and label.
inline void write_reference_layer(std::ostream& os, const Camera& cam, const Vec3& q,
                                  const Bounds& bounds, double cx, double cy, double scale) {
    const Vec3 qn = normalized(q);
    os << "  <circle class=\"outline\" cx=\"" << detail::svg_num(cx) << "\" cy=\""
       << detail::svg_num(cy) << "\" r=\"" << detail::svg_num(scale) << "\"/>\n";
    for (const double level : {0.0, bounds.A1, bounds.A2}) {
        detail::emit_split_polyline(os, cam, detail::latitude_circle(qn, level), cx, cy, scale,
                                    "reff", "refb");
    }
    std::vector<Vec3> axis;
    for (int i = 0; i <= 64; ++i) {
        axis.push_back((-1.05 + (1.30 + 1.05) * i / 64.0) * qn);
    }
    detail::emit_split_polyline(os, cam, axis, cx, cy, scale, "reff", "refb");
    const Projected tip = project(cam, 1.30 * qn, cx, cy, scale);
    const Projected below = project(cam, 1.18 * qn, cx, cy, scale);
    const double dx = tip.x - below.x, dy = tip.y - below.y;
    const double len = std::hypot(dx, dy);
    if (len > 1e-9) {
        const double ux = dx / len, uy = dy / len;
        os << "  <path class=\"dotf\" d=\"M" << detail::svg_num(tip.x) << ","
           << detail::svg_num(tip.y) << "L" << detail::svg_num(tip.x - 10 * ux - 4 * uy) << ","
           << detail::svg_num(tip.y - 10 * uy + 4 * ux) << "L"
           << detail::svg_num(tip.x - 10 * ux + 4 * uy) << ","
           << detail::svg_num(tip.y - 10 * uy - 4 * ux) << "Z\"/>\n";
    }
    os << "  <text class=\"label\" x=\"" << detail::svg_num(tip.x + 8) << "\" y=\""
       << detail::svg_num(tip.y + 4) << "\">q</text>\n";
}

// One trajectory, as dots (tol-distinct representatives) or a visibility-split
// polyline, plus an initial-point marker.
inline void write_trajectory_layer(std::ostream& os, const Camera& cam, const Trajectory& traj,
                                   double cx, double cy, double scale, const SvgOptions& opt,
                                   bool start_marker = true) {
    const auto& samples = traj.samples;
    if (samples.empty()) return;
    const bool as_dots =
        opt.mark == SvgMark::Dots ||
        (opt.mark == SvgMark::Auto && static_cast<int>(samples.size()) <= opt.dots_threshold);
    if (as_dots) {
        std::vector<Vec3> reps;
        for (const Sample& s : samples) {
            bool fresh = true;
            for (const Vec3& rep : reps) {
                if (great_circle_distance(s.r, rep) <= opt.dot_tol) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) reps.push_back(s.r);
        }
        for (const Vec3& r : reps) {
            const Projected pr = project(cam, r, cx, cy, scale);
            os << "  <circle class=\"" << (pr.front ? "dotf" : "dotb") << "\" cx=\""
               << detail::svg_num(pr.x) << "\" cy=\"" << detail::svg_num(pr.y)
               << "\" r=\"3\"/>\n";
        }
    } else {
        const int stride =
            std::max(1, static_cast<int>(samples.size()) / std::max(1, opt.max_path_points));
        std::vector<Vec3> pts;
        pts.reserve(samples.size() / static_cast<std::size_t>(stride) + 2);
        for (std::size_t i = 0; i < samples.size(); i += static_cast<std::size_t>(stride)) {
            pts.push_back(samples[i].r);
        }
        if ((samples.size() - 1) % static_cast<std::size_t>(stride) != 0) {
            pts.push_back(samples.back().r);
        }
        detail::emit_split_polyline(os, cam, pts, cx, cy, scale, "trajf", "trajb");
    }
    if (start_marker) {
        const Projected p0 = project(cam, samples.front().r, cx, cy, scale);
        os << "  <circle class=\"start\" cx=\"" << detail::svg_num(p0.x) << "\" cy=\""
           << detail::svg_num(p0.y) << "\" r=\"4.5\"/>\n";
    }
}

inline void write_svg(const Trajectory& traj, const Bounds& bounds, std::ostream& os,
                      const SvgOptions& opt = {}) {
    const double cx = opt.size / 2.0, cy = opt.size / 2.0;
    const double scale = 0.42 * opt.size;
    const Camera cam =
        Camera::from_q(traj.config.q, opt.azimuth_deg, opt.elevation_deg, opt.roll_deg);
    write_svg_header(os, opt.size);
    write_reference_layer(os, cam, traj.config.q, bounds, cx, cy, scale);
    write_trajectory_layer(os, cam, traj, cx, cy, scale, opt);
    write_svg_footer(os);
}

inline void write_svg_file(const Trajectory& traj, const Bounds& bounds, const std::string& path,
                           const SvgOptions& opt = {}) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    write_svg(traj, bounds, os, opt);
    os.flush();
    if (!os) throw IoError("write failed for '" + path + "'");
}

}  // namespace strobe
