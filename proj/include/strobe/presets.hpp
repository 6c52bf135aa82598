#pragma once

/// Frozen experiment presets: orthogonal p = [1,0,0], q = [0,0,1], start
/// r0 = [0.6, 0, 0.8] (parallels at -+0.8), omega = 1.  fig2 carries a
/// second, coarse parameter set whose 90-sample period is drawn as dots.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strobe/rational.hpp"
#include "strobe/sphere.hpp"

namespace strobe {

struct FigurePreset {
    std::string id;
    SphereConfig config;                  // dense / primary parameter set
    std::optional<SphereConfig> dots;     // coarse overlay set (fig2 only)
    double default_theta_max = 0.0;       // default plotting span
    std::string description;
};

namespace detail {

inline SphereConfig preset_config(const Rational& alpha_deg, const Rational& beta_deg) {
    const double d2r = std::numbers::pi / 180.0;
    SphereConfig cfg = SphereConfig::from_angles(to_double(alpha_deg) * d2r,
                                                 to_double(beta_deg) * d2r);
    cfg.exact = ExactAngles::from_degrees(alpha_deg, beta_deg);
    return cfg;
}

}  // namespace detail

inline std::vector<std::string> preset_ids() { return {"fig1", "fig2", "fig3", "fig3-ergodic"}; }

inline FigurePreset figure_preset(std::string_view id) {
    const double pi = std::numbers::pi;
    if (id == "fig1") {
        // alpha = 0.01 deg, beta = 0.06 deg, lambda = 3; closed period theta = pi
        return {"fig1", detail::preset_config(parse_rational("0.01"), parse_rational("0.06")),
                std::nullopt, pi, "three-fold closed curve, lambda = 3"};
    }
    if (id == "fig2") {
        // dense: alpha = 0.01 deg, beta = 0.04 deg; dots: alpha = 2 deg, beta = 8 deg
        return {"fig2", detail::preset_config(parse_rational("0.01"), parse_rational("0.04")),
                detail::preset_config(parse_rational("2"), parse_rational("8")), pi,
                "two-fold closed curve, lambda = 2, with 90-sample dot overlay"};
    }
    if (id == "fig3") {
        // lambda = 41/40: 41 loops close after theta = 40 pi; default plot shows 7
        return {"fig3", detail::preset_config(parse_rational("0.01"), parse_rational("0.0205")),
                std::nullopt, 7.0 * pi / 1.025, "41-loop closed curve, lambda = 41/40 (7 loops plotted)"};
    }
    if (id == "fig3-ergodic") {
        const double alpha = 0.01 * pi / 180.0;
        const double lambda = std::sqrt(2.0) - 0.389;
        SphereConfig cfg = SphereConfig::from_lambda(lambda, alpha);
        cfg.exact = ExactAngles::irrational();
        return {"fig3-ergodic", cfg, std::nullopt, 8.0 * pi,
                "band-filling trajectory, lambda = sqrt(2) - 0.389 (never closes)"};
    }
    throw std::invalid_argument("unknown preset '" + std::string(id) +
                                "' (expected fig1, fig2, fig3 or fig3-ergodic)");
}

}  // namespace strobe
