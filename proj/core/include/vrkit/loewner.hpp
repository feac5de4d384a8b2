#pragma once

#include <vector>

#include "vrkit/cx_geom.hpp"

namespace vrkit {

// finitely many weighted atoms; weights sum to 1 within 1e-12
struct discrete_measure {
    struct atom {
        double position = 0.0;
        double weight = 0.0;
    };
    std::vector<atom> atoms;

    // throws out_of_domain unless all positions lie in [lo, hi] and weights are a probability vector
    void validate(double lo, double hi) const;
};

// scalar driving on [t_start, t_end], affine between value_start and value_end
struct slit_piece {
    double t_start = 0.0;
    double t_end = 0.0;
    double value_start = 0.0;
    double value_end = 0.0;
};

// measure driving on [t_start, t_end], constant in time
struct measure_piece {
    double t_start = 0.0;
    double t_end = 0.0;
    discrete_measure measure;  // atoms on [0, inf)
};

// admissible control for the upward evolution dw/dt = integral of w/(u - w^2)
struct driving_spec {
    enum class kind_t { slit, measure_path, exponent };
    kind_t kind = kind_t::slit;

    std::vector<slit_piece> slit_pieces;        // kind == slit
    std::vector<measure_piece> measure_pieces;  // kind == measure_path

    // kind == exponent: scalar feedback driving designed so that the trajectory from
    // anchor satisfies xi(eta) = xi0 * (eta/eta0)^x exactly
    double exponent_x = 0.0;
    cx anchor;

    static driving_spec constant_slit(double value, double t_end);

    // throws out_of_domain / out_of_range on malformed pieces
    void validate() const;

    // last covered time (infinity for exponent driving)
    double max_time() const;
};

// driving realizing the boundary-exponent family at x in [-1, 1); x = -1 degenerates
// to the zero slit driving
driving_spec exponent_driving(double x, cx z0);

struct trajectory {
    struct sample_t {
        double t = 0.0;
        cx w;
    };
    cx z0;
    driving_spec driving;
    std::vector<sample_t> samples;  // t strictly increasing from 0, Im w strictly increasing

    // dense evaluation by cubic interpolation between accepted steps
    cx at(double t) const;
};

// adaptive embedded Runge-Kutta 5(4); local error <= rel_tol per unit time;
// steps never cross piece boundaries; final sample exactly at t = T
trajectory integrate(cx z0, const driving_spec& driving, double T, double rel_tol = 1e-10);

// integrate until Im w reaches eta_target (> Im z0), landing on it to ~1e-13 relative
trajectory integrate_to_height(cx z0, const driving_spec& driving, double eta_target,
                               double rel_tol = 1e-10);

// worst-case margins of eta0/eta <= xi/xi0 < eta/eta0 over all samples with t > 0
struct thunder_report {
    double max_lower_violation = 0.0;  // max of eta0/eta - xi/xi0 (positive = violated)
    double min_upper_margin = 0.0;     // min of eta/eta0 - xi/xi0 (non-positive = violated)
    bool upper_strict = true;          // upper inequality strict at every sample with t > 0
};

// requires Re z0 > 0; pure check, violations are reported, never thrown
thunder_report thunder_check(const trajectory& traj);

}  // namespace vrkit
