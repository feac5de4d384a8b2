#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "vrkit/cx_geom.hpp"
#include "vrkit/loewner.hpp"

namespace vrkit {

// discrete parameter measure for bounded typically real maps with derivative
// tau at 0; atoms live on B = {(x, y): -1 <= x <= 2 tau - 1 <= y <= 1}
struct szapiel_spec {
    struct atom {
        double x = 0.0;
        double y = 0.0;
        double weight = 0.0;
    };
    double tau = 1.0;
    std::vector<atom> atoms;

    // throws out_of_range / out_of_domain unless tau in (0, 1], every atom lies
    // in the closed base set, and the weights are a probability vector
    void validate() const;
};

// the auxiliary product g whose square root side-quotient gives the map value
cx szapiel_g(const szapiel_spec& spec, cx z);

// map value f(z); sqrt branch pinned by sqrt(1) = 1 (principal), continued
// along the segment from near 0 if the principal branch lands on the cut
cx szapiel_eval(const szapiel_spec& spec, cx z);

enum class herglotz_constraint { none, nonneg, zero };

// discrete symmetrized boundary measure for real-coefficient Schwarz maps;
// constraint restricts the first moment m1 = sum of weight * cos(u)
struct herglotz_spec {
    struct atom {
        double u = 0.0;  // in [0, pi]
        double weight = 0.0;
    };
    std::vector<atom> atoms;
    herglotz_constraint constraint = herglotz_constraint::none;

    double first_moment() const;
    void validate() const;
};

// returns (g, f) with g the positive-real-part sum and f = (g - 1)/(g + 1)
std::pair<cx, cx> herglotz_eval(const herglotz_spec& spec, cx z);

// samplers: deterministic under a fixed seed ----------------------------------

// tau uniform in (tau_min, tau_max], atoms uniform on the base set, weights
// uniform on the simplex
szapiel_spec sample_szapiel(double tau_min, double tau_max, int n_atoms, uint64_t seed);

// atoms uniform on [0, pi]; `nonneg` enforced by rejection (budget 10^5 draws),
// `zero` by compensating two-atom mixtures with exactly vanishing first moment
herglotz_spec sample_herglotz(herglotz_constraint constraint, int n_atoms, uint64_t seed);

// random piecewise-constant measure driving: `pieces` spans of duration
// uniform in [0.05, 0.35], each with 1..4 atoms at positions uniform in
// [0, value_range] and simplex weights
driving_spec sample_driving(int pieces, double value_range, uint64_t seed);

// derivative oracle: central differences with one Richardson step (h^4 accurate)
cx richardson_derivative(const std::function<cx(cx)>& f, cx z, double h = 1e-5);

// the non-univalent benchmark map with derivative 1/2 at 0
cx f0_eval(cx z);

struct f0_report {
    cx z_star;                     // interior critical point, from the printed expression
    double z_star_abs = 0.0;       // |z_star|
    double deriv_at_z_star = 0.0;  // |f0'(z_star)| by the derivative oracle
    double deriv0_error = 0.0;     // |f0'(0) - 1/2|
    bool pass = false;
};

// certifies the critical point of f0 inside the disc (non-univalence witness)
f0_report f0_critical_check();

}  // namespace vrkit
