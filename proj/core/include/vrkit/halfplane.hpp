#pragma once

#include "vrkit/cx_geom.hpp"
#include "vrkit/region.hpp"

namespace vrkit {

// boundary curves of the half-plane value regions, parametrized by t >= 0:
//   C:     sqrt(z0^2 - 2t), hyperbola branch through z0 going up (included edge)
//   D:     z0 + e^{i arg z0} t, outward ray (excluded except z0)
//   Cstar: sqrt(z0^2 + 2t), hyperbola branch through z0 going down (included edge)
//   Dstar: z0 - e^{i arg z0} t for t < |z0|, inward segment (excluded except z0)
enum class hp_curve { C, D, Cstar, Dstar };

// requires Re z0 >= 0, Im z0 > 0; Dstar additionally t < |z0|
cx hp_curve_point(hp_curve kind, cx z0, double t);

// membership in the forward value region at z0: w attainable as f(z0) over
// half-plane self-maps symmetric in the imaginary axis
verdict classify_vi(cx z0, cx w, double tol = 1e-9);

// membership in the inverse region: w attainable as a preimage of z0
verdict classify_vistar(cx z0, cx w, double tol = 1e-9);

// boundary polylines for export; unbounded edges truncated at eta_max (default 50 * Im z0)
// `kind` is "VI" or "VIstar"
region_spec make_hp_region(const std::string& kind, cx z0, double eta_max = 0.0);

}  // namespace vrkit
