#pragma once

#include <string>

#include "vrkit/cx_geom.hpp"
#include "vrkit/errors.hpp"
#include "vrkit/region.hpp"

namespace vrkit {

// boundary curves of the disc regions: two slit-map families traced forward
// (t >= 0, curve runs from z0 to 0) and the same formulas traced backward
// (t <= 0, curve runs from z0 to -1 resp. +1)
enum class disc_curve { Cplus, Cminus, CplusStar, CminusStar };

cx disc_curve_point(disc_curve kind, cx z0, double t);

// the slit mappings whose values at z0 trace the forward curves; family is 1
// (slit ending at +1) or 2 (slit ending at -1); fixes 0
cx extremal_map(int family, double t, cx z);

// landmarks of the fixed-derivative region in the squared coordinate
// g = (1 + w)^2 / (1 - w)^2: the two corners of the lens for derivative tau
cx tau_point_p(cx z0, double tau);
cx tau_point_q(cx z0, double tau);

// the two arcs bounding that lens in the squared coordinate; which = 1 takes
// s in [2 tau - 1, 1], which = 2 takes s in [-1, 2 tau - 1]; both endpoints
// meet at tau_point_p / tau_point_q
cx vt_arc_point(cx z0, double tau, int which, double s);

// boundary curves of the regions for maps with real coefficients, x in [0, 1]:
// 'A' runs -z0^2 -> z0, 'B' runs z0^2 -> z0, 'C' runs -z0^2 -> z0^2
cx real_coeff_curve(char which, cx z0, double x);

// the two arcs bounding the image of the zero-derivative region under
// w -> (1 + w)/(1 - w); s in [0, 1]; which = 0 is the image of curve 'C',
// which = 1 the arc closing the region from the other side
cx zero_class_image_arc(cx z0, int which, double s);

// region construction; kind in {VU, VUstar, VT, VR, VRgeq, VRgt, VR0};
// tau is only read for kind VT
region_spec make_disc_region(const std::string& kind, cx z0, double tau = 0.0);

// closed-form membership tests; membership uses exact comparisons, tol only
// snaps to z0 / excluded points, annotates the boundary band, and rescues
// points within tol of an included edge
verdict classify_vu(cx z0, cx w, double tol = 1e-9);
verdict classify_vustar(cx z0, cx w, double tol = 1e-9);  // builds the region; winding-based
verdict classify_vt(cx z0, double tau, cx w, double tol = 1e-9);
verdict classify_vr(cx z0, cx w, double tol = 1e-9);
verdict classify_vrgeq(cx z0, cx w, double tol = 1e-9);
verdict classify_vrgt(cx z0, cx w, double tol = 1e-9);
verdict classify_vr0(cx z0, cx w, double tol = 1e-9);

// dispatch over a built region of any kind (including the half-plane kinds);
// falls back to winding against the stored polyline where no closed-form
// test exists (kind VUstar)
verdict classify_region(const region_spec& spec, cx w, double tol = 1e-9);

}  // namespace vrkit
