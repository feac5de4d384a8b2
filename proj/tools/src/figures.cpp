#include "vrkit_cli/figures.hpp"

#include <cmath>
#include <vector>

#include "vrkit/disc.hpp"
#include "vrkit/errors.hpp"
#include "vrkit/halfplane.hpp"
#include "vrkit/region.hpp"
#include "vrkit_cli/svg.hpp"

namespace vrkit::cli {

namespace {

constexpr const char* orange = "#e8820c";
constexpr const char* red = "#cc2222";
constexpr const char* green = "#1f8a3a";
constexpr const char* blue = "#2c6fbb";
constexpr const char* purple = "#7b4fa6";

std::vector<cx> adaptive(const std::function<cx(double)>& f, double a, double b) {
    std::vector<cx> pts;
    for (auto& [t, p] : sample_adaptive(f, a, b, 96, 1e-3)) pts.push_back(p);
    return pts;
}

// the two half-plane curve pairs through 1 + i
std::string fig1() {
    const cx z0{1.0, 1.0};
    const double xi0 = z0.real(), eta0 = z0.imag();
    svg_doc doc = svg_doc::halfplane_frame();
    doc.add_axes();

    // upward hyperbola branch, cut off at the frame top
    const double eta_top = doc.y1;
    const double xi_top = xi0 * eta0 / eta_top;
    const double t_c = 0.5 * ((xi0 * xi0 - eta0 * eta0) - (xi_top * xi_top - eta_top * eta_top));
    doc.add_path(adaptive([&](double t) { return hp_curve_point(hp_curve::C, z0, t); }, 0.0, t_c),
                 "curve C included", blue, 2.0, false, "none", false);

    // outward ray, cut off at the frame
    const double phi = std::arg(z0);
    double s_end = (doc.y1 - eta0) / std::sin(phi);
    if (std::cos(phi) > 0.0) s_end = std::min(s_end, (doc.x1 - xi0) / std::cos(phi));
    doc.add_path({z0, hp_curve_point(hp_curve::D, z0, s_end)}, "curve D excluded", blue, 2.0, true,
                 "none", false);

    // downward hyperbola branch, cut off at the frame right
    const double xi_right = doc.x1;
    const double eta_right = xi0 * eta0 / xi_right;
    const double t_cs =
        0.5 * ((xi_right * xi_right - eta_right * eta_right) - (xi0 * xi0 - eta0 * eta0));
    doc.add_path(
        adaptive([&](double t) { return hp_curve_point(hp_curve::Cstar, z0, t); }, 0.0, t_cs),
        "curve Cstar included", red, 2.0, false, "none", false);

    // inward segment, open at the origin
    doc.add_path({z0, hp_curve_point(hp_curve::Dstar, z0, std::abs(z0) * (1.0 - 1e-9))},
                 "curve Dstar excluded", red, 2.0, true, "none", false);

    doc.add_marker(z0, 3.5, "basepoint", "black", true);
    doc.add_marker(cx{0.0, 0.0}, 3.0, "excluded-point", red, false);
    return doc.str();
}

// forward region (filled) and backward region (dashed outline) at 0.9 e^{i pi/4}
std::string fig2() {
    const cx z0 = std::polar(0.9, std::acos(-1.0) / 4.0);
    svg_doc doc = svg_doc::disc_frame();
    doc.add_axes();
    doc.add_unit_circle();

    add_region(doc, make_disc_region("VU", z0), orange, true);

    const region_spec back = make_disc_region("VUstar", z0);
    for (const auto& e : back.edges)
        doc.add_path(e.points, "edge " + e.name + (e.included ? " included" : " excluded"), red,
                     2.0, true, "none", false);
    for (cx p : back.excluded_points) doc.add_marker(p, 3.0, "excluded-point", red, false);
    return doc.str();
}

// fixed-derivative lenses for three derivative levels
std::string fig4() {
    const cx z0 = std::polar(0.9, std::acos(-1.0) / 4.0);
    svg_doc doc = svg_doc::disc_frame();
    doc.add_axes();
    doc.add_unit_circle();
    const char* shades[3] = {"#9ec7ec", "#5596d1", blue};
    int i = 0;
    for (double tau : {0.1, 0.5, 0.9})
        add_region(doc, make_disc_region("VT", z0, tau), shades[i++], true);
    return doc.str();
}

// nested regions: union over derivatives, nonnegative derivative, free sign
std::string fig5() {
    const cx z0{1.0 / 3.0, 0.5};
    svg_doc doc = svg_doc::disc_frame();
    doc.add_axes();
    doc.add_unit_circle();
    add_region(doc, make_disc_region("VR", z0), green, true);
    add_region(doc, make_disc_region("VRgeq", z0), red, true);
    add_region(doc, make_disc_region("VU", z0), orange, true);
    return doc.str();
}

// image of the zero-derivative lens under w -> (1 + w)/(1 - w)
std::string fig6() {
    const cx z0{1.0 / 3.0, 0.5};
    svg_doc doc = svg_doc::disc_frame();
    doc.add_axes();

    const auto arc0 = adaptive([&](double s) { return zero_class_image_arc(z0, 0, s); }, 0.0, 1.0);
    const auto arc1 = adaptive([&](double s) { return zero_class_image_arc(z0, 1, s); }, 0.0, 1.0);

    // arc0 runs A -> B and arc1 runs B -> A, so appending closes the loop
    std::vector<cx> outline = arc0;
    outline.insert(outline.end(), arc1.begin(), arc1.end());
    doc.add_path(outline, "fill Delta0", "none", 0.0, false, purple, true);
    doc.add_path(arc0, "edge Ccurve included", purple, 2.0, false, "none", false);
    doc.add_path(arc1, "edge Incurve included", purple, 2.0, false, "none", false);
    doc.add_marker(arc0.front(), 3.0, "endpoint", purple, true);
    doc.add_marker(arc0.back(), 3.0, "endpoint", purple, true);
    return doc.str();
}

}  // namespace

std::string render_figure(const std::string& name) {
    if (name == "fig1") return fig1();
    if (name == "fig2") return fig2();
    if (name == "fig4") return fig4();
    if (name == "fig5") return fig5();
    if (name == "fig6") return fig6();
    throw out_of_range("unknown figure '" + name + "' (expected fig1, fig2, fig4, fig5, fig6)");
}

}  // namespace vrkit::cli
