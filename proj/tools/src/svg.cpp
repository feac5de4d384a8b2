#include "vrkit_cli/svg.hpp"

#include <cstdio>

namespace vrkit::cli {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// recursive Douglas-Peucker on pixel coordinates; boundary data is far denser
// than a pixel grid can show, so emitting it verbatim just bloats the file
void decimate(const std::vector<std::pair<double, double>>& pts, size_t lo, size_t hi,
              double tol_px, std::vector<size_t>& keep) {
    if (hi <= lo + 1) return;
    const double ax = pts[lo].first, ay = pts[lo].second;
    const double bx = pts[hi].first, by = pts[hi].second;
    const double dx = bx - ax, dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    double worst = -1.0;
    size_t pick = lo;
    for (size_t i = lo + 1; i < hi; ++i) {
        const double px = pts[i].first - ax, py = pts[i].second - ay;
        double dist2;
        if (len2 == 0.0) {
            dist2 = px * px + py * py;
        } else {
            const double cross = px * dy - py * dx;
            dist2 = cross * cross / len2;
        }
        if (dist2 > worst) {
            worst = dist2;
            pick = i;
        }
    }
    if (worst > tol_px * tol_px) {
        decimate(pts, lo, pick, tol_px, keep);
        keep.push_back(pick);
        decimate(pts, pick, hi, tol_px, keep);
    }
}

}  // namespace

svg_doc::svg_doc(double wx0, double wy0, double wx1, double wy1, int w, int h)
    : x0(wx0), y0(wy0), x1(wx1), y1(wy1), width(w), height(h) {}

svg_doc svg_doc::disc_frame() { return svg_doc(-1.1, -1.1, 1.1, 1.1, 640, 640); }

svg_doc svg_doc::halfplane_frame() { return svg_doc(-0.5, 0.0, 4.5, 4.0, 800, 640); }

double svg_doc::px(double x) const { return (x - x0) / (x1 - x0) * width; }

double svg_doc::py(double y) const { return (y1 - y) / (y1 - y0) * height; }

void svg_doc::add_path(const std::vector<cx>& pts, const std::string& cls,
                       const std::string& stroke, double stroke_width, bool dashed,
                       const std::string& fill, bool close) {
    if (pts.size() < 2) return;
    std::vector<std::pair<double, double>> pix;
    pix.reserve(pts.size());
    for (cx p : pts) pix.emplace_back(px(p.real()), py(p.imag()));
    std::vector<size_t> keep{0};
    decimate(pix, 0, pix.size() - 1, 0.25, keep);
    keep.push_back(pix.size() - 1);
    std::string d = "M " + fmt(pix[keep[0]].first) + " " + fmt(pix[keep[0]].second);
    for (size_t k = 1; k < keep.size(); ++k)
        d += " L " + fmt(pix[keep[k]].first) + " " + fmt(pix[keep[k]].second);
    if (close) d += " Z";
    std::string el = "<path class=\"" + cls + "\" d=\"" + d + "\" stroke=\"" + stroke +
                     "\" stroke-width=\"" + fmt(stroke_width) + "\" fill=\"" + fill + "\"";
    if (fill != "none") el += " fill-opacity=\"0.25\"";
    if (dashed) el += " stroke-dasharray=\"7 5\"";
    el += "/>";
    elements.push_back(el);
}

void svg_doc::add_marker(cx center, double radius_px, const std::string& cls,
                         const std::string& color, bool filled) {
    std::string el = "<circle class=\"" + cls + "\" cx=\"" + fmt(px(center.real())) + "\" cy=\"" +
                     fmt(py(center.imag())) + "\" r=\"" + fmt(radius_px) + "\"";
    if (filled)
        el += " fill=\"" + color + "\" stroke=\"none\"";
    else
        el += " fill=\"white\" stroke=\"" + color + "\" stroke-width=\"1.5\"";
    el += "/>";
    elements.push_back(el);
}

void svg_doc::add_unit_circle() {
    const double r = px(1.0) - px(0.0);
    elements.push_back("<circle class=\"frame\" cx=\"" + fmt(px(0.0)) + "\" cy=\"" + fmt(py(0.0)) +
                       "\" r=\"" + fmt(r) + "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>");
}

void svg_doc::add_axes() {
    elements.push_back("<line class=\"frame\" x1=\"" + fmt(px(x0)) + "\" y1=\"" + fmt(py(0.0)) +
                       "\" x2=\"" + fmt(px(x1)) + "\" y2=\"" + fmt(py(0.0)) +
                       "\" stroke=\"#999999\" stroke-width=\"1\"/>");
    if (x0 < 0.0 && x1 > 0.0)
        elements.push_back("<line class=\"frame\" x1=\"" + fmt(px(0.0)) + "\" y1=\"" +
                           fmt(py(y0)) + "\" x2=\"" + fmt(px(0.0)) + "\" y2=\"" + fmt(py(y1)) +
                           "\" stroke=\"#999999\" stroke-width=\"1\"/>");
}

std::string svg_doc::str() const {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) +
                      "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
                      "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& el : elements) out += el + "\n";
    out += "</svg>\n";
    return out;
}

void add_region(svg_doc& doc, const region_spec& spec, const std::string& color,
                bool fill_region) {
    if (spec.point_region) {
        doc.add_marker(spec.z0, 4.0, "basepoint " + spec.kind, color, true);
        return;
    }
    if (spec.degenerate) {
        doc.add_path({spec.interval_a, spec.interval_b}, "edge interval included", color, 2.5,
                     false, "none", false);
        doc.add_marker(spec.interval_a, 3.0, "endpoint", color, spec.a_included);
        doc.add_marker(spec.interval_b, 3.0, "endpoint", color, spec.b_included);
        return;
    }
    if (fill_region) {
        const polyline outline = boundary_polyline(spec);
        doc.add_path(outline.vertices, "fill " + spec.kind, "none", 0.0, false, color, true);
    }
    for (const auto& e : spec.edges)
        doc.add_path(e.points, "edge " + e.name + (e.included ? " included" : " excluded"), color,
                     2.0, !e.included, "none", false);
    for (cx p : spec.excluded_points) doc.add_marker(p, 3.0, "excluded-point", color, false);
    doc.add_marker(spec.z0, 3.5, "basepoint " + spec.kind, color, true);
}

}  // namespace vrkit::cli
