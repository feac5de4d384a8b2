#pragma once

#include <string>
#include <vector>

#include "vrkit/region.hpp"

namespace vrkit::cli {

// minimal SVG builder over a fixed world-to-pixel viewport
struct svg_doc {
    double x0, y0, x1, y1;  // world window (y up)
    int width, height;      // pixel canvas
    std::vector<std::string> elements;

    svg_doc(double wx0, double wy0, double wx1, double wy1, int w, int h);

    // unit disc framed [-1.1, 1.1]^2
    static svg_doc disc_frame();
    // upper half-plane framed [-0.5, 4.5] x [0, 4]
    static svg_doc halfplane_frame();

    double px(double x) const;
    double py(double y) const;

    void add_path(const std::vector<cx>& pts, const std::string& cls, const std::string& stroke,
                  double stroke_width, bool dashed, const std::string& fill, bool close);
    void add_marker(cx center, double radius_px, const std::string& cls, const std::string& color,
                    bool filled);
    void add_unit_circle();
    void add_axes();

    std::string str() const;
};

// draws a region's fill (optional), edges (dashed when excluded), excluded
// points (open markers) and base point (filled marker)
void add_region(svg_doc& doc, const region_spec& spec, const std::string& color,
                bool fill_region);

}  // namespace vrkit::cli
