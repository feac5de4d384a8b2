#pragma once

#include <string>

namespace vrkit::cli {

// renders one of the five built-in plates (fig1, fig2, fig4, fig5, fig6) as a
// complete SVG document; throws out_of_range for unknown names
std::string render_figure(const std::string& name);

}  // namespace vrkit::cli
