#ifndef GRIDLOC_SVG_HPP
#define GRIDLOC_SVG_HPP

#include <string>

#include "verify.hpp"

namespace gridloc {

// Renders a dim-2 drawing: edges as lines, vertices as filled circles and
// the extra grid points on non-primitive segments as empty circles.
std::string render_drawing_svg(const GridDrawing& dr);

}  // namespace gridloc

#endif
