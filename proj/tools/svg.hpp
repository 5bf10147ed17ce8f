#pragma once

#include <string>
#include <vector>

#include "newton_mellin/newton.hpp"

namespace nm::cli {

struct SvgLayer {
    DecoratedPolygon polygon;
    std::string name;
};

/// Standalone SVG drawing of decorated polygons: axes, each staircase
/// boundary, a dot per vertex and its c*u^l label. The viewport is the
/// bounding box of all vertices widened by one unit on every side. Only
/// the first layer is filled.
std::string render_svg(const std::vector<SvgLayer>& layers, const std::string& title = {});

inline std::string render_svg(const DecoratedPolygon& polygon, const std::string& title = {}) {
    return render_svg({SvgLayer{polygon, {}}}, title);
}

}  // namespace nm::cli
