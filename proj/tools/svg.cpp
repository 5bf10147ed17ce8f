#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <sstream>

namespace nm::cli {
namespace {

constexpr double kUnit = 60.0;  // pixels per unit

std::string number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string label(const Decoration& d) {
    std::string c;
    if (d.coefficient.imag() == 0.0) {
        c = number(d.coefficient.real());
    } else {
        c = "(" + number(d.coefficient.real()) + (d.coefficient.imag() < 0 ? "-" : "+") +
            number(std::abs(d.coefficient.imag())) + "i)";
    }
    if (d.degree == 0) return c;
    return c + "·u" + (d.degree == 1 ? std::string{} : "^" + std::to_string(d.degree));
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, const std::string& title) {
    static constexpr const char* kColours[] = {"#1f4e8c", "#b5452a", "#2d8a4e", "#7a4ea8"};
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool any = false;
    for (const auto& layer : layers) {
        for (const auto& v : layer.polygon.polygon().vertices()) {
            const double x = v.x.to_double(), y = v.y.to_double();
            if (!any) {
                xmin = xmax = x;
                ymin = ymax = y;
                any = true;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    xmin -= 1.0;
    xmax += 1.0;
    ymin -= 1.0;
    ymax += 1.0;
    const double width = (xmax - xmin) * kUnit;
    const double height = (ymax - ymin) * kUnit;
    const auto px = [&](double x) { return number((x - xmin) * kUnit); };
    const auto py = [&](double y) { return number((ymax - y) * kUnit); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << number(width) << "\" height=\"" << number(height)
        << "\" viewBox=\"0 0 " << number(width) << ' ' << number(height) << "\">\n";
    if (!title.empty()) svg << "  <title>" << title << "</title>\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes, when they cross the viewport
    svg << "  <g stroke=\"#888\" stroke-width=\"1\">\n";
    if (xmin <= 0.0 && 0.0 <= xmax) svg << "    <line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << number(height) << "\"/>\n";
    if (ymin <= 0.0 && 0.0 <= ymax) svg << "    <line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << number(width) << "\" y2=\"" << py(0) << "\"/>\n";
    svg << "  </g>\n";

    if (!any) {
        svg << "  <text x=\"8\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">empty polygon</text>\n";
        svg << "</svg>\n";
        return svg.str();
    }

    for (std::size_t i = 0; i < layers.size(); ++i) {
        const auto& vertices = layers[i].polygon.polygon().vertices();
        if (vertices.empty()) continue;
        const char* colour = kColours[i % std::size(kColours)];
        std::ostringstream path;
        path << px(vertices.front().x.to_double()) << ',' << py(ymax);
        for (const auto& v : vertices) path << ' ' << px(v.x.to_double()) << ',' << py(v.y.to_double());
        path << ' ' << px(xmax) << ',' << py(vertices.back().y.to_double());
        if (i == 0) {
            svg << "  <polygon points=\"" << path.str() << ' ' << px(xmax) << ',' << py(ymax)
                << "\" fill=\"#dde8f6\" stroke=\"none\"/>\n";
        }
        svg << "  <polyline points=\"" << path.str() << "\" fill=\"none\" stroke=\"" << colour
            << "\" stroke-width=\"2\"/>\n";
        for (const auto& v : vertices) {
            const double x = v.x.to_double();
            const double y = v.y.to_double();
            svg << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
            svg << "  <text x=\"" << number((x - xmin) * kUnit + 6) << "\" y=\"" << number((ymax - y) * kUnit + 16)
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << colour << "\">(" << v.x.str() << ", "
                << v.y.str() << ") " << label(layers[i].polygon.decoration(v)) << "</text>\n";
        }
        if (!layers[i].name.empty()) {
            svg << "  <text x=\"8\" y=\"" << number(20.0 + 16.0 * static_cast<double>(i))
                << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"" << colour << "\">" << layers[i].name
                << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace nm::cli
