#include "tropmin/svg.hpp"

#include <sstream>

namespace tropmin {

std::string render_svg(const std::vector<std::pair<PlanarComplex, std::string>>& layers,
                       int size_px)
{
    // viewport: vertex bounding box with margin 2
    Rational xmin(-1), xmax(1), ymin(-1), ymax(1);
    bool first = true;
    for (const auto& [x, color] : layers) {
        for (const auto& v : x.vertices) {
            if (first) {
                xmin = xmax = v.x;
                ymin = ymax = v.y;
                first = false;
            }
            xmin = std::min(xmin, v.x);
            xmax = std::max(xmax, v.x);
            ymin = std::min(ymin, v.y);
            ymax = std::max(ymax, v.y);
        }
    }
    xmin -= 2;
    ymin -= 2;
    xmax += 2;
    ymax += 2;
    double span_x = static_cast<double>(xmax - xmin);
    double span_y = static_cast<double>(ymax - ymin);
    double span = std::max(span_x, span_y);
    double scale = size_px / span;
    auto px = [&](const Vec2& p) {
        double sx = (static_cast<double>(p.x - xmin)) * scale;
        double sy = size_px - (static_cast<double>(p.y - ymin)) * scale;
        return std::make_pair(sx, sy);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px
        << "\" height=\"" << size_px << "\" viewBox=\"0 0 " << size_px << " " << size_px
        << "\">\n";
    for (const auto& [x, color] : layers) {
        for (const auto& e : x.edges) {
            Vec2 a = x.vertices[e.a];
            Vec2 b;
            if (e.kind == PCEdge::Segment) {
                b = x.vertices[e.b];
            } else {
                // extend the ray far past the viewport
                Rational len = (xmax - xmin) + (ymax - ymin);
                b = a + e.dir * len;
            }
            auto [ax, ay] = px(a);
            auto [bx, by] = px(b);
            double width = std::min(6.0, 1.0 + static_cast<double>(e.w.lambda));
            out << "  <line x1=\"" << ax << "\" y1=\"" << ay << "\" x2=\"" << bx
                << "\" y2=\"" << by << "\" stroke=\"" << color << "\" stroke-width=\""
                << width << "\"/>\n";
        }
        for (const auto& v : x.vertices) {
            auto [cx, cy] = px(v);
            out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\""
                << color << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tropmin
