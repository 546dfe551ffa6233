#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "mwroute/errors.hpp"
#include "mwroute/instance.hpp"
#include "mwroute/schedule.hpp"

namespace mwroute {

/// Schematic straight-line route map, one color per vehicle. Needs the
/// instance's optional coordinates.
inline std::string render_routes_svg(const ProblemInstance& inst, const RoutePlan& plan) {
    if (inst.coordinates.empty())
        throw Error("instance carries no coordinates; cannot draw a route map");

    constexpr double width = 860.0;
    constexpr double height = 620.0;
    constexpr double margin = 40.0;
    static constexpr std::array<const char*, 8> palette{
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
        "#9467bd", "#8c564b", "#e377c2", "#17becf"};

    double min_x = inst.coordinates[0][0], max_x = min_x;
    double min_y = inst.coordinates[0][1], max_y = min_y;
    for (const auto& c : inst.coordinates) {
        min_x = std::min(min_x, c[0]);
        max_x = std::max(max_x, c[0]);
        min_y = std::min(min_y, c[1]);
        max_y = std::max(max_y, c[1]);
    }
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    const double scale =
        std::min((width - 2 * margin) / span_x, (height - 2 * margin) / span_y);
    auto px = [&](double x) { return margin + (x - min_x) * scale; };
    // flip y so north stays up
    auto py = [&](double y) { return height - margin - (y - min_y) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    int color = 0;
    for (std::size_t h = 0; h < plan.routes.size(); ++h) {
        if (!plan.used(h)) continue;
        svg << "  <polyline fill=\"none\" stroke=\"" << palette[color % palette.size()]
            << "\" stroke-width=\"2\" points=\"";
        svg << px(inst.coordinates[0][0]) << ',' << py(inst.coordinates[0][1]);
        for (int id : plan.routes[h])
            svg << ' ' << px(inst.coordinates[static_cast<std::size_t>(id)][0]) << ','
                << py(inst.coordinates[static_cast<std::size_t>(id)][1]);
        svg << ' ' << px(inst.coordinates[0][0]) << ',' << py(inst.coordinates[0][1]);
        svg << "\"/>\n";
        ++color;
    }

    for (std::size_t k = 1; k < inst.coordinates.size(); ++k) {
        const double x = px(inst.coordinates[k][0]);
        const double y = py(inst.coordinates[k][1]);
        svg << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"#333\"/>\n";
        svg << "  <text x=\"" << x + 7 << "\" y=\"" << y - 5
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << k << "</text>\n";
    }
    const double dx = px(inst.coordinates[0][0]);
    const double dy = py(inst.coordinates[0][1]);
    svg << "  <rect x=\"" << dx - 7 << "\" y=\"" << dy - 7
        << "\" width=\"14\" height=\"14\" fill=\"#000\"/>\n";
    svg << "  <text x=\"" << dx + 10 << "\" y=\"" << dy - 8
        << "\" font-size=\"12\" font-weight=\"bold\" font-family=\"sans-serif\">" << inst.depot_id
        << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace mwroute
