/*
   Copyright 2026 the hypodiv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "geometry.hpp"
#include "serialize.hpp"

namespace hypodiv {

struct RenderSpec {
    HypocycloidShape shape;
    std::optional<long long> n;
    int width = 800;
    int height = 800;
    bool show_circumcircle = true;
    bool show_division_circles = false;
    int samples = 512;  // curve samples per turn
};

/// Renders the curve into an SVG document: dashed circumcircle of radius c,
/// the curve as a polyline sampled uniformly in phi, the division points as
/// filled dots, and optionally one construction circle of radius sqrt(r^2)
/// per division point. Coordinates are in curve units; the viewBox spans
/// [-1.2c, 1.2c] on both axes with the y-axis flipped for screen space.
inline std::string render_svg(const RenderSpec& spec) {
    if (spec.samples < 64) throw std::invalid_argument("render_svg: samples must be >= 64");
    if (spec.width < 100 || spec.height < 100)
        throw std::invalid_argument("render_svg: width and height must be >= 100");
    if (spec.n && *spec.n < 1) throw std::invalid_argument("render_svg: n must be >= 1");

    const double c = spec.shape.ratio_double();
    const double half = 1.2 * c;
    const auto fmt = [](double v) { return format_double(v); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"" << fmt(-half) << " " << fmt(-half) << " "
        << fmt(2.0 * half) << " " << fmt(2.0 * half) << "\">\n";

    if (spec.show_circumcircle) {
        out << "  <circle class=\"circumcircle\" cx=\"0\" cy=\"0\" r=\"" << fmt(c)
            << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" << fmt(0.01 * c)
            << "\" stroke-dasharray=\"" << fmt(0.05 * c) << " " << fmt(0.05 * c) << "\"/>\n";
    }

    const long long total = static_cast<long long>(spec.samples) * spec.shape.turn_count();
    out << "  <polyline class=\"curve\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
        << fmt(0.012 * c) << "\" points=\"";
    for (long long i = 0; i <= total; ++i) {
        const double phi = spec.shape.phi_max() * static_cast<double>(i) / static_cast<double>(total);
        const PlanePoint p = position(spec.shape, phi);
        out << (i ? " " : "") << fmt(p.x) << "," << fmt(-p.y);
    }
    out << "\"/>\n";

    if (spec.n) {
        const DivisionReport report = division_points(spec.shape, *spec.n);
        if (spec.show_division_circles) {
            for (const DivisionPoint& p : report.points) {
                out << "  <circle class=\"division-circle\" cx=\"0\" cy=\"0\" r=\""
                    << fmt(std::sqrt(p.r_squared.to_double()))
                    << "\" fill=\"none\" stroke=\"#3366cc\" stroke-width=\"" << fmt(0.008 * c)
                    << "\"/>\n";
            }
        }
        for (const DivisionPoint& p : report.points) {
            out << "  <circle class=\"division-point\" cx=\"" << fmt(p.point.x) << "\" cy=\""
                << fmt(-p.point.y) << "\" r=\"" << fmt(0.035 * c) << "\" fill=\"#cc3333\"/>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace hypodiv
