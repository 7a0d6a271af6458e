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

#include <cstdio>
#include <sstream>
#include <string>

#include "geometry.hpp"

namespace hypodiv {

/// 17 significant digits: enough to round-trip any 64-bit float.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Exact values (total arclength, r^2) cross the boundary as rational
/// strings, never as decimals.
inline std::string division_report_json(const DivisionReport& report) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"shape\": {\n";
    out << "    \"a\": " << report.shape.cusp_count() << ",\n";
    out << "    \"b\": " << report.shape.turn_count() << "\n";
    out << "  },\n";
    out << "  \"n\": " << report.n << ",\n";
    out << "  \"total_arclength\": \"" << report.shape.total_arclength().str() << "\",\n";
    out << "  \"degenerate\": " << (report.shape.degenerate() ? "true" : "false") << ",\n";
    out << "  \"points\": [\n";
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const DivisionPoint& p = report.points[i];
        out << "    {\n";
        out << "      \"index\": " << p.index << ",\n";
        out << "      \"phi\": " << format_double(p.arc.phi) << ",\n";
        out << "      \"cusp_index\": " << p.arc.cusp_index << ",\n";
        out << "      \"x\": " << format_double(p.point.x) << ",\n";
        out << "      \"y\": " << format_double(p.point.y) << ",\n";
        out << "      \"r\": " << format_double(p.r) << ",\n";
        out << "      \"r_squared\": \"" << p.r_squared.str() << "\"\n";
        out << "    }" << (i + 1 < report.points.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

inline std::string division_report_csv(const DivisionReport& report) {
    std::ostringstream out;
    out << "index,phi,cusp_index,x,y,r_sq_num,r_sq_den\n";
    for (const DivisionPoint& p : report.points) {
        out << p.index << ',' << format_double(p.arc.phi) << ',' << p.arc.cusp_index << ','
            << format_double(p.point.x) << ',' << format_double(p.point.y) << ','
            << p.r_squared.numerator().get_str() << ',' << p.r_squared.denominator().get_str()
            << "\n";
    }
    return out.str();
}

}  // namespace hypodiv
