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

// Command-line frontend. Exit codes: 0 success (or positive verdict),
// 1 negative verdict / failed verification, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <hypodiv/hypodiv.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

hypodiv::HypocycloidShape parse_shape(const std::string& text) {
    const hypodiv::BigRational c = hypodiv::BigRational::from_string(text);
    if (c <= hypodiv::BigRational(1))
        throw std::invalid_argument("c must be a rational number > 1 (got " + text + ")");
    hypodiv::HypocycloidShape shape(c);
    if (shape.degenerate())
        std::cerr << "warning: c = 2 is degenerate; the curve collapses to the segment [-2, 2]\n";
    return shape;
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output path: " + out_path);
    file << content;
    if (!file) throw std::invalid_argument("cannot write output path: " + out_path);
}

int run_divide(const std::string& c_text, long long n, const std::string& format,
               const std::string& out_path) {
    const hypodiv::HypocycloidShape shape = parse_shape(c_text);
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const hypodiv::DivisionReport report = hypodiv::division_points(shape, n);

    std::string content;
    if (format == "json") {
        content = hypodiv::division_report_json(report);
    } else if (format == "csv") {
        content = hypodiv::division_report_csv(report);
    } else if (format == "svg") {
        hypodiv::RenderSpec spec{shape, n};
        spec.show_division_circles = true;
        content = hypodiv::render_svg(spec);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    write_output(content, out_path);
    return kExitOk;
}

int run_polynomial(const std::string& n_text, std::uint64_t p, const std::string& out_path) {
    const hypodiv::BigRational n = hypodiv::BigRational::from_string(n_text);
    const hypodiv::RationalPolynomial cubic = hypodiv::build_division_cubic(n);
    const hypodiv::NewtonPolygon polygon = hypodiv::newton_polygon(cubic, p);

    std::string verdict;
    std::string method;
    std::string factorization;
    std::vector<hypodiv::BigRational> roots;
    if (hypodiv::irreducible_by_dumas(cubic, p) == hypodiv::DumasVerdict::irreducible) {
        verdict = "irreducible";
        method = "newton-polygon";
    } else {
        const auto sub = hypodiv::cubic_constructibility(cubic);
        verdict = sub.constructible ? "reducible" : "irreducible";
        method = "rational-roots";
        if (const auto* w = std::get_if<hypodiv::FactorizationWitness>(&sub.witness)) {
            roots = w->roots;
            std::ostringstream factors;
            factors << w->scalar.str();
            for (const auto& [factor, multiplicity] : w->factors) {
                factors << " * (" << factor.str() << ")";
                if (multiplicity > 1) factors << "^" << multiplicity;
            }
            factorization = factors.str();
        }
    }

    std::ostringstream out;
    out << "{\n";
    out << "  \"n\": \"" << n.str() << "\",\n";
    out << "  \"prime\": " << p << ",\n";
    out << "  \"polynomial\": \"" << cubic.str() << "\",\n";
    out << "  \"coefficients\": [";
    for (int i = 0; i <= cubic.degree(); ++i)
        out << (i ? ", " : "") << "\"" << cubic.coefficient(static_cast<std::size_t>(i)).str()
            << "\"";
    out << "],\n";
    out << "  \"newton_polygon\": {\n";
    out << "    \"points\": [";
    for (std::size_t i = 0; i < polygon.points.size(); ++i)
        out << (i ? ", " : "") << "[" << polygon.points[i].index << ", "
            << polygon.points[i].valuation << "]";
    out << "],\n";
    out << "    \"vertices\": [";
    for (std::size_t i = 0; i < polygon.vertices.size(); ++i)
        out << (i ? ", " : "") << "[" << polygon.vertices[i].index << ", "
            << polygon.vertices[i].valuation << "]";
    out << "],\n";
    out << "    \"segments\": [";
    for (std::size_t i = 0; i < polygon.segments.size(); ++i)
        out << (i ? ", " : "") << "{\"slope\": \"" << polygon.segments[i].slope.str()
            << "\", \"length\": " << polygon.segments[i].horizontal_length << "}";
    out << "]\n";
    out << "  },\n";
    out << "  \"verdict\": \"" << verdict << "\",\n";
    out << "  \"method\": \"" << method << "\",\n";
    out << "  \"rational_roots\": [";
    for (std::size_t i = 0; i < roots.size(); ++i)
        out << (i ? ", " : "") << "\"" << roots[i].str() << "\"";
    out << "],\n";
    out << "  \"factorization\": \"" << factorization << "\"\n";
    out << "}\n";
    write_output(out.str(), out_path);
    return kExitOk;
}

int run_constructible(std::uint64_t n, const std::string& curve) {
    hypodiv::ConstructibilityVerdict verdict;
    if (curve == "tricuspoid") {
        verdict = hypodiv::tricuspoid_division_constructible(n);
    } else if (curve == "circle") {
        verdict = hypodiv::gauss_wantzel(n);
    } else {
        throw std::invalid_argument("unknown curve: " + curve);
    }
    std::cout << "constructible: " << (verdict.constructible ? "true" : "false") << "\n";
    std::cout << "witness: " << hypodiv::witness_summary(verdict) << "\n";
    return verdict.constructible ? kExitOk : kExitNegative;
}

int run_verify(const std::string& c_text, long long n, double tol) {
    const hypodiv::HypocycloidShape shape = parse_shape(c_text);
    const hypodiv::DivisionCheck check = hypodiv::verify_division(shape, n, tol);
    std::cout << "max_deviation: " << hypodiv::format_double(check.max_deviation) << "\n";
    std::cout << "tolerance: " << hypodiv::format_double(check.tolerance) << "\n";
    std::cout << "pass: " << (check.pass ? "true" : "false") << "\n";
    return check.pass ? kExitOk : kExitNegative;
}

int run_render(const std::string& c_text, std::optional<long long> n, int width, int height,
               int samples, bool circumcircle, bool division_circles, const std::string& out_path) {
    hypodiv::RenderSpec spec{parse_shape(c_text), n, width, height, circumcircle,
                             division_circles, samples};
    write_output(hypodiv::render_svg(spec), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-division points of rational hypocycloids: exact radii, division cubics, "
                 "constructibility verdicts, and an independent quadrature check"};
    app.require_subcommand(1);

    std::string c_text;
    std::string n_text;
    long long n = 1;
    std::uint64_t n_unsigned = 1;
    std::string format = "json";
    std::string out_path;
    std::uint64_t prime = 3;
    std::string curve = "tricuspoid";
    double tol = 1e-8;
    long long width = 800, height = 800, samples = 512;
    bool circumcircle = true;
    bool division_circles = false;
    bool no_n = false;

    auto* divide = app.add_subcommand("divide", "compute the n-division points of a hypocycloid");
    divide->add_option("--c", c_text, "curve ratio c as A/B or an integer, c > 1")->required();
    divide->add_option("--n", n, "number of division points, n >= 1")->required();
    divide->add_option("--format", format, "output format: json, csv, or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    divide->add_option("--out", out_path, "output path (default: standard output)");

    auto* polynomial =
        app.add_subcommand("polynomial", "division cubic, its newton polygon, and irreducibility");
    polynomial->add_option("--n", n_text, "division count, integer or rational >= 3")->required();
    polynomial->add_option("--p", prime, "prime for the newton polygon (default 3)");
    polynomial->add_option("--out", out_path, "output path (default: standard output)");

    auto* constructible =
        app.add_subcommand("constructible", "straightedge-and-compass constructibility verdict");
    constructible->add_option("--n", n_unsigned, "division count / polygon order, n >= 1")
        ->required();
    constructible->add_option("--curve", curve, "tricuspoid or circle")
        ->check(CLI::IsMember({"tricuspoid", "circle"}));

    auto* verify = app.add_subcommand("verify", "check equal-arc division by adaptive quadrature");
    verify->add_option("--c", c_text, "curve ratio c as A/B or an integer, c > 1")->required();
    verify->add_option("--n", n, "number of division points, n >= 1")->required();
    verify->add_option("--tol", tol, "maximum allowed arc deviation (default 1e-8)");

    auto* render = app.add_subcommand("render", "render the curve and division points as SVG");
    render->add_option("--c", c_text, "curve ratio c as A/B or an integer, c > 1")->required();
    auto* render_n = render->add_option("--n", n, "number of division points to mark");
    render->add_option("--width", width, "image width in pixels (>= 100)");
    render->add_option("--height", height, "image height in pixels (>= 100)");
    render->add_option("--samples", samples, "curve samples per turn (>= 64)");
    render->add_flag("--circumcircle,!--no-circumcircle", circumcircle,
                     "draw the dashed circumcircle (default on)");
    render->add_flag("--division-circles", division_circles,
                     "draw one construction circle per division point");
    render->add_option("--out", out_path, "output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(divide)) return run_divide(c_text, n, format, out_path);
        if (app.got_subcommand(polynomial)) return run_polynomial(n_text, prime, out_path);
        if (app.got_subcommand(constructible)) return run_constructible(n_unsigned, curve);
        if (app.got_subcommand(verify)) return run_verify(c_text, n, tol);
        if (app.got_subcommand(render)) {
            no_n = render_n->count() == 0;
            return run_render(c_text, no_n ? std::nullopt : std::optional<long long>(n),
                              static_cast<int>(width), static_cast<int>(height),
                              static_cast<int>(samples), circumcircle, division_circles, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
