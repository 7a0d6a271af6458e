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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "numtheory.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace hypodiv {

struct PolygonPoint {
    long long index = 0;      // coefficient index i
    long long valuation = 0;  // v_p(a_i)
};

struct PolygonSegment {
    BigRational slope;          // exact, in lowest terms
    long long horizontal_length = 0;
};

/// Newton polygon of a polynomial at a prime p: the lower convex hull of
/// (i, v_p(a_i)) over the nonzero coefficients of the primitive integer form.
/// Segment slopes are strictly increasing left to right.
struct NewtonPolygon {
    std::uint64_t prime = 0;
    std::vector<PolygonPoint> points;
    std::vector<PolygonPoint> vertices;
    std::vector<PolygonSegment> segments;
};

inline NewtonPolygon newton_polygon(const RationalPolynomial& poly, std::uint64_t p) {
    if (poly.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");
    if (!is_prime(p)) throw std::invalid_argument("newton_polygon: p is not prime");

    const RationalPolynomial primitive = poly.primitive_integer_form();

    NewtonPolygon polygon;
    polygon.prime = p;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(primitive.degree()); ++i) {
        const BigRational& c = primitive.coefficient(i);
        if (c.is_zero()) continue;
        polygon.points.push_back(
            {static_cast<long long>(i), padic_valuation(c, p).value()});
    }

    // Lower hull, monotone chain; collinear interior points are not vertices.
    auto cross = [](const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
        return (a.index - o.index) * (b.valuation - o.valuation) -
               (a.valuation - o.valuation) * (b.index - o.index);
    };
    for (const PolygonPoint& pt : polygon.points) {
        auto& hull = polygon.vertices;
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }

    for (std::size_t i = 0; i + 1 < polygon.vertices.size(); ++i) {
        const PolygonPoint& v0 = polygon.vertices[i];
        const PolygonPoint& v1 = polygon.vertices[i + 1];
        polygon.segments.push_back({BigRational(v1.valuation - v0.valuation, v1.index - v0.index),
                                    v1.index - v0.index});
    }
    return polygon;
}

enum class DumasVerdict {
    irreducible,
    indeterminate,  // no conclusion; NOT evidence of reducibility
};

/// Eisenstein-Dumas criterion: a Newton polygon that is a single descending
/// segment of slope -h/d in lowest terms with d equal to the degree forces
/// every p-adic factor degree to be a multiple of d, hence irreducibility
/// over the rationals.
inline DumasVerdict irreducible_by_dumas(const RationalPolynomial& poly, std::uint64_t p) {
    if (poly.degree() < 2)
        throw std::invalid_argument("irreducible_by_dumas: degree must be >= 2");
    if (poly.coefficient(0).is_zero())
        throw std::invalid_argument(
            "irreducible_by_dumas: zero constant term (deflate the power of x first)");

    const NewtonPolygon polygon = newton_polygon(poly, p);
    if (polygon.segments.size() != 1) return DumasVerdict::indeterminate;
    const BigRational& slope = polygon.segments.front().slope;
    if (slope.sign() >= 0) return DumasVerdict::indeterminate;
    if (slope.denominator() != poly.degree()) return DumasVerdict::indeterminate;
    return DumasVerdict::irreducible;
}

}  // namespace hypodiv
