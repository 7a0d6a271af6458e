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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <hypodiv/geometry.hpp>
#include <hypodiv/quadrature.hpp>

using hypodiv::BigRational;
using hypodiv::HypocycloidShape;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<HypocycloidShape> standard_shapes() {
    return {HypocycloidShape(3, 1), HypocycloidShape(4, 1), HypocycloidShape(5, 1),
            HypocycloidShape(3, 2), HypocycloidShape(5, 2), HypocycloidShape(7, 2),
            HypocycloidShape(7, 3), HypocycloidShape(8, 3)};
}

}  // namespace

TEST_CASE("quadrature examples") {
    const HypocycloidShape c3(3, 1);
    auto result = quad_arclength(c3, 0.0, 2.0 * kPi, 1e-10);
    REQUIRE(result.value == Approx(16.0).margin(1e-10));
    REQUIRE(result.error_estimate >= 0.0);
    REQUIRE(result.subdivisions >= 1);

    result = quad_arclength(c3, 0.0, 0.0, 1e-6);
    REQUIRE(result.value == 0.0);
    REQUIRE(result.subdivisions >= 1);

    const HypocycloidShape c52(5, 2);
    result = quad_arclength(c52, 0.0, 4.0 * kPi, 1e-10);
    REQUIRE(result.value == Approx(24.0).margin(1e-10));

    REQUIRE_THROWS_AS(quad_arclength(c3, -1.0, 1.0, 1e-8), std::invalid_argument);
    REQUIRE_THROWS_AS(quad_arclength(c3, 1.0, 0.5, 1e-8), std::invalid_argument);
    REQUIRE_THROWS_AS(quad_arclength(c3, 0.0, 7.0, 1e-8), std::invalid_argument);
    REQUIRE_THROWS_AS(quad_arclength(c3, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("quadrature agrees with the closed form") {
    std::mt19937_64 rng(808);
    for (const auto& shape : standard_shapes()) {
        std::uniform_real_distribution<double> angle(0.0, shape.phi_max());
        for (int i = 0; i < 100; ++i) {
            const double phi = angle(rng);
            const double numeric = quad_arclength(shape, 0.0, phi, 1e-11).value;
            const double closed = arclength_cumulative(shape, phi);
            REQUIRE(numeric == Approx(closed).margin(1e-10));
        }
    }
}

TEST_CASE("quadrature is monotone in phi") {
    for (const auto& shape : standard_shapes()) {
        double prev = 0.0;
        for (int i = 1; i <= 60; ++i) {
            const double phi = shape.phi_max() * i / 60.0;
            const double value = quad_arclength(shape, 0.0, phi, 1e-10).value;
            REQUIRE(value >= prev - 1e-12);
            prev = value;
        }
    }
}

TEST_CASE("halving the tolerance never raises the error estimate") {
    const HypocycloidShape shapes[] = {HypocycloidShape(3, 1), HypocycloidShape(7, 3)};
    for (const auto& shape : shapes) {
        for (const double phi : {0.7, 2.2, shape.phi_max() * 0.9}) {
            double tol = 1e-4;
            double prev = quad_arclength(shape, 0.0, phi, tol).error_estimate;
            for (int i = 0; i < 20; ++i) {
                tol *= 0.5;
                const double est = quad_arclength(shape, 0.0, phi, tol).error_estimate;
                REQUIRE(est <= prev);
                prev = est;
            }
        }
    }
}

TEST_CASE("numeric inversion examples") {
    const HypocycloidShape c3(3, 1);
    REQUIRE(invert_arclength_numeric(c3, 16.0, 1e-10) == Approx(2.0 * kPi).margin(1e-9));
    REQUIRE(invert_arclength_numeric(c3, 8.0, 1e-10) == Approx(kPi).margin(1e-9));

    // cross-check against the closed-form division point
    const double phi = invert_arclength_numeric(c3, 16.0 / 5.0, 1e-8);
    const auto numeric = position(c3, phi);
    const auto expected = division_points(c3, 5).points[0].point;
    REQUIRE(numeric.x == Approx(expected.x).margin(1e-6));
    REQUIRE(numeric.y == Approx(expected.y).margin(1e-6));

    REQUIRE_THROWS_AS(invert_arclength_numeric(c3, -1.0, 1e-8), std::invalid_argument);
    REQUIRE_THROWS_AS(invert_arclength_numeric(c3, 17.0, 1e-8), std::invalid_argument);
    REQUIRE_THROWS_AS(invert_arclength_numeric(c3, 8.0, -1.0), std::invalid_argument);
}

TEST_CASE("division verification examples") {
    const HypocycloidShape c3(3, 1);
    auto check = verify_division(c3, 3, 1e-8);
    REQUIRE(check.pass);
    REQUIRE(check.max_deviation < 1e-8);

    check = verify_division(c3, 1, 1e-8);
    REQUIRE(check.pass);

    // oracle-only check on a shape with no special structure
    check = verify_division(HypocycloidShape(7, 3), 11, 1e-7);
    REQUIRE(check.pass);

    REQUIRE_THROWS_AS(verify_division(c3, 0, 1e-8), std::invalid_argument);
    REQUIRE_THROWS_AS(verify_division(c3, 3, 0.0), std::invalid_argument);
}
