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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"

namespace hypodiv {

/// Independent numerical arclength, used to validate the closed forms.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long long subdivisions = 1;
};

struct DivisionCheck {
    long long n = 0;
    double tolerance = 0.0;
    double max_deviation = 0.0;
    bool pass = false;
};

namespace detail {

template <typename F>
double composite_simpson(const F& f, double a, double b, long long panels) {
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (long long i = 0; i < panels; ++i) {
        const double x0 = a + static_cast<double>(i) * h;
        const double x1 = x0 + h;
        sum += (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1)) * (h / 6.0);
    }
    return sum;
}

// Panel doubling with Richardson extrapolation; the integrand is smooth on
// each cusp-free segment, so the error estimate |S_2n - S_n| / 15 contracts
// by ~16 per level until roundoff.
template <typename F>
void integrate_segment(const F& f, double a, double b, double tol, QuadratureResult& acc) {
    if (!(b > a)) return;
    constexpr long long kMaxPanels = 1LL << 20;
    long long panels = 8;
    double prev = composite_simpson(f, a, b, panels);
    for (;;) {
        panels *= 2;
        const double cur = composite_simpson(f, a, b, panels);
        const double est = std::abs(cur - prev) / 15.0;
        if (est <= tol || panels >= kMaxPanels) {
            acc.value += cur + (cur - prev) / 15.0;
            acc.error_estimate += est;
            acc.subdivisions += panels;
            return;
        }
        prev = cur;
    }
}

}  // namespace detail

/// Adaptive quadrature of the curve speed over [phi0, phi1]. The interval is
/// split at cusp boundaries first; the speed has a |sin|-type kink there.
inline QuadratureResult quad_arclength(const HypocycloidShape& shape, double phi0, double phi1,
                                       double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("quad_arclength: tol must be positive");
    const double phimax = shape.phi_max();
    if (!(phi0 >= -1e-12 && phi0 <= phi1 && phi1 <= phimax + 1e-9))
        throw std::invalid_argument("quad_arclength: range outside [0, 2*pi*b]");
    phi0 = std::clamp(phi0, 0.0, phimax);
    phi1 = std::clamp(phi1, 0.0, phimax);

    QuadratureResult result;
    result.subdivisions = 0;
    if (phi1 > phi0) {
        std::vector<double> cuts{phi0};
        for (long long k = 1; k <= shape.cusp_count() * shape.turn_count(); ++k) {
            const double boundary = shape.cusp_boundary_angle(k);
            if (boundary > phi0 + 1e-14 && boundary < phi1 - 1e-14) cuts.push_back(boundary);
        }
        cuts.push_back(phi1);

        const auto f = [&shape](double x) { return speed(shape, x); };
        const double total = phi1 - phi0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double seg_tol = tol * (cuts[i + 1] - cuts[i]) / total;
            detail::integrate_segment(f, cuts[i], cuts[i + 1], seg_tol, result);
        }
    }
    if (result.subdivisions < 1) result.subdivisions = 1;
    return result;
}

/// Bisection on the monotone map phi -> quad_arclength(0, phi), independent of
/// the closed-form inversion. Returns the angle once the bracket is below tol.
inline double invert_arclength_numeric(const HypocycloidShape& shape, double s, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("invert_arclength_numeric: tol must be positive");
    const double total = shape.total_arclength().to_double();
    if (s < -1e-12 || s > total + 1e-9)
        throw std::invalid_argument("invert_arclength_numeric: s outside [0, total arclength]");
    s = std::clamp(s, 0.0, total);

    const double qtol = std::min(tol, 1e-12);
    double lo = 0.0;
    double hi = shape.phi_max();
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double got = quad_arclength(shape, 0.0, mid, qtol).value;
        if (got < s)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Measures every consecutive division arc by quadrature (wrapping around from
/// point n back to point 1) and reports the worst deviation from total/n.
inline DivisionCheck verify_division(const HypocycloidShape& shape, long long n, double tol) {
    if (n < 1) throw std::invalid_argument("verify_division: n must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("verify_division: tol must be positive");

    const DivisionReport report = division_points(shape, n);
    const double target = (shape.total_arclength() / BigRational(n)).to_double();
    const double qtol = tol * 1e-2;

    DivisionCheck check{n, tol, 0.0, false};
    double prev_phi = 0.0;  // point n is the base point, so the wraparound arc starts at 0
    for (const DivisionPoint& p : report.points) {
        const double length = quad_arclength(shape, prev_phi, p.arc.phi, qtol).value;
        check.max_deviation = std::max(check.max_deviation, std::abs(length - target));
        prev_phi = p.arc.phi;
    }
    check.pass = check.max_deviation <= tol;
    return check;
}

}  // namespace hypodiv
