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
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace hypodiv {

/// The scaled hypocycloid with ratio c = a/b > 1 in lowest terms: a circle of
/// radius 1 rolling inside a circle of radius c, tracing a marked point.
/// The curve has a cusps and closes after b turns (phi in [0, 2*pi*b]).
///
/// Closed forms used throughout (phi is the tangential angle):
///   x(phi) = (c-1) cos(phi) + cos((c-1) phi)
///   y(phi) = (c-1) sin(phi) - sin((c-1) phi)
///   r(phi) = sqrt(c^2 - 2c + 2 + 2(c-1) cos(c phi))
///   |d/dphi (x, y)| = 2(c-1) |sin(c phi / 2)|
///   arclength over one cusp arc: s(phi) = (8(c-1)/c) sin^2(c phi / 4)
/// Total arclength is 8 b (c-1) = 8 (a-b), an exact integer.
class HypocycloidShape {
public:
    HypocycloidShape(long long a, long long b) {
        if (a <= 0 || b <= 0)
            throw std::invalid_argument("HypocycloidShape: a and b must be positive");
        const long long g = std::gcd(a, b);
        a_ = a / g;
        b_ = b / g;
        if (a_ <= b_)
            throw std::invalid_argument("HypocycloidShape: requires c = a/b > 1");
        c_ = BigRational(a_, b_);
        c_double_ = static_cast<double>(a_) / static_cast<double>(b_);
    }

    explicit HypocycloidShape(const BigRational& ratio)
        : HypocycloidShape(to_ll(ratio.numerator(), "numerator"),
                           to_ll(ratio.denominator(), "denominator")) {}

    long long cusp_count() const { return a_; }
    long long turn_count() const { return b_; }
    const BigRational& ratio() const { return c_; }
    double ratio_double() const { return c_double_; }

    /// c = 2 collapses the curve onto the segment [-2, 2], traced twice.
    bool degenerate() const { return a_ == 2 && b_ == 1; }

    /// 8 b (c-1), exact.
    BigRational total_arclength() const { return BigRational(8 * (a_ - b_)); }

    /// 8 (c-1) / c = 8 (a-b) / a, exact; the length of one cusp-to-cusp arc.
    BigRational cusp_arc_length() const { return BigRational(8 * (a_ - b_), a_); }

    /// Parameter range end: 2 pi b.
    double phi_max() const { return 2.0 * std::numbers::pi * static_cast<double>(b_); }

    /// Angular width of one cusp arc: 2 pi / c.
    double cusp_arc_angle() const {
        return 2.0 * std::numbers::pi * static_cast<double>(b_) / static_cast<double>(a_);
    }

    /// Angle of the k-th cusp boundary, 2 pi k b / a.
    double cusp_boundary_angle(long long k) const {
        return 2.0 * std::numbers::pi *
               (static_cast<double>(k) * static_cast<double>(b_) / static_cast<double>(a_));
    }

private:
    static long long to_ll(const BigInt& z, const char* what) {
        if (!z.fits_slong_p())
            throw std::invalid_argument(std::string("HypocycloidShape: ") + what +
                                        " exceeds supported range");
        return z.get_si();
    }

    long long a_ = 0;
    long long b_ = 0;
    BigRational c_;
    double c_double_ = 0.0;
};

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

/// A position on the curve: global tangential angle plus its decomposition
/// into a cusp arc index and a local offset. The local arclength is exact.
struct ArcPosition {
    double phi = 0.0;
    long long cusp_index = 0;
    double local_phi = 0.0;
    BigRational local_arclength;
};

struct DivisionPoint {
    long long index = 0;  // d in 1..n
    ArcPosition arc;
    PlanePoint point;
    BigRational r_squared;  // exact squared polar radius
    double r = 0.0;         // Euclidean norm of the floating coordinates
};

struct DivisionReport {
    HypocycloidShape shape;
    long long n = 0;
    std::vector<DivisionPoint> points;
};

namespace detail {

inline void require_finite(double phi) {
    if (!std::isfinite(phi)) throw std::invalid_argument("angle must be finite");
}

/// Splits an exact arclength s in [0, total] into (cusp_index, fraction of one
/// arc). Boundary points other than s = 0 are closed on the right: they belong
/// to the arc they terminate, with fraction 1. Keeps cusp_index in [0, a).
struct ArcSplit {
    long long cusp_index;
    BigRational fraction;  // s_local / arc_length, in [0, 1]
};

inline ArcSplit split_arclength(const HypocycloidShape& shape, const BigRational& s) {
    const BigRational t = s / shape.cusp_arc_length();
    BigInt k = t.floor();
    BigRational fraction = t - BigRational(k);
    if (fraction.is_zero() && k > 0) {
        k -= 1;
        fraction = BigRational(1);
    }
    return {k.get_si(), fraction};
}

}  // namespace detail

/// Curve point at tangential angle phi.
inline PlanePoint position(const HypocycloidShape& shape, double phi) {
    detail::require_finite(phi);
    const double c = shape.ratio_double();
    return {(c - 1.0) * std::cos(phi) + std::cos((c - 1.0) * phi),
            (c - 1.0) * std::sin(phi) - std::sin((c - 1.0) * phi)};
}

/// Distance from the origin: sqrt(c^2 - 2c + 2 + 2(c-1) cos(c phi)).
inline double polar_radius(const HypocycloidShape& shape, double phi) {
    detail::require_finite(phi);
    const double c = shape.ratio_double();
    const double sq = c * c - 2.0 * c + 2.0 + 2.0 * (c - 1.0) * std::cos(c * phi);
    return std::sqrt(std::max(sq, 0.0));
}

/// |d/dphi position| = 2(c-1)|sin(c phi / 2)|; vanishes exactly at cusps.
inline double speed(const HypocycloidShape& shape, double phi) {
    detail::require_finite(phi);
    const double c = shape.ratio_double();
    return 2.0 * (c - 1.0) * std::abs(std::sin(c * phi / 2.0));
}

/// Arclength from the base point along the first cusp arc, phi in [0, 2 pi / c].
inline double arclength_local(const HypocycloidShape& shape, double phi) {
    detail::require_finite(phi);
    const double arc_angle = shape.cusp_arc_angle();
    if (phi < -1e-12 || phi > arc_angle + 1e-12)
        throw std::invalid_argument("arclength_local: phi outside [0, 2*pi/c]");
    phi = std::clamp(phi, 0.0, arc_angle);
    const double c = shape.ratio_double();
    const double s = std::sin(c * phi / 4.0);
    return (8.0 * (c - 1.0) / c) * s * s;
}

/// Arclength from the base point, phi in [0, 2 pi b]; piecewise extension of
/// the single-arc closed form.
inline double arclength_cumulative(const HypocycloidShape& shape, double phi) {
    detail::require_finite(phi);
    if (phi < -1e-12 || phi > shape.phi_max() + 1e-9)
        throw std::invalid_argument("arclength_cumulative: phi outside [0, 2*pi*b]");
    phi = std::clamp(phi, 0.0, shape.phi_max());
    const double arc_angle = shape.cusp_arc_angle();
    long long k = static_cast<long long>(std::floor(phi / arc_angle));
    k = std::clamp(k, 0LL, shape.cusp_count() - 1);
    const double local = std::clamp(phi - static_cast<double>(k) * arc_angle, 0.0, arc_angle);
    const double arc_len = shape.cusp_arc_length().to_double();
    return static_cast<double>(k) * arc_len + arclength_local(shape, local);
}

/// Inverts the arclength map. The cusp index and local arclength are exact;
/// only the angle evaluation is floating point. s must lie in [0, 8b(c-1)].
inline ArcPosition invert_arclength(const HypocycloidShape& shape, const BigRational& s) {
    if (s.sign() < 0 || s > shape.total_arclength())
        throw std::invalid_argument("invert_arclength: s outside [0, total arclength]");
    const auto split = detail::split_arclength(shape, s);
    const double b = static_cast<double>(shape.turn_count());
    const double a = static_cast<double>(shape.cusp_count());
    // local phi = (4/c) asin(sqrt(s_local / arc_length))
    const double local_phi =
        (4.0 * b / a) * std::asin(std::sqrt(split.fraction.to_double()));
    const double phi = static_cast<double>(split.cusp_index) * shape.cusp_arc_angle() + local_phi;
    return {phi, split.cusp_index, local_phi, split.fraction * shape.cusp_arc_length()};
}

/// Exact squared polar radius of the d-th n-division point.
/// With u = 1 - 2 (s_local / arc_length):  r^2 = c^2 - 2c + 2 + 2(c-1)(2u^2 - 1).
inline BigRational division_radius_sq_exact(const HypocycloidShape& shape, long long n,
                                            long long d) {
    if (n < 1) throw std::invalid_argument("division_radius_sq_exact: n must be >= 1");
    if (d < 1 || d > n) throw std::invalid_argument("division_radius_sq_exact: d outside 1..n");
    // s/arc_length = a d / n, exactly
    const BigRational t(BigInt(BigInt(static_cast<long>(shape.cusp_count())) *
                               static_cast<long>(d)),
                        BigInt(static_cast<long>(n)));
    BigInt k = t.floor();
    BigRational fraction = t - BigRational(k);
    if (fraction.is_zero() && k > 0) fraction = BigRational(1);
    const BigRational u = BigRational(1) - BigRational(2) * fraction;
    const BigRational& c = shape.ratio();
    return c * c - BigRational(2) * c + BigRational(2) +
           BigRational(2) * (c - BigRational(1)) *
               (BigRational(2) * u * u - BigRational(1));
}

/// The n points that split the curve into n arcs of equal length, measured
/// from the base point (c, 0). Point d sits at cumulative arclength d/n of
/// the total; point n is the base point itself.
inline DivisionReport division_points(const HypocycloidShape& shape, long long n) {
    if (n < 1) throw std::invalid_argument("division_points: n must be >= 1");
    DivisionReport report{shape, n, {}};
    report.points.reserve(static_cast<std::size_t>(n));
    for (long long d = 1; d <= n; ++d) {
        const BigRational s = shape.total_arclength() * BigRational(d, n);
        DivisionPoint p;
        p.index = d;
        p.arc = invert_arclength(shape, s);
        p.point = position(shape, p.arc.phi);
        p.r_squared = division_radius_sq_exact(shape, n, d);
        p.r = std::hypot(p.point.x, p.point.y);
        report.points.push_back(std::move(p));
    }
    return report;
}

}  // namespace hypodiv
