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
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geometry.hpp"
#include "newton_polygon.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace hypodiv {

/// The cubic whose real root is the x-coordinate of the first n-division
/// point of the tricuspoid (c = 3). Defined for rational n >= 3; below that
/// the first division point leaves the first cusp arc and the derivation
/// breaks down.
inline RationalPolynomial build_division_cubic(const BigRational& n) {
    if (n < BigRational(3))
        throw std::domain_error(
            "build_division_cubic: defined only for n >= 3 "
            "(the first division point must lie on the first cusp arc)");
    const BigRational n2 = n * n;
    const BigRational n3 = n2 * n;
    const BigRational n4 = n2 * n2;
    const BigRational a3 = BigRational(4) * n4;
    const BigRational a1 =
        -(BigRational(27) * n4 - BigRational(288) * n3 + BigRational(864) * n2);
    const BigRational a0 = -(BigRational(27) * n4 - BigRational(432) * n3 +
                             BigRational(2448) * n2 - BigRational(6912) * n + BigRational(10368));
    return RationalPolynomial({a0, a1, BigRational(0), a3});
}

// ---------------------------------------------------------------------------
// Witnesses: every verdict carries machine-checkable evidence that an
// independent routine (verify_witness below) can re-verify without trusting
// the classifier.
// ---------------------------------------------------------------------------

/// n = 1, 2: the division points have explicit rational coordinates.
struct DirectConstructionWitness {
    std::vector<std::pair<BigRational, BigRational>> points;  // (x, y), exact
};

/// Rational-root factorization: polynomial == scalar * prod(factor^multiplicity).
struct FactorizationWitness {
    RationalPolynomial polynomial;
    BigRational scalar;
    std::vector<std::pair<RationalPolynomial, unsigned>> factors;
    std::vector<BigRational> roots;  // rational roots with multiplicity
};

/// Newton-polygon certificate of irreducibility at a prime.
struct DumasWitness {
    RationalPolynomial polynomial;
    std::uint64_t prime = 0;
    NewtonPolygon polygon;
    BigRational slope;
};

/// A cubic with no rational root is irreducible; the checker re-runs the
/// divisor enumeration.
struct RationalRootExhaustionWitness {
    RationalPolynomial polynomial;
};

using IrreducibilityWitness = std::variant<DumasWitness, RationalRootExhaustionWitness>;

/// Divisor reduction: the m-division points are a subset of the n-division
/// points whenever m | n, so non-constructibility reduces along the chain.
struct ReductionWitness {
    std::vector<std::uint64_t> chain;  // starts at the queried n, ends at the reduced target
    IrreducibilityWitness terminal;    // irreducibility of the target's division cubic
};

struct GaussWantzelWitness {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> factorization;
};

using Witness = std::variant<DirectConstructionWitness, FactorizationWitness, DumasWitness,
                             RationalRootExhaustionWitness, ReductionWitness, GaussWantzelWitness>;

enum class QueryKind {
    cubic,       // constructibility of the real roots of a given cubic
    tricuspoid,  // n-division points of the tricuspoid, no pre-drawn curve
    circle,      // regular n-gon
};

struct ConstructibilityVerdict {
    QueryKind kind = QueryKind::cubic;
    std::uint64_t n = 0;  // tricuspoid / circle queries
    bool constructible = false;
    Witness witness;
};

// ---------------------------------------------------------------------------
// Classifiers
// ---------------------------------------------------------------------------

namespace detail {

inline FactorizationWitness factorization_witness(const RationalPolynomial& poly,
                                                  const std::vector<BigRational>& roots) {
    FactorizationWitness w;
    w.polynomial = poly;
    w.roots = roots;
    RationalPolynomial remaining = poly;
    w.scalar = BigRational(1);

    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i;
        while (j < roots.size() && roots[j] == roots[i]) ++j;
        const unsigned multiplicity = static_cast<unsigned>(j - i);
        // primitive linear factor q x - p for the root p/q
        const RationalPolynomial linear({BigRational(BigInt(-roots[i].numerator())),
                                         BigRational(roots[i].denominator())});
        w.factors.emplace_back(linear, multiplicity);
        for (unsigned k = 0; k < multiplicity; ++k) {
            auto [quot, rem] = remaining.divmod(linear);
            if (!rem.is_zero()) throw std::logic_error("factorization: inexact deflation");
            remaining = std::move(quot);
        }
        i = j;
    }

    if (remaining.degree() == 0) {
        w.scalar = remaining.coefficient(0);
    } else {
        BigRational scale;
        RationalPolynomial primitive = remaining.primitive_integer_form(&scale);
        if (primitive.leading().sign() < 0) {
            primitive = BigRational(-1) * primitive;
            scale = -scale;
        }
        w.factors.emplace_back(primitive, 1);
        w.scalar = scale;
    }
    return w;
}

/// Primes worth trying for a Dumas certificate: the prime factors of the
/// primitive constant term (a descending segment needs v_p(a_0) > 0).
inline std::vector<std::uint64_t> dumas_candidate_primes(const RationalPolynomial& poly) {
    const RationalPolynomial primitive = poly.primitive_integer_form();
    const BigInt constant = primitive.coefficient(0).numerator();
    if (!constant.fits_slong_p()) return {};
    std::vector<std::uint64_t> primes;
    for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(std::abs(constant.get_si()))))
        primes.push_back(p);
    return primes;
}

}  // namespace detail

/// Decides whether the real roots of a cubic are straightedge-and-compass
/// constructible. A cubic with a rational root splits off a linear factor, so
/// every real root lies in an extension of degree <= 2; a cubic with no
/// rational root is irreducible and its real roots are not constructible.
inline ConstructibilityVerdict cubic_constructibility(const RationalPolynomial& poly) {
    if (poly.degree() != 3)
        throw std::invalid_argument("cubic_constructibility: degree must be exactly 3");

    ConstructibilityVerdict verdict;
    verdict.kind = QueryKind::cubic;

    const std::vector<BigRational> roots = rational_roots(poly);
    if (!roots.empty()) {
        verdict.constructible = true;
        verdict.witness = detail::factorization_witness(poly, roots);
        return verdict;
    }

    verdict.constructible = false;
    if (!poly.coefficient(0).is_zero()) {
        for (const std::uint64_t p : detail::dumas_candidate_primes(poly)) {
            if (irreducible_by_dumas(poly, p) == DumasVerdict::irreducible) {
                const NewtonPolygon polygon = newton_polygon(poly, p);
                verdict.witness = DumasWitness{poly, p, polygon, polygon.segments.front().slope};
                return verdict;
            }
        }
    }
    // Dumas gave no certificate; the exhaustive rational-root search above is
    // itself a complete irreducibility proof for cubics.
    verdict.witness = RationalRootExhaustionWitness{poly};
    return verdict;
}

/// n-division points of the tricuspoid with no pre-drawn curve: constructible
/// exactly when n divides 6.
inline ConstructibilityVerdict tricuspoid_division_constructible(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("tricuspoid_division_constructible: n must be positive");

    ConstructibilityVerdict verdict;
    verdict.kind = QueryKind::tricuspoid;
    verdict.n = n;

    if (n == 1 || n == 2) {
        // explicit coordinates in division order; point n is the base point
        DirectConstructionWitness w;
        if (n == 2) w.points.emplace_back(BigRational(-1), BigRational(0));
        w.points.emplace_back(BigRational(3), BigRational(0));
        verdict.constructible = true;
        verdict.witness = std::move(w);
        return verdict;
    }

    if (n == 3 || n == 6) {
        const RationalPolynomial cubic = build_division_cubic(BigRational(static_cast<long>(n)));
        ConstructibilityVerdict sub = cubic_constructibility(cubic);
        if (!sub.constructible) throw std::logic_error("division cubic must factor for n | 6");
        verdict.constructible = true;
        verdict.witness = std::move(sub.witness);
        return verdict;
    }

    verdict.constructible = false;
    if (n % 3 != 0) {
        const RationalPolynomial cubic = build_division_cubic(BigRational(static_cast<long>(n)));
        if (irreducible_by_dumas(cubic, 3) == DumasVerdict::irreducible) {
            const NewtonPolygon polygon = newton_polygon(cubic, 3);
            verdict.witness = DumasWitness{cubic, 3, polygon, polygon.segments.front().slope};
        } else {
            ConstructibilityVerdict sub = cubic_constructibility(cubic);
            if (sub.constructible) throw std::logic_error("division cubic reducible off n | 6");
            verdict.witness = std::move(sub.witness);
        }
        return verdict;
    }

    // n = 3^e m with gcd(m, 3) = 1 and n > 6: reduce to the m-division points
    // when m > 2, otherwise to the 9-division points (n is a multiple of 9).
    std::uint64_t m = n;
    while (m % 3 == 0) m /= 3;
    const std::uint64_t target = m > 2 ? m : 9;

    const RationalPolynomial cubic = build_division_cubic(BigRational(static_cast<long>(target)));
    IrreducibilityWitness terminal;
    if (irreducible_by_dumas(cubic, 3) == DumasVerdict::irreducible) {
        const NewtonPolygon polygon = newton_polygon(cubic, 3);
        terminal = DumasWitness{cubic, 3, polygon, polygon.segments.front().slope};
    } else {
        if (!rational_roots(cubic).empty())
            throw std::logic_error("division cubic reducible off n | 6");
        terminal = RationalRootExhaustionWitness{cubic};
    }

    ReductionWitness w;
    w.chain.push_back(n);
    if (target != n) w.chain.push_back(target);
    w.terminal = std::move(terminal);
    verdict.witness = std::move(w);
    return verdict;
}

/// Regular n-gon constructibility: n = 2^k times distinct Fermat primes.
inline ConstructibilityVerdict gauss_wantzel(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("gauss_wantzel: n must be positive");

    ConstructibilityVerdict verdict;
    verdict.kind = QueryKind::circle;
    verdict.n = n;

    GaussWantzelWitness w;
    w.n = n;
    w.factorization = factorize(n);

    verdict.constructible = true;
    for (const auto& [p, e] : w.factorization) {
        if (p == 2) continue;
        if (e != 1 || !is_fermat_prime(p)) {
            verdict.constructible = false;
            break;
        }
    }
    verdict.witness = std::move(w);
    return verdict;
}

/// Picks the root matching a division point's floating x-coordinate: minimal
/// absolute difference, exact distance ties broken toward the smaller root,
/// near-ties (within 1e-9) rejected as ambiguous.
inline BigRational select_division_root(const std::vector<BigRational>& roots, double x) {
    if (roots.empty()) throw std::invalid_argument("select_division_root: no roots");
    std::vector<BigRational> unique = roots;
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    std::size_t best = 0;
    double best_dist = std::abs(unique[0].to_double() - x);
    for (std::size_t i = 1; i < unique.size(); ++i) {
        const double dist = std::abs(unique[i].to_double() - x);
        if (dist < best_dist) {
            best = i;
            best_dist = dist;
        }
    }
    for (std::size_t i = 0; i < unique.size(); ++i) {
        if (i == best) continue;
        const double dist = std::abs(unique[i].to_double() - x);
        if (dist == best_dist && unique[i] < unique[best]) best = i;  // exact tie: smaller root
    }
    for (std::size_t i = 0; i < unique.size(); ++i) {
        if (i == best) continue;
        const double dist = std::abs(unique[i].to_double() - x);
        if (dist != best_dist && dist - best_dist <= 1e-9)
            throw std::runtime_error("select_division_root: ambiguous match");
    }
    return unique[best];
}

// ---------------------------------------------------------------------------
// Independent witness checking
// ---------------------------------------------------------------------------

namespace detail {

inline bool check_factorization(const FactorizationWitness& w, bool expect_linear) {
    RationalPolynomial product = RationalPolynomial::constant(w.scalar);
    bool has_linear = false;
    for (const auto& [factor, multiplicity] : w.factors) {
        if (factor.degree() == 1) has_linear = true;
        product = product * factor.pow(multiplicity);
    }
    if (product != w.polynomial) return false;
    if (expect_linear && !has_linear) return false;
    for (const auto& root : w.roots)
        if (!w.polynomial.evaluate(root).is_zero()) return false;
    return true;
}

/// Re-verifies a Dumas certificate from scratch: the recorded points must
/// match direct valuation computation, the recorded hull must be a valid
/// lower hull of them, and the single segment must descend with slope
/// denominator equal to the degree.
inline bool check_dumas(const DumasWitness& w) {
    if (!is_prime(w.prime)) return false;
    if (w.polynomial.degree() < 2) return false;
    if (w.polynomial.coefficient(0).is_zero()) return false;

    const RationalPolynomial primitive = w.polynomial.primitive_integer_form();
    std::vector<PolygonPoint> expected;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(primitive.degree()); ++i) {
        const BigRational& c = primitive.coefficient(i);
        if (c.is_zero()) continue;
        expected.push_back({static_cast<long long>(i), padic_valuation(c, w.prime).value()});
    }
    if (expected.size() != w.polygon.points.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (expected[i].index != w.polygon.points[i].index ||
            expected[i].valuation != w.polygon.points[i].valuation)
            return false;

    // Hull validity: vertices are points, slopes strictly increase, and every
    // point lies on or above every hull segment (exact rational comparisons).
    const auto& vertices = w.polygon.vertices;
    if (vertices.size() < 2) return false;
    if (vertices.front().index != expected.front().index ||
        vertices.back().index != expected.back().index)
        return false;
    BigRational prev_slope;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const auto& v0 = vertices[i];
        const auto& v1 = vertices[i + 1];
        if (v1.index <= v0.index) return false;
        const BigRational slope(v1.valuation - v0.valuation, v1.index - v0.index);
        if (i > 0 && slope <= prev_slope) return false;
        prev_slope = slope;
        for (const auto& pt : expected) {
            if (pt.index < v0.index || pt.index > v1.index) continue;
            // valuation >= v0 + slope * (index - v0.index)
            const BigRational line = BigRational(v0.valuation) +
                                     slope * BigRational(pt.index - v0.index);
            if (BigRational(pt.valuation) < line) return false;
        }
    }

    if (w.polygon.segments.size() != 1) return false;
    const BigRational slope(vertices.back().valuation - vertices.front().valuation,
                            vertices.back().index - vertices.front().index);
    if (w.slope != slope || w.polygon.segments.front().slope != slope) return false;
    if (slope.sign() >= 0) return false;
    return slope.denominator() == w.polynomial.degree();
}

/// Re-runs the divisor enumeration from scratch (plain sqrt trial division,
/// no shared helpers): a cubic with no rational root is irreducible over the
/// rationals.
inline bool check_exhaustion(const RationalRootExhaustionWitness& w) {
    if (w.polynomial.degree() != 3) return false;
    const RationalPolynomial primitive = w.polynomial.primitive_integer_form();
    if (primitive.coefficient(0).is_zero()) return false;  // x itself would be a factor

    const auto divisors = [](const BigInt& value) {
        BigInt magnitude;
        mpz_abs(magnitude.get_mpz_t(), value.get_mpz_t());
        if (!magnitude.fits_slong_p())
            throw std::domain_error("witness check: coefficient too large");
        const std::uint64_t v = static_cast<std::uint64_t>(magnitude.get_si());
        std::vector<std::uint64_t> out;
        for (std::uint64_t d = 1; d * d <= v; ++d) {
            if (v % d != 0) continue;
            out.push_back(d);
            if (d != v / d) out.push_back(v / d);
        }
        return out;
    };

    for (const std::uint64_t p : divisors(primitive.coefficient(0).numerator()))
        for (const std::uint64_t q : divisors(primitive.leading().numerator())) {
            const BigRational candidate(static_cast<long long>(p), static_cast<long long>(q));
            if (primitive.evaluate(candidate).is_zero()) return false;
            if (primitive.evaluate(-candidate).is_zero()) return false;
        }
    return true;
}

inline bool check_irreducibility(const IrreducibilityWitness& w,
                                 const RationalPolynomial& expected_poly) {
    if (const auto* dumas = std::get_if<DumasWitness>(&w))
        return dumas->polynomial == expected_poly && check_dumas(*dumas);
    const auto& exhaustion = std::get<RationalRootExhaustionWitness>(w);
    return exhaustion.polynomial == expected_poly && check_exhaustion(exhaustion);
}

}  // namespace detail

/// Re-verifies a verdict from its witness alone. The checks cross module
/// boundaries on purpose: direct witnesses are compared against the geometry
/// module's division points, polynomial witnesses against a freshly rebuilt
/// division cubic.
inline bool verify_witness(const ConstructibilityVerdict& verdict) {
    switch (verdict.kind) {
        case QueryKind::tricuspoid: {
            const std::uint64_t n = verdict.n;
            if (n == 0) return false;

            if (const auto* direct = std::get_if<DirectConstructionWitness>(&verdict.witness)) {
                if (!verdict.constructible || n > 2) return false;
                if (direct->points.size() != n) return false;
                const DivisionReport report =
                    division_points(HypocycloidShape(3, 1), static_cast<long long>(n));
                for (std::size_t i = 0; i < direct->points.size(); ++i) {
                    const auto& [x, y] = direct->points[i];
                    if (std::abs(x.to_double() - report.points[i].point.x) > 1e-9) return false;
                    if (std::abs(y.to_double() - report.points[i].point.y) > 1e-9) return false;
                }
                return true;
            }

            if (const auto* fact = std::get_if<FactorizationWitness>(&verdict.witness)) {
                if (!verdict.constructible || (n != 3 && n != 6)) return false;
                if (fact->polynomial != build_division_cubic(BigRational(static_cast<long>(n))))
                    return false;
                return detail::check_factorization(*fact, /*expect_linear=*/true);
            }

            if (const auto* dumas = std::get_if<DumasWitness>(&verdict.witness)) {
                if (verdict.constructible || n % 3 == 0 || n <= 2) return false;
                if (dumas->polynomial != build_division_cubic(BigRational(static_cast<long>(n))))
                    return false;
                return detail::check_dumas(*dumas);
            }

            if (const auto* exhaustion =
                    std::get_if<RationalRootExhaustionWitness>(&verdict.witness)) {
                if (verdict.constructible) return false;
                if (exhaustion->polynomial !=
                    build_division_cubic(BigRational(static_cast<long>(n))))
                    return false;
                return detail::check_exhaustion(*exhaustion);
            }

            if (const auto* reduction = std::get_if<ReductionWitness>(&verdict.witness)) {
                if (verdict.constructible) return false;
                if (reduction->chain.empty() || reduction->chain.front() != n) return false;
                for (std::size_t i = 0; i + 1 < reduction->chain.size(); ++i) {
                    const std::uint64_t from = reduction->chain[i];
                    const std::uint64_t to = reduction->chain[i + 1];
                    if (to == 0 || to >= from || from % to != 0) return false;
                }
                const std::uint64_t target = reduction->chain.back();
                if (target < 3) return false;
                return detail::check_irreducibility(
                    reduction->terminal, build_division_cubic(BigRational(static_cast<long>(target))));
            }
            return false;
        }

        case QueryKind::circle: {
            const auto* w = std::get_if<GaussWantzelWitness>(&verdict.witness);
            if (!w || w->n != verdict.n || verdict.n == 0) return false;
            // recomposition and primality, independent of factorize()
            std::uint64_t product = 1;
            bool all_good = true;
            std::uint64_t prev = 0;
            for (const auto& [p, e] : w->factorization) {
                if (p <= prev) return false;
                prev = p;
                bool prime = p >= 2;
                for (std::uint64_t d = 2; d * d <= p && prime; ++d)
                    if (p % d == 0) prime = false;
                if (!prime) return false;
                for (unsigned i = 0; i < e; ++i) product *= p;
                if (p == 2) continue;
                std::uint64_t m = p - 1;
                unsigned k = 0;
                while (m > 1 && m % 2 == 0) {
                    m >>= 1;
                    ++k;
                }
                const bool fermat = m == 1 && k > 0 && (k & (k - 1)) == 0;
                if (e != 1 || !fermat) all_good = false;
            }
            if (product != verdict.n) return false;
            return verdict.constructible == all_good;
        }

        case QueryKind::cubic: {
            if (const auto* fact = std::get_if<FactorizationWitness>(&verdict.witness))
                return verdict.constructible &&
                       detail::check_factorization(*fact, /*expect_linear=*/true);
            if (const auto* dumas = std::get_if<DumasWitness>(&verdict.witness))
                return !verdict.constructible && detail::check_dumas(*dumas);
            if (const auto* exhaustion =
                    std::get_if<RationalRootExhaustionWitness>(&verdict.witness))
                return !verdict.constructible && detail::check_exhaustion(*exhaustion);
            return false;
        }
    }
    return false;
}

/// One-line human-readable witness description for reports.
inline std::string witness_summary(const ConstructibilityVerdict& verdict) {
    std::ostringstream out;
    if (const auto* direct = std::get_if<DirectConstructionWitness>(&verdict.witness)) {
        out << "explicit rational coordinates:";
        for (const auto& [x, y] : direct->points) out << " (" << x.str() << ", " << y.str() << ")";
    } else if (const auto* fact = std::get_if<FactorizationWitness>(&verdict.witness)) {
        out << "factors as " << fact->scalar.str();
        for (const auto& [factor, multiplicity] : fact->factors) {
            out << " * (" << factor.str() << ")";
            if (multiplicity > 1) out << "^" << multiplicity;
        }
    } else if (const auto* dumas = std::get_if<DumasWitness>(&verdict.witness)) {
        out << "newton polygon at p=" << dumas->prime << " is a single segment of slope "
            << dumas->slope.str() << "; cubic irreducible";
    } else if (std::get_if<RationalRootExhaustionWitness>(&verdict.witness)) {
        out << "no rational root among all divisor candidates; cubic irreducible";
    } else if (const auto* reduction = std::get_if<ReductionWitness>(&verdict.witness)) {
        out << "reduction";
        for (std::size_t i = 0; i < reduction->chain.size(); ++i)
            out << (i ? " -> " : " ") << reduction->chain[i];
        out << "; ";
        if (const auto* dumas = std::get_if<DumasWitness>(&reduction->terminal))
            out << "newton polygon at p=" << dumas->prime << " slope " << dumas->slope.str()
                << " certifies irreducibility";
        else
            out << "no rational root among all divisor candidates; cubic irreducible";
    } else if (const auto* gw = std::get_if<GaussWantzelWitness>(&verdict.witness)) {
        out << "n =";
        for (std::size_t i = 0; i < gw->factorization.size(); ++i) {
            const auto& [p, e] = gw->factorization[i];
            out << (i ? " * " : " ") << p;
            if (e > 1) out << "^" << e;
        }
        if (gw->factorization.empty()) out << " 1";
        out << (verdict.constructible ? "; odd prime factors are distinct Fermat primes"
                                      : "; odd part is not a product of distinct Fermat primes");
    }
    return out.str();
}

}  // namespace hypodiv
