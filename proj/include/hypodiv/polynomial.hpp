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
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numtheory.hpp"
#include "rational.hpp"

namespace hypodiv {

/// Dense polynomial with exact rational coefficients, index i = coefficient
/// of x^i. The zero polynomial has an empty coefficient list and degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(std::initializer_list<BigRational> ascending)
        : coeffs_(ascending) {
        trim();
    }
    explicit RationalPolynomial(std::vector<BigRational> ascending)
        : coeffs_(std::move(ascending)) {
        trim();
    }

    static RationalPolynomial constant(const BigRational& value) {
        return RationalPolynomial({value});
    }
    static RationalPolynomial monomial(const BigRational& coeff, std::size_t power) {
        std::vector<BigRational> c(power + 1, BigRational(0));
        c[power] = coeff;
        return RationalPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    BigRational coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
    }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    const BigRational& leading() const {
        if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    BigRational evaluate(const BigRational& x) const {
        BigRational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double evaluate(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + it->to_double();
        return acc;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return RationalPolynomial();
        std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator*(const BigRational& s, const RationalPolynomial& p) {
        std::vector<BigRational> c(p.coeffs_);
        for (auto& x : c) x *= s;
        return RationalPolynomial(std::move(c));
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
        return !(a == b);
    }

    /// Exact Euclidean division; divisor must be nonzero.
    std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        RationalPolynomial q;
        RationalPolynomial r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            const BigRational factor = r.leading() / d.leading();
            q = q + monomial(factor, shift);
            r = r - monomial(factor, shift) * d;
        }
        return {q, r};
    }

    RationalPolynomial pow(unsigned e) const {
        RationalPolynomial out = constant(BigRational(1));
        for (unsigned i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    /// Coefficients scaled to integers with content removed (primitive form).
    /// The returned scale satisfies: this == scale * primitive.
    RationalPolynomial primitive_integer_form(BigRational* scale = nullptr) const {
        if (is_zero()) {
            if (scale) *scale = BigRational(1);
            return RationalPolynomial();
        }
        BigInt lcm_den(1);
        for (const auto& c : coeffs_) {
            if (c.is_zero()) continue;
            BigInt g;
            mpz_lcm(g.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
            lcm_den = g;
        }
        BigInt content(0);
        std::vector<BigInt> ints;
        ints.reserve(coeffs_.size());
        for (const auto& c : coeffs_) {
            const BigRational scaled = c * BigRational(lcm_den);
            ints.push_back(scaled.numerator());  // denominator is 1 by construction
            BigInt g;
            mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
            content = g;
        }
        std::vector<BigRational> out;
        out.reserve(ints.size());
        for (const auto& z : ints) out.emplace_back(BigInt(z / content));
        if (scale) *scale = BigRational(content, lcm_den);
        return RationalPolynomial(std::move(out));
    }

    /// Human-readable form, highest power first: "26244x^3 - 37179x - 8667".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            const bool first = out.empty();
            const BigRational mag = abs(c);
            if (first)
                out += (c.sign() < 0) ? "-" : "";
            else
                out += (c.sign() < 0) ? " - " : " + ";
            const bool unit = mag == BigRational(1) && i > 0;
            if (!unit) out += mag.str();
            if (i > 0) out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

namespace detail {

inline std::vector<BigInt> positive_divisors(const BigInt& value) {
    BigInt magnitude;
    mpz_abs(magnitude.get_mpz_t(), value.get_mpz_t());
    if (!magnitude.fits_slong_p() || value == 0)
        throw std::domain_error("rational_roots: coefficient too large for divisor enumeration");
    std::uint64_t v = static_cast<std::uint64_t>(magnitude.get_si());
    std::vector<BigInt> divisors{BigInt(1)};
    for (const auto& [p, e] : factorize(v)) {
        const std::size_t base = divisors.size();
        BigInt pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= static_cast<unsigned long>(p);
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    return divisors;
}

}  // namespace detail

/// All rational roots with multiplicity, sorted ascending. Candidates p/q are
/// enumerated from divisors of the primitive integer form's constant and
/// leading coefficients and verified by exact evaluation.
inline std::vector<BigRational> rational_roots(const RationalPolynomial& poly) {
    if (poly.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");

    std::vector<BigRational> roots;
    RationalPolynomial work = poly.primitive_integer_form();

    // x = 0 roots: deflate the power of x dividing the polynomial.
    std::size_t low = 0;
    while (work.coefficient(low).is_zero()) ++low;
    if (low > 0) {
        std::vector<BigRational> shifted(work.coefficients().begin() +
                                             static_cast<std::ptrdiff_t>(low),
                                         work.coefficients().end());
        work = RationalPolynomial(std::move(shifted));
        roots.assign(low, BigRational(0));
    }

    if (work.degree() >= 1) {
        const auto ps = detail::positive_divisors(work.coefficient(0).numerator());
        const auto qs = detail::positive_divisors(work.leading().numerator());
        std::vector<BigRational> candidates;
        for (const auto& p : ps)
            for (const auto& q : qs) {
                candidates.emplace_back(p, q);
                candidates.emplace_back(-p, q);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const auto& cand : candidates) {
            while (work.degree() >= 1 && work.evaluate(cand).is_zero()) {
                roots.push_back(cand);
                const RationalPolynomial linear({-cand, BigRational(1)});
                auto [q, r] = work.divmod(linear);
                work = std::move(q);
                // r is exactly zero here; cand is a verified root
            }
        }
    }

    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace hypodiv
