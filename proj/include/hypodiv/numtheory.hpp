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
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hypodiv {

/// A p-adic valuation: a finite integer for nonzero inputs, infinite for zero.
class Valuation {
public:
    static Valuation finite(long v) { return Valuation(false, v); }
    static Valuation infinite() { return Valuation(true, 0); }

    bool is_infinite() const { return infinite_; }
    long value() const {
        if (infinite_) throw std::logic_error("Valuation: infinite valuation has no value");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

    // v(q*r) = v(q) + v(r); infinity absorbs.
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.value_ + b.value_);
    }

private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

/// Deterministic trial-division primality; inputs are desk scale (<= 1e12).
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// Prime factorization by trial division, primes strictly increasing.
/// factorize(1) is the empty product.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// True iff p is prime and p = 2^(2^a) + 1 for some a >= 0.
inline bool is_fermat_prime(std::uint64_t p) {
    if (p < 3) return false;
    const std::uint64_t m = p - 1;
    if ((m & (m - 1)) != 0) return false;       // p - 1 must be a power of two
    unsigned k = 0;
    for (std::uint64_t t = m; t > 1; t >>= 1) ++k;
    if (k == 0 || (k & (k - 1)) != 0) return false;  // the exponent itself as well
    return is_prime(p);
}

/// v_p of an exact rational: v_p(numerator) - v_p(denominator).
/// p is verified prime by trial division; v_p(0) is the infinite marker.
inline Valuation padic_valuation(const BigRational& q, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p is not prime");
    if (q.is_zero()) return Valuation::infinite();
    const BigInt pz(static_cast<unsigned long>(p));
    BigInt tmp;
    const long vn = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), q.numerator().get_mpz_t(), pz.get_mpz_t()));
    const long vd = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), q.denominator().get_mpz_t(), pz.get_mpz_t()));
    return Valuation::finite(vn - vd);
}

/// v_p of an exact integer; infinite marker for zero.
inline Valuation padic_valuation(const BigInt& z, std::uint64_t p) {
    return padic_valuation(BigRational(z), p);
}

}  // namespace hypodiv
