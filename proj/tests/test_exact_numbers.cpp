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

#include <random>

#include <hypodiv/numtheory.hpp>
#include <hypodiv/rational.hpp>

using hypodiv::BigInt;
using hypodiv::BigRational;
using hypodiv::Valuation;

namespace {

BigRational random_rational(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<long long> num(-2000, 2000);
    std::uniform_int_distribution<long long> den(1, 2000);
    for (;;) {
        const BigRational q(num(rng), den(rng));
        if (!nonzero || !q.is_zero()) return q;
    }
}

}  // namespace

TEST_CASE("canonical form") {
    REQUIRE(BigRational(6, 4) == BigRational(3, 2));
    REQUIRE(BigRational(6, 4).numerator() == 3);
    REQUIRE(BigRational(6, 4).denominator() == 2);

    // denominator stays positive, sign lives in the numerator
    REQUIRE(BigRational(3, -2).denominator() == 2);
    REQUIRE(BigRational(3, -2).numerator() == -3);

    // zero is 0/1
    REQUIRE(BigRational(0, 7).numerator() == 0);
    REQUIRE(BigRational(0, 7).denominator() == 1);

    REQUIRE_THROWS_AS(BigRational(5, 0), std::domain_error);

    std::mt19937_64 rng(101);
    for (int i = 0; i < 500; ++i) {
        const BigRational q = random_rational(rng);
        REQUIRE(q.denominator() > 0);
        BigInt g;
        BigInt num = q.numerator();
        mpz_abs(num.get_mpz_t(), num.get_mpz_t());
        BigInt den = q.denominator();
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        REQUIRE((g == 1 || q.is_zero()));
    }
}

TEST_CASE("string round trip") {
    REQUIRE(BigRational(33, 25).str() == "33/25");
    REQUIRE(BigRational(-3, 2).str() == "-3/2");
    REQUIRE(BigRational(16).str() == "16");
    REQUIRE(BigRational::from_string("33/25") == BigRational(33, 25));
    REQUIRE(BigRational::from_string("-3/2") == BigRational(-3, 2));
    REQUIRE(BigRational::from_string("16") == BigRational(16));
    REQUIRE_THROWS_AS(BigRational::from_string("three"), std::invalid_argument);
    REQUIRE_THROWS_AS(BigRational::from_string("1/"), std::invalid_argument);
    REQUIRE_THROWS_AS(BigRational::from_string("1 /2"), std::invalid_argument);
    REQUIRE_THROWS_AS(BigRational::from_string(""), std::invalid_argument);
}

TEST_CASE("field axiom spot checks") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 300; ++i) {
        const BigRational a = random_rational(rng);
        const BigRational b = random_rational(rng);
        const BigRational c = random_rational(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + BigRational(0) == a);
        REQUIRE(a * BigRational(1) == a);
        const BigRational nz = random_rational(rng, /*nonzero=*/true);
        REQUIRE(nz * (BigRational(1) / nz) == BigRational(1));
    }
    REQUIRE_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
}

TEST_CASE("floor") {
    REQUIRE(BigRational(7, 2).floor() == 3);
    REQUIRE(BigRational(-7, 2).floor() == -4);
    REQUIRE(BigRational(6).floor() == 6);
}

TEST_CASE("padic valuation examples") {
    // 117 = 9 * 13: two exact divisions by 3 (constant term of the n=5 division cubic)
    REQUIRE(hypodiv::padic_valuation(BigRational(117), 3) == Valuation::finite(2));
    REQUIRE(hypodiv::padic_valuation(BigRational(0), 5).is_infinite());
    // 8667 = 81 * 107
    REQUIRE(hypodiv::padic_valuation(BigRational(8667), 3) == Valuation::finite(4));

    REQUIRE(hypodiv::padic_valuation(BigRational(1, 9), 3) == Valuation::finite(-2));
    REQUIRE(hypodiv::padic_valuation(BigRational(-18, 5), 3) == Valuation::finite(2));
    REQUIRE_THROWS_AS(hypodiv::padic_valuation(BigRational(10), 6), std::invalid_argument);
    REQUIRE_THROWS_AS(hypodiv::padic_valuation(BigRational(10), 1), std::invalid_argument);
}

TEST_CASE("valuation additivity") {
    std::mt19937_64 rng(303);
    const std::uint64_t primes[] = {2, 3, 5, 7, 13};
    for (int i = 0; i < 200; ++i) {
        const BigRational q = random_rational(rng, true);
        const BigRational r = random_rational(rng, true);
        for (const auto p : primes) {
            const auto lhs = hypodiv::padic_valuation(q * r, p);
            const auto rhs = hypodiv::padic_valuation(q, p) + hypodiv::padic_valuation(r, p);
            REQUIRE(lhs == rhs);
        }
    }
    // infinity absorbs
    REQUIRE((Valuation::infinite() + Valuation::finite(3)).is_infinite());
}

TEST_CASE("fermat primes") {
    REQUIRE(hypodiv::is_fermat_prime(17));
    REQUIRE_FALSE(hypodiv::is_fermat_prime(7));  // 7 - 1 = 6 is not a power of two
    REQUIRE(hypodiv::is_fermat_prime(65537));    // 2^16 + 1, prime by trial division
    REQUIRE(hypodiv::is_fermat_prime(3));
    REQUIRE(hypodiv::is_fermat_prime(5));
    REQUIRE(hypodiv::is_fermat_prime(257));
    REQUIRE_FALSE(hypodiv::is_fermat_prime(2));
    REQUIRE_FALSE(hypodiv::is_fermat_prime(4));
    REQUIRE_FALSE(hypodiv::is_fermat_prime(9));      // 2^3 + 1, exponent not a power of two
    REQUIRE_FALSE(hypodiv::is_fermat_prime(4294967297ULL));  // 2^32 + 1 = 641 * 6700417
}

TEST_CASE("factorize examples") {
    using pe = std::pair<std::uint64_t, unsigned>;
    REQUIRE(hypodiv::factorize(12) == std::vector<pe>{{2, 2}, {3, 1}});
    REQUIRE(hypodiv::factorize(1).empty());
    REQUIRE(hypodiv::factorize(6561) == std::vector<pe>{{3, 8}});
    REQUIRE(hypodiv::factorize(9999999967ULL) == std::vector<pe>{{9999999967ULL, 1}});
    REQUIRE_THROWS_AS(hypodiv::factorize(0), std::invalid_argument);
}

TEST_CASE("factorize recomposes") {
    for (std::uint64_t n = 1; n <= 1000000; ++n) {
        std::uint64_t product = 1;
        std::uint64_t prev = 0;
        for (const auto& [p, e] : hypodiv::factorize(n)) {
            REQUIRE(p > prev);
            prev = p;
            for (unsigned i = 0; i < e; ++i) product *= p;
        }
        if (product != n) {
            REQUIRE(product == n);  // report the offender
        }
    }
    SUCCEED("all n <= 1e6 recompose");
}
