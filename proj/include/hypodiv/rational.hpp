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

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace hypodiv {

using BigInt = mpz_class;

/// Exact rational number, always held in canonical form: numerator and
/// denominator coprime, denominator positive, zero stored as 0/1.
/// Canonical form makes operator== a structural comparison.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(int value) : q_(value) {}
    BigRational(long value) : q_(static_cast<long int>(value)) {}
    BigRational(long long value) : q_(BigInt(std::to_string(value))) {}
    BigRational(const BigInt& value) : q_(value) {}

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    BigRational(long long num, long long den)
        : BigRational(BigInt(std::to_string(num)), BigInt(std::to_string(den))) {}

    /// Parses "num" or "num/den" (optional leading sign on the numerator).
    static BigRational from_string(const std::string& text) {
        const auto slash = text.find('/');
        const std::string num = text.substr(0, slash);
        const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
        if (!looks_like_integer(num, true) || !looks_like_integer(den, false))
            throw std::invalid_argument("BigRational: cannot parse '" + text + "'");
        return BigRational(BigInt(num), BigInt(den));
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    /// Largest integer <= value.
    BigInt floor() const {
        BigInt out;
        mpz_fdiv_q(out.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return out;
    }

    /// "num" when integral, "num/den" otherwise; the wire format for exact values.
    std::string str() const {
        return is_integer() ? q_.get_num().get_str()
                            : q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(a.q_ + b.q_); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(a.q_ - b.q_); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(a.q_ * b.q_); }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
        return BigRational(a.q_ / b.q_);
    }
    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    explicit BigRational(mpq_class q) : q_(std::move(q)) {}

    static bool looks_like_integer(const std::string& s, bool sign_allowed) {
        std::size_t i = 0;
        if (sign_allowed && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    }

    mpq_class q_;
};

inline BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace hypodiv
