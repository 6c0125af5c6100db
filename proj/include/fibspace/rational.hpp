/*
   Copyright 2026 The fibspace Authors

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

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every value is kept in canonical form: gcd(|num|, den) = 1 and den > 0,
 * after every operation. The integer backend is boost::multiprecision::cpp_int,
 * so the whole type stays header-only.
 */

#ifndef FIBSPACE_RATIONAL_HPP
#define FIBSPACE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fibspace {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
   public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}

    /// Builds num/den and canonicalizes. Throws std::domain_error on den == 0.
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    /// Accepts "p/q" or a plain integer "p" (optional leading sign, no spaces inside).
    static Rational parse(std::string_view text) {
        const auto trimmed = trim(text);
        if (trimmed.empty()) throw std::invalid_argument("rational: empty string");
        const auto slash = trimmed.find('/');
        try {
            if (slash == std::string_view::npos) return Rational(BigInt(std::string(trimmed)));
            BigInt n{std::string(trimmed.substr(0, slash))};
            BigInt d{std::string(trimmed.substr(slash + 1))};
            return Rational(std::move(n), std::move(d));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
        }
    }

    /// Exact conversion of a finite double (binary fractions are rationals).
    static Rational from_double(double x) {
        if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite double");
        if (x == 0.0) return Rational();
        int exp = 0;
        const double frac = std::frexp(x, &exp);
        const auto mant = static_cast<long long>(std::ldexp(frac, 53));
        exp -= 53;
        BigInt num(mant);
        BigInt den(1);
        if (exp >= 0)
            num <<= exp;
        else
            den <<= -exp;
        return Rational(std::move(num), std::move(den));
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Correctly rounded, robust for operands far outside double range.
    double to_double() const {
        return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
    }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_.is_zero()) throw std::domain_error("rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        canonicalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, raw_tag{}); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) {
        return a.num_ < 0 ? Rational(-a.num_, a.den_, raw_tag{}) : a;
    }

    /// Exact integer power; negative exponents invert (zero base then throws).
    friend Rational pow(const Rational& base, long long e) {
        if (e < 0) {
            if (base.is_zero()) throw std::domain_error("rational: 0 to a negative power");
            return pow(Rational(base.den_, base.num_), -e);
        }
        Rational acc(1);
        Rational sq = base;
        auto n = static_cast<unsigned long long>(e);
        while (n != 0) {
            if (n & 1ULL) acc *= sq;
            n >>= 1ULL;
            if (n != 0) sq *= sq;
        }
        return acc;
    }

   private:
    struct raw_tag {};
    // already-canonical fast path (sign flips, abs)
    Rational(BigInt num, BigInt den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    static std::string_view trim(std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    }

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;  // > 0 always
};

namespace detail {

/// Accumulates a long sum of fractions without intermediate reduction.
/// One gcd at the end instead of one per term; the denominators of exact
/// dot products grow multiplicatively and per-term reduction is quadratic
/// in practice.
class FractionSum {
   public:
    void add(const BigInt& num, const BigInt& den) {
        num_ = num_ * den + num * den_;
        den_ *= den;
    }

    void add(const Rational& q) { add(q.numerator(), q.denominator()); }

    void add_product(const Rational& a, const Rational& b) {
        add(a.numerator() * b.numerator(), a.denominator() * b.denominator());
    }

    void add_product(const Rational& a, const Rational& b, const Rational& c) {
        add(a.numerator() * b.numerator() * c.numerator(),
            a.denominator() * b.denominator() * c.denominator());
    }

    Rational value() const { return Rational(num_, den_); }

   private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

}  // namespace detail

}  // namespace fibspace

#endif  // FIBSPACE_RATIONAL_HPP
