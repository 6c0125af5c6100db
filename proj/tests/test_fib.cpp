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

#include <doctest.h>

#include <cmath>

#include <fibspace/fib.hpp>
#include <fibspace/summation.hpp>

using namespace fibspace;

TEST_SUITE_BEGIN("fib");

TEST_CASE("base values and the recurrence") {
    CHECK(fib(0) == 1);
    CHECK(fib(1) == 1);
    CHECK(fib(10) == 89);
    // independent oracle: plain iteration
    BigInt a = 1, b = 1;
    for (std::size_t n = 2; n <= 300; ++n) {
        const BigInt c = a + b;
        a = b;
        b = c;
        CHECK(fib(n) == b);
    }
}

TEST_CASE("cache is positive and nondecreasing") {
    warm_up(500);
    const auto& values = fib_cache().values();
    REQUIRE(values.size() >= 501);
    for (std::size_t n = 1; n + 1 < values.size(); ++n) {
        CHECK(values[n] > 0);
        CHECK(values[n + 1] >= values[n]);
    }
}

TEST_CASE("ratio in lowest terms") {
    CHECK(ratio(0) == Rational(1));
    CHECK(ratio(4) == Rational(8, 5));
    // consecutive Fibonacci numbers are coprime, so the fraction is literal
    CHECK(ratio(30).numerator() == fib(31));
    CHECK(ratio(30).denominator() == fib(30));
}

TEST_CASE("golden ratio limit") {
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (std::size_t n : {40, 64, 100, 250, 500})
        CHECK(std::abs(ratio(n).to_double() - golden) <= 1e-12);
}

TEST_CASE("cassini identity, exact to n = 500") {
    CHECK(cassini(1) == 1);
    CHECK(cassini(2) == -1);
    CHECK(cassini(200) == -1);  // (-1)^{n+1} at even n
    for (std::size_t n = 1; n <= 500; ++n) {
        const BigInt want = (n % 2 == 1) ? 1 : -1;
        CHECK(cassini(n) == want);
        CHECK(cassini_substituted(n) == want);
    }
    CHECK_THROWS_AS(cassini(0), std::invalid_argument);
    CHECK_THROWS_AS(cassini_substituted(0), std::invalid_argument);
}

TEST_CASE("substituted cassini spot values") {
    CHECK(cassini_substituted(1) == 1);
    CHECK(cassini_substituted(3) == 1);   // 4 + 6 - 9
    CHECK(cassini_substituted(4) == -1);  // 9 + 15 - 25
}

TEST_CASE("partial sum identity, exact to n = 500") {
    const auto [l0, r0] = partial_sum_identity(0);
    CHECK(l0 == 1);
    CHECK(r0 == 1);
    const auto [l4, r4] = partial_sum_identity(4);
    CHECK(l4 == 12);
    CHECK(r4 == 12);
    for (std::size_t n = 0; n <= 500; ++n) {
        const auto [lhs, rhs] = partial_sum_identity(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reciprocal series is monotone and cauchy-flat past n = 90") {
    CompensatedSum acc;
    double prev = 0.0;
    for (std::size_t n = 0; n <= 120; ++n) {
        acc.add(Rational(BigInt(1), fib(n)).to_double());
        const double cur = acc.value();
        CHECK(cur >= prev);
        if (n >= 90) CHECK(cur - prev < 1e-15);
        prev = cur;
    }
}

TEST_SUITE_END();
