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

#include <random>

#include <fibspace/duality.hpp>
#include <fibspace/generators.hpp>

using namespace fibspace;

namespace {

struct Gen {
    std::mt19937_64 rng{55221};
    std::uniform_int_distribution<long long> num{-200, 200};
    std::uniform_int_distribution<long long> den{1, 200};
    std::uniform_int_distribution<long long> signed_small{-9, 9};
    std::uniform_int_distribution<long long> small{1, 9};

    Rational nonzero_small() {
        long long n = signed_small(rng);
        while (n == 0) n = signed_small(rng);
        return Rational(n, small(rng));
    }
    Prefix prefix(std::size_t len) {
        Prefix x;
        for (std::size_t i = 0; i < len; ++i) x.push_back(Rational(num(rng), den(rng)));
        return x;
    }
};

Rational row_dot(const TriangleView& view, const Prefix& y, std::size_t n) {
    detail::FractionSum acc;
    for (std::size_t k = 0; k <= n && k < y.size(); ++k) acc.add_product(view.entry(n, k), y[k]);
    return acc.value();
}

}  // namespace

TEST_SUITE_BEGIN("duality");

TEST_CASE("B rows reproduce a_n x_n exactly") {
    Gen gen;
    for (int rep = 0; rep < 20; ++rep) {
        const Params p(gen.nonzero_small(), gen.nonzero_small(), 2.0);
        const DualCandidate cand{gen.prefix(12), p};
        const Prefix y = gen.prefix(12);
        const Prefix x = inverse_transform(p, y);
        const TriangleView B = build_B(cand, 12);
        for (std::size_t n = 0; n < 12; ++n) CHECK(row_dot(B, y, n) == cand.a[n] * x[n]);
    }
}

TEST_CASE("D partial sums reproduce sum a_k x_k exactly") {
    Gen gen;
    for (int rep = 0; rep < 20; ++rep) {
        const Params p(gen.nonzero_small(), gen.nonzero_small(), 2.0);
        const DualCandidate cand{gen.prefix(12), p};
        const Prefix y = gen.prefix(12);
        const Prefix x = inverse_transform(p, y);
        const TriangleView D = build_D(cand, 12);
        for (std::size_t n = 0; n < 12; ++n) {
            detail::FractionSum want;
            for (std::size_t k = 0; k <= n; ++k) want.add_product(cand.a[k], x[k]);
            CHECK(row_dot(D, y, n) == want.value());
        }
    }
}

TEST_CASE("closed forms for a single-coordinate candidate") {
    const Params p(Rational(3, 2), Rational(-5, 3), 2.0);
    const Rational a0(7, 4);
    Prefix a(6, Rational(0));
    a[0] = a0;
    const DualCandidate cand{a, p};
    const TriangleView B = build_B(cand, 6);
    const TriangleView D = build_D(cand, 6);
    CHECK(B.entry(0, 0) == a0 / p.r);
    for (std::size_t n = 1; n < 6; ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(B.entry(n, k).is_zero());
    for (std::size_t n = 0; n < 6; ++n) {
        CHECK(D.entry(n, 0) == a0 / p.r);  // only the j = 0 term survives
        for (std::size_t k = 1; k <= n; ++k) CHECK(D.entry(n, k).is_zero());
    }
}

TEST_CASE("zero and finitely supported candidates satisfy every condition") {
    const Params p(Rational(1), Rational(-1), 2.0);
    const DualCandidate zero{Prefix(4, Rational(0)), p};
    CHECK(check_d1(zero, 32).verdict == Verdict::holds_in_window);
    CHECK(check_d2(zero, 32).verdict == Verdict::holds_in_window);
    CHECK(check_d3(zero, 32).verdict == Verdict::holds_in_window);
    CHECK(check_d4(zero, 32).verdict == Verdict::holds_in_window);
    CHECK(gamma_dual_check(zero, 32).verdict == Verdict::holds_in_window);

    Gen gen;
    for (int rep = 0; rep < 5; ++rep) {
        const Params q(gen.nonzero_small(), gen.nonzero_small(), 2.0);
        // support bounded well below the window
        Prefix a = gen.prefix(4);
        const DualCandidate cand{a, q};
        CHECK(check_d1(cand, 48).verdict == Verdict::holds_in_window);
        CHECK(check_d2(cand, 48).verdict == Verdict::holds_in_window);
        CHECK(check_d3(cand, 48).verdict == Verdict::holds_in_window);
        CHECK(check_d4(cand, 48).verdict == Verdict::holds_in_window);
    }
}

TEST_CASE("divergent candidates are caught") {
    const Params p(Rational(1), Rational(-1), 2.0);
    SUBCASE("growing weighted candidate breaks the row-norm condition") {
        // a_k = (-r/s)^k k: the D rows accumulate k f_{k+1}^2 terms
        const Rational base = -(p.r / p.s);
        Prefix a;
        Rational power(1);
        for (std::size_t k = 0; k < 64; ++k) {
            a.push_back(power * Rational(static_cast<long long>(k)));
            power *= base;
        }
        CHECK(check_d2(DualCandidate{a, p}, 64).verdict == Verdict::fails_with_witness);
    }
    SUBCASE("pure geometric candidate has no columnwise limits") {
        // a_j = (-r/s)^j makes every D column a growing pure sum of f^2
        const Rational base = -(p.r / p.s);
        Prefix a;
        Rational power(1);
        for (std::size_t k = 0; k < 64; ++k) {
            a.push_back(power);
            power *= base;
        }
        const DualCandidate cand{a, p};
        CHECK(check_d3(cand, 64).verdict == Verdict::fails_with_witness);
        // interchange needs the column limits first
        CHECK(check_d4(cand, 64).verdict == Verdict::inconclusive);
    }
    SUBCASE("all-ones candidate fails the subset condition by enumeration") {
        const DualCandidate ones{constant_sequence().prefix(12), p};
        const auto rep = check_d1(ones, 12);
        CHECK(rep.verdict == Verdict::fails_with_witness);
        CHECK(!rep.witness.empty());
        // the bound pair reaches the same verdict as full enumeration
        SubsetFamilyBudget no_enum;
        no_enum.max_exhaustive_n = 0;
        CHECK(check_d1(ones, 12, no_enum).verdict == Verdict::fails_with_witness);
    }
}

TEST_CASE("subset bounds sandwich the enumerated supremum") {
    Gen gen;
    for (int rep = 0; rep < 6; ++rep) {
        const Params p(gen.nonzero_small(), gen.nonzero_small(), 2.0);
        const DualCandidate cand{gen.prefix(12), p};
        const TriangleView B = build_B(cand, 12);
        const DenseWindow M = materialize(B.entry, 12, 12);
        for (std::size_t w : {3u, 6u, 12u}) {
            SubsetFamilyBudget exhaustive;  // enumerate
            const SubsetBounds exact = subset_qnorm_bounds(M, w, 2.0, exhaustive);
            REQUIRE(exact.exact.has_value());
            SubsetFamilyBudget bounded;
            bounded.max_exhaustive_n = 0;  // force the bound pair
            const SubsetBounds pair = subset_qnorm_bounds(M, w, 2.0, bounded);
            CHECK(pair.lower <= *exact.exact * (1.0 + 1e-9) + 1e-12);
            CHECK(*exact.exact <= pair.upper * (1.0 + 1e-9) + 1e-12);
        }
    }
}

TEST_CASE("exponent domain") {
    const Params p1(Rational(1), Rational(-1), 1.0);
    const DualCandidate cand{Prefix(4, Rational(0)), p1};
    CHECK_THROWS_AS(check_d1(cand, 16), std::invalid_argument);
    CHECK_THROWS_AS(check_d2(cand, 16), std::invalid_argument);
    CHECK_THROWS_AS(gamma_dual_check(cand, 16), std::invalid_argument);
    // p = inf degrades q to 1 (absolute row sums) and is accepted
    const Params pinf(Rational(1), Rational(-1), kInfinity);
    CHECK(check_d2(DualCandidate{Prefix(4, Rational(0)), pinf}, 16).verdict ==
          Verdict::holds_in_window);
}

TEST_SUITE_END();
