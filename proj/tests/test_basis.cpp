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
#include <random>

#include <fibspace/basis.hpp>

using namespace fibspace;

namespace {

struct Gen {
    std::mt19937_64 rng{987654};
    std::uniform_int_distribution<long long> num{-500, 500};
    std::uniform_int_distribution<long long> den{1, 500};
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

}  // namespace

TEST_SUITE_BEGIN("basis");

TEST_CASE("literal element values") {
    CHECK(basis_element(Params(Rational(1), Rational(-1), 2.0), 0, 3) ==
          Prefix{Rational(1), Rational(4), Rational(9)});
    const Prefix c1 = basis_element(Params(Rational(2), Rational(1), 2.0), 1, 3);
    CHECK(c1 == Prefix{Rational(0), Rational(1), Rational(-9, 8)});
    // zero below the element index
    const Prefix c2 = basis_element(Params(Rational(3), Rational(5), 2.0), 2, 6);
    CHECK(c2[0].is_zero());
    CHECK(c2[1].is_zero());
    CHECK(!c2[2].is_zero());
    CHECK_THROWS_AS(basis_element(Params(Rational(1), Rational(1), 2.0), 4, 4),
                    std::invalid_argument);
}

TEST_CASE("elements transform onto unit vectors") {
    CHECK(verify_basis_transform(Params(Rational(1), Rational(-1), 2.0), 0, 8));
    CHECK(verify_basis_transform(Params(Rational(3), Rational(-2), 2.0), 3, 10));
    Gen gen;
    for (int rep = 0; rep < 5; ++rep) {
        const Params p(gen.nonzero_small(), gen.nonzero_small(), 2.0);
        for (std::size_t n = 0; n <= 32; n += 8) CHECK(verify_basis_transform(p, n, n + 33));
    }
    CHECK_THROWS_AS(verify_basis_transform(Params(Rational(1), Rational(1), 2.0), 3, 4),
                    std::invalid_argument);
}

TEST_CASE("a perturbed element is rejected") {
    const Params p(Rational(1), Rational(-1), 2.0);
    Prefix c = basis_element(p, 2, 10);
    c[5] += Rational(1, 7);
    const Prefix y = forward_transform(p, c);
    bool is_unit = y[2] == Rational(1);
    for (std::size_t k = 0; k < y.size(); ++k)
        if (k != 2 && !y[k].is_zero()) is_unit = false;
    CHECK(!is_unit);
}

TEST_CASE("expansion coefficients") {
    const Params p(Rational(2, 3), Rational(-5, 4), 2.0);
    // coefficients of an element are the matching unit prefix
    const Prefix c2 = basis_element(p, 2, 9);
    const Prefix coeff = expansion_coefficients(p, c2);
    for (std::size_t k = 0; k < coeff.size(); ++k)
        CHECK(coeff[k] == Rational(k == 2 ? 1 : 0));
    CHECK(all_zero(expansion_coefficients(p, Prefix(5, Rational(0)))));
    // coefficients of an inverse transform recover the input exactly
    Gen gen;
    const Prefix y = gen.prefix(14);
    CHECK(expansion_coefficients(p, inverse_transform(p, y)) == y);
}

TEST_CASE("partial expansions rebuild the prefix exactly") {
    Gen gen;
    for (int rep = 0; rep < 8; ++rep) {
        const Params p(gen.nonzero_small(), gen.nonzero_small(), 2.0);
        const Prefix x = gen.prefix(12);
        CHECK(partial_expansion(p, x, x.size() - 1) == x);
    }
}

TEST_CASE("residuals equal transform tail norms and decrease") {
    Gen gen;
    for (double pe : {1.0, 1.5, 2.0, 3.0}) {
        const Params p(Rational(3, 2), Rational(-4, 5), pe);
        const Prefix x = gen.prefix(12);
        const std::vector<double> yd = to_doubles(forward_transform(p, x));
        double prev = kInfinity;
        for (std::size_t m = 0; m < x.size(); ++m) {
            const double res = expansion_residual(p, x, m);
            const std::vector<double> tail(yd.begin() + static_cast<long>(m) + 1, yd.end());
            const double want = p_norm(tail, pe);
            CHECK(std::abs(res - want) <= 1e-12 * std::max(1.0, want));
            CHECK(res <= prev * (1.0 + 1e-12) + 1e-15);
            prev = res;
        }
        CHECK(expansion_residual(p, x, x.size() - 1) == 0.0);
    }
}

TEST_CASE("residual of an element vanishes at its own index") {
    const Params p(Rational(1), Rational(-1), 2.0);
    const Prefix c3 = basis_element(p, 3, 10);
    CHECK(expansion_residual(p, c3, 3) == 0.0);
    CHECK_THROWS_AS(expansion_residual(Params(Rational(1), Rational(-1), kInfinity), c3, 3),
                    std::invalid_argument);
}

TEST_SUITE_END();
