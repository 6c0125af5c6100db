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
 * @file generators.hpp
 * @brief Named sequence families used across the library and the CLI.
 *
 * The counterexample family x_k = (1/r)(-s/r)^k f_{k+1}^2 is the witness
 * sequence whose forward transform is (1, 0, 0, ...); it separates the band
 * space from l_inf and bv_p once |s/r| >= 1.
 */

#ifndef FIBSPACE_GENERATORS_HPP
#define FIBSPACE_GENERATORS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "band_operator.hpp"
#include "fib.hpp"
#include "params.hpp"
#include "prefix.hpp"

namespace fibspace {

struct GeneratedSequence {
    std::string family;
    std::function<Rational(std::size_t)> at;

    Prefix prefix(std::size_t n) const {
        Prefix out;
        out.reserve(n);
        for (std::size_t k = 0; k < n; ++k) out.push_back(at(k));
        return out;
    }
};

/// x_k = (1/r)(-s/r)^k f_{k+1}^2.
inline GeneratedSequence counterexample_sequence(const Params& params) {
    auto powers = std::make_shared<detail::PowerCache>(params.neg_s_over_r());
    const Rational inv_r = Rational(1) / params.r;
    return {"counterexample", [powers, inv_r](std::size_t k) {
                return inv_r * powers->at(k) * Rational(fib(k + 1) * fib(k + 1));
            }};
}

/// First differences of the counterexample family, in closed form:
/// k = 0 gives x_0 itself (difference against an implicit leading zero),
/// k >= 1 gives -(1/r)(-s/r)^{k-1} ((s/r) f_{k+1}^2 + f_k^2).
inline GeneratedSequence delta_of_counterexample(const Params& params) {
    auto powers = std::make_shared<detail::PowerCache>(params.neg_s_over_r());
    const Rational inv_r = Rational(1) / params.r;
    const Rational s_over_r = params.s / params.r;
    return {"delta_counterexample", [powers, inv_r, s_over_r](std::size_t k) {
                if (k == 0) return inv_r * Rational(fib(1) * fib(1));
                Rational inner = s_over_r * Rational(fib(k + 1) * fib(k + 1));
                inner += Rational(fib(k) * fib(k));
                return -(inv_r * powers->at(k - 1) * inner);
            }};
}

/// The n-th expansion element: zero below index n, then
/// (1/r)(-s/r)^{k-n} f_{k+1}^2/(f_n f_{n+1}).
inline GeneratedSequence basis_sequence(const Params& params, std::size_t n) {
    auto powers = std::make_shared<detail::PowerCache>(params.neg_s_over_r());
    const Rational scale = Rational(1) / (params.r * Rational(fib(n) * fib(n + 1)));
    return {"basis", [powers, scale, n](std::size_t k) {
                if (k < n) return Rational(0);
                return scale * powers->at(k - n) * Rational(fib(k + 1) * fib(k + 1));
            }};
}

inline GeneratedSequence unit_sequence(std::size_t n) {
    return {"unit", [n](std::size_t k) { return Rational(k == n ? 1 : 0); }};
}

inline GeneratedSequence constant_sequence(Rational value = Rational(1)) {
    return {"constant", [value](std::size_t) { return value; }};
}

inline GeneratedSequence zero_sequence() {
    return {"zero", [](std::size_t) { return Rational(0); }};
}

inline GeneratedSequence custom_sequence(std::function<Rational(std::size_t)> fn,
                                         std::string name = "custom") {
    return {std::move(name), std::move(fn)};
}

}  // namespace fibspace

#endif  // FIBSPACE_GENERATORS_HPP
