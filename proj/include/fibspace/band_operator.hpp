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
 * @file band_operator.hpp
 * @brief The two-band Fibonacci matrix F^(r,s), its closed-form triangular
 *        inverse and the forward/inverse transforms.
 *
 * Forward entries:   s f_{n+1}/f_n on the subdiagonal, r f_n/f_{n+1} on the
 * diagonal, zero elsewhere. Inverse entries:
 * (1/r)(-s/r)^{n-k} f_{n+1}^2 / (f_k f_{k+1}) for k <= n.
 *
 * Both matrices are lower triangular, so transforming a length-N prefix is
 * lossless: y_n depends only on x_n, x_{n-1}, and x_k only on y_0..y_k. No
 * tail knowledge is ever required.
 */

#ifndef FIBSPACE_BAND_OPERATOR_HPP
#define FIBSPACE_BAND_OPERATOR_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "fib.hpp"
#include "params.hpp"
#include "prefix.hpp"
#include "triangle.hpp"

namespace fibspace {

namespace detail {

/// Memoized nonnegative powers of a fixed rational base.
class PowerCache {
   public:
    explicit PowerCache(Rational base) : base_(std::move(base)), powers_{Rational(1)} {}

    const Rational& at(std::size_t e) {
        while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
        return powers_[e];
    }

   private:
    Rational base_;
    std::vector<Rational> powers_;
};

}  // namespace detail

inline Rational forward_entry(const Params& params, std::size_t n, std::size_t k) {
    if (n >= 1 && k == n - 1) return params.s * Rational(fib(n + 1), fib(n));
    if (k == n) return params.r * Rational(fib(n), fib(n + 1));
    return Rational(0);
}

inline Rational inverse_entry(const Params& params, std::size_t n, std::size_t k) {
    if (k > n) return Rational(0);
    const Rational base = params.neg_s_over_r();
    Rational v = pow(base, static_cast<long long>(n - k));
    v *= Rational(fib(n + 1) * fib(n + 1), fib(k) * fib(k + 1));
    return v / params.r;
}

/// y_0 = r x_0, y_n = r (f_n/f_{n+1}) x_n + s (f_{n+1}/f_n) x_{n-1}.
inline Prefix forward_transform(const Params& params, const Prefix& x) {
    if (x.empty()) throw std::invalid_argument("forward_transform: empty prefix");
    fib_cache().ensure(x.size() + 1);
    Prefix y;
    y.reserve(x.size());
    y.push_back(params.r * x[0]);
    for (std::size_t n = 1; n < x.size(); ++n) {
        Rational v = params.r * Rational(fib(n), fib(n + 1)) * x[n];
        v += params.s * Rational(fib(n + 1), fib(n)) * x[n - 1];
        y.push_back(std::move(v));
    }
    return y;
}

/// x_k = sum_{j<=k} (1/r)(-s/r)^{k-j} f_{k+1}^2/(f_j f_{j+1}) y_j.
/// Powers are maintained incrementally per row; each coordinate is reduced
/// once at the end of its sum.
inline Prefix inverse_transform(const Params& params, const Prefix& y) {
    if (y.empty()) throw std::invalid_argument("inverse_transform: empty prefix");
    fib_cache().ensure(y.size() + 1);
    const Rational base = params.neg_s_over_r();
    Prefix x;
    x.reserve(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        detail::FractionSum acc;
        Rational power(1);  // (-s/r)^{k-j}, walking j downward from k
        const BigInt fk1_sq = fib(k + 1) * fib(k + 1);
        for (std::size_t back = 0; back <= k; ++back) {
            const std::size_t j = k - back;
            const Rational& yj = y[j];
            if (!yj.is_zero()) {
                acc.add(power.numerator() * fk1_sq * yj.numerator(),
                        power.denominator() * fib(j) * fib(j + 1) * yj.denominator());
            }
            if (back != k) power *= base;
        }
        x.push_back(acc.value() / params.r);
    }
    return x;
}

inline TriangleView fhat_view(const Params& params, std::size_t window) {
    fib_cache().ensure(window + 1);
    return {[params](std::size_t n, std::size_t k) { return forward_entry(params, n, k); },
            window};
}

inline TriangleView fhat_inverse_view(const Params& params, std::size_t window) {
    fib_cache().ensure(window + 1);
    auto powers = std::make_shared<detail::PowerCache>(params.neg_s_over_r());
    return {[params, powers](std::size_t n, std::size_t k) {
                if (k > n) return Rational(0);
                Rational v = powers->at(n - k);
                v *= Rational(fib(n + 1) * fib(n + 1), fib(k) * fib(k + 1));
                return v / params.r;
            },
            window};
}

}  // namespace fibspace

#endif  // FIBSPACE_BAND_OPERATOR_HPP
