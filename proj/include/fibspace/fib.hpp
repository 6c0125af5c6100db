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
 * @file fib.hpp
 * @brief Arbitrary-precision Fibonacci numbers and the classical identities.
 *
 * Indexing convention: f_0 = f_1 = 1, f_n = f_{n-1} + f_{n-2}. Values are
 * exact big integers; f_{k+1}^2 overflows 64-bit arithmetic near k = 45 and
 * every identity here is asserted exactly.
 *
 * Concurrency: the process-wide cache grows on demand. Call warm_up(n) from a
 * single thread before sharing reads across threads; afterwards everything is
 * read-only and safe to use concurrently.
 */

#ifndef FIBSPACE_FIB_HPP
#define FIBSPACE_FIB_HPP

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <utility>

#include "rational.hpp"

namespace fibspace {

class FibCache {
   public:
    FibCache() : values_{BigInt(1), BigInt(1)} {}

    /// Extends the table so that index n is valid.
    void ensure(std::size_t n) {
        while (values_.size() <= n) {
            const std::size_t m = values_.size();
            values_.push_back(values_[m - 1] + values_[m - 2]);
        }
    }

    const BigInt& at(std::size_t n) {
        ensure(n);
        return values_[n];
    }

    std::size_t size() const { return values_.size(); }
    const std::deque<BigInt>& values() const { return values_; }

   private:
    // deque keeps references to existing entries valid while the table
    // grows; callers freely combine fib(n) and fib(n+1) in one expression
    std::deque<BigInt> values_;
};

inline FibCache& fib_cache() {
    static FibCache cache;
    return cache;
}

/// Precompute f_0..f_n single-threaded before concurrent reads.
inline void warm_up(std::size_t n) { fib_cache().ensure(n); }

inline const BigInt& fib(std::size_t n) { return fib_cache().at(n); }

/// f_{n+1}/f_n, canonical. Converges to the golden ratio.
inline Rational ratio(std::size_t n) { return Rational(fib(n + 1), fib(n)); }

/// f_{n-1} f_{n+1} - f_n^2, which equals (-1)^{n+1}. Requires n >= 1.
inline BigInt cassini(std::size_t n) {
    if (n < 1) throw std::invalid_argument("cassini: n must be >= 1");
    return fib(n - 1) * fib(n + 1) - fib(n) * fib(n);
}

/// The two sides of sum_{k<=n} f_k = f_{n+2} - 1, evaluated independently.
inline std::pair<BigInt, BigInt> partial_sum_identity(std::size_t n) {
    fib_cache().ensure(n + 2);
    BigInt lhs = 0;
    for (std::size_t k = 0; k <= n; ++k) lhs += fib(k);
    BigInt rhs = fib(n + 2) - 1;
    return {std::move(lhs), std::move(rhs)};
}

/// f_{n-1}^2 + f_n f_{n-1} - f_n^2, again (-1)^{n+1}. Requires n >= 1.
inline BigInt cassini_substituted(std::size_t n) {
    if (n < 1) throw std::invalid_argument("cassini_substituted: n must be >= 1");
    const BigInt& a = fib(n - 1);
    const BigInt& b = fib(n);
    return a * a + b * a - b * b;
}

}  // namespace fibspace

#endif  // FIBSPACE_FIB_HPP
