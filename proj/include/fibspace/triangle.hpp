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

/// @file triangle.hpp
/// @brief Lazily evaluated lower-triangular matrices over a truncation window.

#ifndef FIBSPACE_TRIANGLE_HPP
#define FIBSPACE_TRIANGLE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "rational.hpp"

namespace fibspace {

/// entry(n, k) must return 0 whenever k > n.
struct TriangleView {
    std::function<Rational(std::size_t, std::size_t)> entry;
    std::size_t window = 0;
};

inline TriangleView zero_view(std::size_t window) {
    return {[](std::size_t, std::size_t) { return Rational(0); }, window};
}

/// Wraps materialized lower-triangular storage: rows[n] holds columns 0..n.
inline TriangleView view_of_rows(std::vector<std::vector<Rational>> rows) {
    auto storage = std::make_shared<std::vector<std::vector<Rational>>>(std::move(rows));
    const std::size_t window = storage->size();
    return {[storage](std::size_t n, std::size_t k) {
                if (n >= storage->size() || k >= (*storage)[n].size()) return Rational(0);
                return (*storage)[n][k];
            },
            window};
}

/// (A B)_{nk} = sum_j A(n,j) B(j,k), exact. Both factors are triangular, so
/// only j in [k, n] can contribute.
inline Rational product_entry(const TriangleView& A, const TriangleView& B, std::size_t n,
                              std::size_t k) {
    if (k > n) return Rational(0);
    detail::FractionSum acc;
    const std::size_t hi = std::min(n, A.window == 0 ? n : A.window - 1);
    for (std::size_t j = k; j <= hi; ++j) acc.add_product(A.entry(n, j), B.entry(j, k));
    return acc.value();
}

}  // namespace fibspace

#endif  // FIBSPACE_TRIANGLE_HPP
