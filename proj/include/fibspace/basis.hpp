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
 * @file basis.hpp
 * @brief The Schauder-basis elements c^(n), expansion coefficients, partial
 *        sums and residual decay.
 *
 * Each c^(n) transforms exactly onto the n-th unit vector, so the expansion
 * coefficients of x are just its forward transform, and the residual after
 * the m-th partial sum equals the tail p-norm of the transform. Partial sums
 * are accumulated column-exactly in rationals. p = inf is excluded.
 */

#ifndef FIBSPACE_BASIS_HPP
#define FIBSPACE_BASIS_HPP

#include <cstddef>
#include <stdexcept>

#include "band_operator.hpp"
#include "generators.hpp"
#include "space.hpp"

namespace fibspace {

/// Prefix of c^(n) over [0, N). Rejects N <= n: such a prefix is identically
/// zero and says nothing.
inline Prefix basis_element(const Params& params, std::size_t n, std::size_t N) {
    if (N <= n) throw std::invalid_argument("basis_element: window must exceed the index");
    return basis_sequence(params, n).prefix(N);
}

/// True iff forward_transform(c^(n) prefix) equals the unit prefix e^(n),
/// component-exact.
inline bool verify_basis_transform(const Params& params, std::size_t n, std::size_t N) {
    if (N <= n + 1) throw std::invalid_argument("verify_basis_transform: window too small");
    const Prefix y = forward_transform(params, basis_element(params, n, N));
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (k == n ? !(y[k] == Rational(1)) : !y[k].is_zero()) return false;
    }
    return true;
}

/// The unique expansion coefficients of x in the c^(n) family: its forward
/// transform.
inline Prefix expansion_coefficients(const Params& params, const Prefix& x) {
    return forward_transform(params, x);
}

/// Partial expansion x^(m) = sum_{n<=m} coeff_n c^(n) over the window of x,
/// accumulated exactly.
inline Prefix partial_expansion(const Params& params, const Prefix& x, std::size_t m) {
    if (m >= x.size()) throw std::invalid_argument("partial_expansion: m out of window");
    const Prefix coeff = forward_transform(params, x);
    const std::size_t N = x.size();
    std::vector<detail::FractionSum> acc(N);
    for (std::size_t n = 0; n <= m; ++n) {
        if (coeff[n].is_zero()) continue;
        const auto cn = basis_sequence(params, n);
        for (std::size_t k = n; k < N; ++k) acc[k].add_product(coeff[n], cn.at(k));
    }
    Prefix out;
    out.reserve(N);
    for (auto& a : acc) out.push_back(a.value());
    return out;
}

/// || x - x^(m) || in the band-space norm; equals the tail p-norm of the
/// transform, nonincreasing in m, and zero at m = N-1.
inline double expansion_residual(const Params& params, const Prefix& x, std::size_t m) {
    if (params.p_is_inf()) throw std::invalid_argument("expansion_residual: needs finite p");
    const Prefix xm = partial_expansion(params, x, m);
    return fhat_norm(params, subtracted(x, xm)).value;
}

}  // namespace fibspace

#endif  // FIBSPACE_BASIS_HPP
