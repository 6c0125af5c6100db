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
 * @file duality.hpp
 * @brief Dual-set membership checkers for a candidate sequence a.
 *
 * From a candidate a the engine builds two triangular matrices:
 *
 *   B: b_nk = (1/r)(-s/r)^{n-k} f_{n+1}^2/(f_k f_{k+1}) a_n        (k <= n)
 *   D: d_nk = sum_{j=k}^{n} (1/r)(-s/r)^{j-k} f_{j+1}^2/(f_k f_{k+1}) a_j
 *
 * B row-sums against y reproduce a_n x_n exactly, and D partial sums
 * reproduce sum_{k<=n} a_k x_k exactly, where x is the inverse transform of
 * y. The four membership conditions are the shared checkers of
 * conditions.hpp applied to B (subset condition, the d1 set) and to D
 * (row q-norms d2, column limits d3, interchange d4).
 *
 * D uses a_j inside the j-sum; the exact partial-sum identity above pins
 * that choice down. p = 1 is rejected by every checker: q = p/(p-1) is the
 * whole content of the conditions, and the checks degenerate there.
 * For p = inf the conjugate exponent is taken as 1, turning the q-norm
 * conditions into absolute row sums.
 */

#ifndef FIBSPACE_DUALITY_HPP
#define FIBSPACE_DUALITY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "band_operator.hpp"
#include "conditions.hpp"
#include "params.hpp"
#include "prefix.hpp"

namespace fibspace {

struct DualCandidate {
    Prefix a;       // entries beyond the stored prefix are treated as zero
    Params params;

    Rational at(std::size_t n) const { return n < a.size() ? a[n] : Rational(0); }
};

namespace detail {

inline void require_dual_exponent(const Params& params, const char* who) {
    if (params.p == 1.0)
        throw std::invalid_argument(std::string(who) +
                                    ": p = 1 is not supported for dual-set checks (need p > 1)");
}

}  // namespace detail

/// B as a materialized window: row n is a_n times the inverse-matrix row n.
inline TriangleView build_B(const DualCandidate& candidate, std::size_t N) {
    fib_cache().ensure(N + 1);
    const Params& params = candidate.params;
    const Rational base = params.neg_s_over_r();
    std::vector<std::vector<Rational>> rows(N);
    for (std::size_t n = 0; n < N; ++n) {
        rows[n].resize(n + 1);
        const Rational an = candidate.at(n);
        if (an.is_zero()) continue;
        const Rational lead = an / params.r;
        const BigInt fn1_sq = fib(n + 1) * fib(n + 1);
        Rational power(1);  // (-s/r)^{n-k}, walking k downward from n
        for (std::size_t back = 0; back <= n; ++back) {
            const std::size_t k = n - back;
            rows[n][k] = lead * power * Rational(fn1_sq, fib(k) * fib(k + 1));
            if (back != n) power *= base;
        }
    }
    return view_of_rows(std::move(rows));
}

/// D as a materialized window, accumulated columnwise: for fixed k the rows
/// differ by one extra j-term, so the whole window costs O(N^2) terms.
inline TriangleView build_D(const DualCandidate& candidate, std::size_t N) {
    fib_cache().ensure(N + 1);
    const Params& params = candidate.params;
    const Rational base = params.neg_s_over_r();
    std::vector<std::vector<Rational>> rows(N);
    for (std::size_t n = 0; n < N; ++n) rows[n].resize(n + 1);
    for (std::size_t k = 0; k < N; ++k) {
        const BigInt fk_prod = fib(k) * fib(k + 1);
        Rational power(1);  // (-s/r)^{j-k}
        detail::FractionSum acc;
        for (std::size_t j = k; j < N; ++j) {
            const Rational aj = candidate.at(j);
            if (!aj.is_zero()) {
                acc.add(power.numerator() * fib(j + 1) * fib(j + 1) * aj.numerator(),
                        power.denominator() * fk_prod * aj.denominator());
            }
            rows[j][k] = acc.value() / params.r;
            power *= base;
        }
    }
    return view_of_rows(std::move(rows));
}

/// Subset-supremum condition on B (the alpha-dual set membership proxy).
inline ConditionReport check_d1(const DualCandidate& candidate, std::size_t N,
                                const SubsetFamilyBudget& budget = {},
                                const Tolerances& tol = {}) {
    detail::require_dual_exponent(candidate.params, "check_d1");
    const double q = candidate.params.conjugate();
    auto rep = cond_subset_qnorm(build_B(candidate, N).entry, N, q, budget, tol, "d1");
    return rep;
}

/// sup of row q-norms of D (beta/gamma-dual boundedness).
inline ConditionReport check_d2(const DualCandidate& candidate, std::size_t N,
                                const Tolerances& tol = {}) {
    detail::require_dual_exponent(candidate.params, "check_d2");
    const double q = candidate.params.conjugate();
    return cond_sup_row_qnorm(build_D(candidate, N).entry, N, q, tol, "d2");
}

/// Columnwise limits of D.
inline ConditionReport check_d3(const DualCandidate& candidate, std::size_t N,
                                const Tolerances& tol = {}) {
    detail::require_dual_exponent(candidate.params, "check_d3");
    return cond_column_limits(build_D(candidate, N).entry, N, tol, "d3");
}

/// Interchange of the limit and the absolute row sums of D.
inline ConditionReport check_d4(const DualCandidate& candidate, std::size_t N,
                                const Tolerances& tol = {}) {
    detail::require_dual_exponent(candidate.params, "check_d4");
    return cond_abs_interchange(build_D(candidate, N).entry, N, tol, "d4");
}

/// The gamma-dual condition coincides with d2; only the label differs.
inline ConditionReport gamma_dual_check(const DualCandidate& candidate, std::size_t N,
                                        const Tolerances& tol = {}) {
    detail::require_dual_exponent(candidate.params, "gamma_dual_check");
    const double q = candidate.params.conjugate();
    return cond_sup_row_qnorm(build_D(candidate, N).entry, N, q, tol, "gamma-dual");
}

}  // namespace fibspace

#endif  // FIBSPACE_DUALITY_HPP
