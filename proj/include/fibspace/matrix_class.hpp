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
 * @file matrix_class.hpp
 * @brief Classification of a sampled infinite matrix A against the
 *        band-domain and plain-l_p mapping classes.
 *
 * For maps out of the band space the conditions act not on A but on
 *
 *   D^(m): d^(m)_nk = sum_{j=k}^{m}   (1/r)(-s/r)^{j-k} f_{j+1}^2/(f_k f_{k+1}) a_nj
 *   D:     d_nk     = sum_{j=k}^{inf} (1/r)(-s/r)^{j-k} f_{j+1}^2/(f_k f_{k+1}) a_nj
 *
 * i.e. D = A composed with the inverse band matrix. For row-finite A the
 * D sums are exact; otherwise they are truncated at a tail depth J with the
 * last-term magnitude reported, and nonconvergent tails poison the verdict
 * to "inconclusive" rather than being cut silently.
 *
 * The class/condition table is data: each class id maps to the list of
 * (matrix, checker) pairs it requires. The same four checkers also classify
 * A directly against the plain classes (no band preprocessing); the engine
 * is one condition evaluator applied to different matrices.
 */

#ifndef FIBSPACE_MATRIX_CLASS_HPP
#define FIBSPACE_MATRIX_CLASS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "band_operator.hpp"
#include "conditions.hpp"
#include "params.hpp"
#include "prefix.hpp"

namespace fibspace {

struct SampledMatrix {
    std::string name = "custom";
    std::function<Rational(std::size_t, std::size_t)> entry;
    /// Exclusive end of the nonzero support of row n, when known. Row-finite
    /// matrices make the D sums exact.
    std::optional<std::function<std::size_t(std::size_t)>> row_end;
};

inline SampledMatrix zero_matrix() {
    return {"zero", [](std::size_t, std::size_t) { return Rational(0); },
            [](std::size_t) -> std::size_t { return 0; }};
}

inline SampledMatrix identity_matrix() {
    return {"identity", [](std::size_t n, std::size_t k) { return Rational(n == k ? 1 : 0); },
            [](std::size_t n) -> std::size_t { return n + 1; }};
}

inline SampledMatrix fhat_matrix(const Params& params) {
    return {"fhat", [params](std::size_t n, std::size_t k) { return forward_entry(params, n, k); },
            [](std::size_t n) -> std::size_t { return n + 1; }};
}

/// Every row equals the given prefix (zero beyond it).
inline SampledMatrix constant_row_matrix(Prefix row) {
    const std::size_t width = row.size();
    auto shared = std::make_shared<Prefix>(std::move(row));
    return {"constant_row",
            [shared](std::size_t, std::size_t k) {
                return k < shared->size() ? (*shared)[k] : Rational(0);
            },
            [width](std::size_t) -> std::size_t { return width; }};
}

/// Dense window (row-major); zero outside.
inline SampledMatrix dense_matrix(std::vector<std::vector<Rational>> rows,
                                  std::string name = "dense") {
    auto shared = std::make_shared<std::vector<std::vector<Rational>>>(std::move(rows));
    return {std::move(name),
            [shared](std::size_t n, std::size_t k) {
                if (n >= shared->size() || k >= (*shared)[n].size()) return Rational(0);
                return (*shared)[n][k];
            },
            [shared](std::size_t n) -> std::size_t {
                return n < shared->size() ? (*shared)[n].size() : 0;
            }};
}

/// D^(m): rows n < window, columns k <= m (zero beyond), always an exact
/// finite sum. The window is rectangular, not triangular.
inline TriangleView build_Dm(const SampledMatrix& A, const Params& params, std::size_t m,
                             std::size_t window) {
    if (m >= window) throw std::invalid_argument("build_Dm: need m < window");
    fib_cache().ensure(m + 2);
    const Rational base = params.neg_s_over_r();
    std::vector<std::vector<Rational>> rows(window);
    for (std::size_t n = 0; n < window; ++n) {
        rows[n].assign(m + 1, Rational(0));
        const std::size_t row_hi =
            A.row_end ? std::min<std::size_t>(m + 1, (*A.row_end)(n)) : m + 1;
        for (std::size_t k = 0; k <= m; ++k) {
            detail::FractionSum acc;
            Rational power(1);  // (-s/r)^{j-k}
            bool any = false;
            for (std::size_t j = k; j < row_hi; ++j) {
                const Rational anj = A.entry(n, j);
                if (!anj.is_zero()) {
                    any = true;
                    acc.add(power.numerator() * fib(j + 1) * fib(j + 1) * anj.numerator(),
                            power.denominator() * fib(k) * fib(k + 1) * anj.denominator());
                }
                power *= base;
            }
            if (any) rows[n][k] = acc.value() / params.r;
        }
    }
    auto storage = std::make_shared<std::vector<std::vector<Rational>>>(std::move(rows));
    return {[storage](std::size_t n, std::size_t k) {
                if (n >= storage->size() || k >= (*storage)[n].size()) return Rational(0);
                return (*storage)[n][k];
            },
            window};
}

struct LimitMatrixResult {
    TriangleView view;            // lower-triangular window of D (columns <= rows by construction
                                  // when A is lower-triangular; dense otherwise, stored densely)
    bool exact = false;           // true when every row was exhausted (row-finite A)
    double last_term_max = 0.0;   // largest |last included term|, truncation indicator
    bool tail_decaying = true;    // false flags a nonconvergent tail
};

/// D with tails summed to depth J (>= window). Row-finite matrices come out
/// exact; otherwise the last included term is tracked per row and a
/// non-decreasing tail marks the result unusable.
inline LimitMatrixResult build_Dinf(const SampledMatrix& A, const Params& params,
                                    std::size_t window, std::size_t tail_depth) {
    if (tail_depth < window) throw std::invalid_argument("build_Dinf: need tail depth >= window");
    fib_cache().ensure(tail_depth + 2);
    const Rational base = params.neg_s_over_r();
    LimitMatrixResult out;
    out.exact = A.row_end.has_value();
    std::vector<std::vector<Rational>> rows(window);
    for (std::size_t n = 0; n < window; ++n) {
        rows[n].assign(window, Rational(0));
        const std::size_t row_hi = A.row_end ? std::min<std::size_t>(tail_depth, (*A.row_end)(n))
                                             : tail_depth;
        for (std::size_t k = 0; k < window; ++k) {
            detail::FractionSum acc;
            Rational power(1);
            bool any = false;
            double prev_term = 0.0, last_term = 0.0;
            for (std::size_t j = k; j < row_hi; ++j) {
                const Rational anj = A.entry(n, j);
                if (!anj.is_zero()) {
                    any = true;
                    const BigInt tn = power.numerator() * fib(j + 1) * fib(j + 1) * anj.numerator();
                    const BigInt td =
                        power.denominator() * fib(k) * fib(k + 1) * anj.denominator();
                    acc.add(tn, td);
                    prev_term = last_term;
                    last_term = std::abs(Rational(tn, td).to_double());
                }
                power *= base;
            }
            if (any) rows[n][k] = acc.value() / params.r;
            if (!out.exact) {
                out.last_term_max = std::max(out.last_term_max, last_term);
                if (last_term > 0.0 && prev_term > 0.0 && last_term >= prev_term)
                    out.tail_decaying = false;
            }
        }
    }
    auto storage = std::make_shared<std::vector<std::vector<Rational>>>(std::move(rows));
    out.view = {[storage](std::size_t n, std::size_t k) {
                    if (n >= storage->size() || k >= (*storage)[n].size()) return Rational(0);
                    return (*storage)[n][k];
                },
                window};
    return out;
}

enum class CheckerKind { sup_row_qnorm, column_limits, abs_interchange, subset_qnorm };
enum class CheckTarget { on_A, on_Dm, on_D };

struct ClassRequirement {
    CheckTarget target;
    CheckerKind kind;
};

struct MatrixClassSpec {
    std::string id;
    bool band_domain;   // conditions act on D/D^(m) rather than A
    bool source_is_inf; // requires p = inf; otherwise 1 < p < inf
    std::vector<ClassRequirement> requirements;
};

/// The ten supported classes; band-domain ones first.
inline const std::vector<MatrixClassSpec>& matrix_class_table() {
    using K = CheckerKind;
    using T = CheckTarget;
    static const std::vector<MatrixClassSpec> table = {
        {"lpF_to_c", true, false,
         {{T::on_Dm, K::sup_row_qnorm}, {T::on_Dm, K::column_limits},
          {T::on_D, K::sup_row_qnorm}, {T::on_D, K::column_limits}}},
        {"lpF_to_l1", true, false,
         {{T::on_Dm, K::sup_row_qnorm}, {T::on_Dm, K::column_limits},
          {T::on_D, K::subset_qnorm}}},
        {"linfF_to_c", true, true,
         {{T::on_Dm, K::column_limits}, {T::on_Dm, K::abs_interchange},
          {T::on_D, K::column_limits}, {T::on_D, K::abs_interchange}}},
        {"lpF_to_linf", true, false,
         {{T::on_Dm, K::sup_row_qnorm}, {T::on_Dm, K::column_limits},
          {T::on_D, K::sup_row_qnorm}}},
        {"linfF_to_l1", true, true,
         {{T::on_Dm, K::column_limits}, {T::on_Dm, K::abs_interchange},
          {T::on_D, K::subset_qnorm}}},
        {"linfF_to_linf", true, true,
         {{T::on_Dm, K::column_limits}, {T::on_Dm, K::abs_interchange},
          {T::on_D, K::sup_row_qnorm}}},
        {"lp_to_c", false, false, {{T::on_A, K::sup_row_qnorm}, {T::on_A, K::column_limits}}},
        {"lp_to_l1", false, false, {{T::on_A, K::subset_qnorm}}},
        {"linf_to_c", false, true, {{T::on_A, K::column_limits}, {T::on_A, K::abs_interchange}}},
        {"lp_to_linf", false, false, {{T::on_A, K::sup_row_qnorm}}},
    };
    return table;
}

struct ClassificationReport {
    std::string target_class;
    std::vector<ConditionReport> conditions;
    Verdict overall = Verdict::inconclusive;
    std::string note;  // tail-truncation diagnostics etc.
};

namespace detail {

inline Verdict aggregate(const std::vector<ConditionReport>& reports) {
    bool any_inconclusive = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fails_with_witness) return Verdict::fails_with_witness;
        if (r.verdict == Verdict::inconclusive) any_inconclusive = true;
    }
    return any_inconclusive ? Verdict::inconclusive : Verdict::holds_in_window;
}

inline ConditionReport run_checker(CheckerKind kind, const MatrixFn& fn, std::size_t N, double q,
                                   const SubsetFamilyBudget& budget, const Tolerances& tol,
                                   const std::string& label) {
    switch (kind) {
        case CheckerKind::sup_row_qnorm: return cond_sup_row_qnorm(fn, N, q, tol, label);
        case CheckerKind::column_limits: return cond_column_limits(fn, N, tol, label);
        case CheckerKind::abs_interchange: return cond_abs_interchange(fn, N, tol, label);
        default: return cond_subset_qnorm(fn, N, q, budget, tol, label);
    }
}

}  // namespace detail

inline const MatrixClassSpec& find_class(const std::string& id) {
    for (const auto& spec : matrix_class_table())
        if (spec.id == id) return spec;
    throw std::invalid_argument("unknown matrix class id '" + id + "'");
}

/// Classifies A against one band-domain class. The D^(m) requirements run on
/// the small-m ladder {2, 4, 8} so that the aggregate is dominated by the
/// window growth rather than the cut position.
inline ClassificationReport classify(const SampledMatrix& A, const Params& params,
                                     const std::string& target, std::size_t N,
                                     const SubsetFamilyBudget& budget = {},
                                     const Tolerances& tol = {}) {
    const MatrixClassSpec& spec = find_class(target);
    if (!spec.band_domain)
        throw std::invalid_argument("classify: '" + target + "' is a plain class; use classify_plain");
    if (spec.source_is_inf && !params.p_is_inf())
        throw std::invalid_argument("classify: class '" + target + "' requires p = inf");
    if (!spec.source_is_inf && (params.p_is_inf() || params.p <= 1.0))
        throw std::invalid_argument("classify: class '" + target + "' requires 1 < p < inf");
    if (N < 16) throw std::invalid_argument("classify: window must be >= 16");

    const double q = params.conjugate();
    ClassificationReport rep;
    rep.target_class = target;

    bool needs_D = false;
    for (const auto& request : spec.requirements)
        if (request.target == CheckTarget::on_D) needs_D = true;

    LimitMatrixResult D;
    if (needs_D) {
        D = build_Dinf(A, params, N, 2 * N);
        if (!D.exact) {
            rep.note = "D tails truncated at depth " + std::to_string(2 * N) +
                       "; largest last term " + std::to_string(D.last_term_max);
            if (!D.tail_decaying) rep.note += " (tail not decreasing)";
        }
    }

    std::vector<std::size_t> m_ladder;
    for (std::size_t m = 2; m <= std::max<std::size_t>(2, N / 8); m *= 2) m_ladder.push_back(m);

    for (const auto& request : spec.requirements) {
        switch (request.target) {
            case CheckTarget::on_Dm: {
                for (std::size_t m : m_ladder) {
                    const TriangleView Dm = build_Dm(A, params, m, N);
                    auto r = detail::run_checker(request.kind, Dm.entry, N, q, budget, tol,
                                                 "D^(m=" + std::to_string(m) + ")");
                    rep.conditions.push_back(std::move(r));
                }
                break;
            }
            case CheckTarget::on_D: {
                auto r = detail::run_checker(request.kind, D.view.entry, N, q, budget, tol, "D");
                if (!D.exact && !D.tail_decaying) {
                    r.verdict = Verdict::inconclusive;
                    r.witness = "nonconvergent tail truncation";
                }
                rep.conditions.push_back(std::move(r));
                break;
            }
            default:
                throw std::logic_error("classify: plain-A requirement in a band class");
        }
    }
    rep.overall = detail::aggregate(rep.conditions);
    return rep;
}

/// Classifies A directly against one of the plain classes (no band
/// preprocessing). p is the source exponent.
inline ClassificationReport classify_plain(const SampledMatrix& A, double p,
                                             const std::string& target, std::size_t N,
                                             const SubsetFamilyBudget& budget = {},
                                             const Tolerances& tol = {}) {
    const MatrixClassSpec& spec = find_class(target);
    if (spec.band_domain)
        throw std::invalid_argument("classify_plain: '" + target + "' is a band class; use classify");
    if (spec.source_is_inf && !std::isinf(p))
        throw std::invalid_argument("classify_plain: class '" + target + "' requires p = inf");
    if (!spec.source_is_inf && (std::isinf(p) || p <= 1.0))
        throw std::invalid_argument("classify_plain: class '" + target + "' requires 1 < p < inf");
    if (N < 16) throw std::invalid_argument("classify_plain: window must be >= 16");

    const double q = std::isinf(p) ? 1.0 : p / (p - 1.0);
    ClassificationReport rep;
    rep.target_class = target;
    for (const auto& request : spec.requirements) {
        rep.conditions.push_back(
            detail::run_checker(request.kind, A.entry, N, q, budget, tol, "A"));
    }
    rep.overall = detail::aggregate(rep.conditions);
    return rep;
}

}  // namespace fibspace

#endif  // FIBSPACE_MATRIX_CLASS_HPP
