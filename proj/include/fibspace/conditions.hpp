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
 * @file conditions.hpp
 * @brief The shared boundedness/limit condition checkers behind the dual-set
 *        tests and the matrix classification engine.
 *
 * Four conditions, each evaluated at finite truncation across window
 * doublings (N/4, N/2, N by default):
 *
 *   sup_row_qnorm       sup_n sum_k |m_nk|^q stays bounded
 *   column_limits       lim_n m_nk exists for each (small) k
 *   abs_interchange     lim_n sum_k |m_nk| equals sum_k |lim_n m_nk|
 *   subset_qnorm        sup over finite row subsets K of
 *                       sum_k |sum_{n in K} m_nk|^q stays bounded
 *
 * Verdict rules, shared everywhere: "holds-in-window" when the tracked
 * quantity moves by < 1e-9 relative across the last doubling;
 * "fails-with-witness" when it grows by >= 10% per doubling (the witness is
 * retained); otherwise "inconclusive". Truncation can prove growth but never
 * summability, so the verdicts deliberately never claim a theorem.
 *
 * The subset supremum is exponential in the window: exact enumeration runs
 * up to max_exhaustive_n rows (4096 subsets at 12), beyond that a greedy
 * lower bound and the columnwise upper bound sum_k (sum_n |m_nk|)^q bracket
 * the supremum.
 */

#ifndef FIBSPACE_CONDITIONS_HPP
#define FIBSPACE_CONDITIONS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "summation.hpp"

namespace fibspace {

enum class Verdict { holds_in_window, fails_with_witness, inconclusive };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds_in_window: return "holds-in-window";
        case Verdict::fails_with_witness: return "fails-with-witness";
        default: return "inconclusive";
    }
}

struct Tolerances {
    double hold_rel = 1e-9;       // relative movement treated as "stable"
    double growth_factor = 1.10;  // per-doubling growth treated as "growing"
    double no_limit_fluct = 0.5;  // column fluctuation this large in every window: no limit
};

enum class BoundMode { lower_greedy, upper_columnwise };

/// Budget for the supremum over finite row subsets.
struct SubsetFamilyBudget {
    std::size_t max_exhaustive_n = 12;                  // full enumeration cutoff (2^n subsets)
    BoundMode bound_mode = BoundMode::upper_columnwise; // headline estimate beyond the cutoff
};

struct ConditionReport {
    std::string condition;             // which checker ran
    std::string label;                 // caller-facing name, e.g. "d2" or "D:sup_row_qnorm"
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::size_t> windows;
    std::vector<double> measurements;  // tracked quantity per window
    std::vector<double> lower_bounds;  // subset condition only
    std::vector<double> upper_bounds;  // subset condition only
    std::string witness;               // set when verdict is fails-with-witness
};

using MatrixFn = std::function<Rational(std::size_t, std::size_t)>;

/// Halving ladder ending at N, e.g. 64 -> {16, 32, 64}.
inline std::vector<std::size_t> window_ladder(std::size_t N, int levels = 3) {
    std::vector<std::size_t> out;
    std::size_t w = N;
    for (int i = 0; i < levels && w >= 2; ++i) {
        out.push_back(w);
        w /= 2;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

/// Row-major double window of a rational matrix evaluator.
struct DenseWindow {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    double at(std::size_t n, std::size_t k) const { return a[n * cols + k]; }
};

inline DenseWindow materialize(const MatrixFn& fn, std::size_t rows, std::size_t cols) {
    DenseWindow w{rows, cols, {}};
    w.a.reserve(rows * cols);
    for (std::size_t n = 0; n < rows; ++n)
        for (std::size_t k = 0; k < cols; ++k) w.a.push_back(fn(n, k).to_double());
    return w;
}

namespace detail {

inline double rel_change(double last, double prev) {
    const double scale = std::max({std::abs(last), std::abs(prev), 1e-300});
    return std::abs(last - prev) / scale;
}

/// Stable / growing / neither, from a trace of window measurements.
inline Verdict verdict_from_trace(const std::vector<double>& trace, const Tolerances& tol) {
    if (trace.size() < 2) return Verdict::inconclusive;
    const double last = trace.back();
    const double prev = trace[trace.size() - 2];
    if ((last == 0.0 && prev == 0.0) || rel_change(last, prev) < tol.hold_rel)
        return Verdict::holds_in_window;
    bool growing = true;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        const bool step_grows = std::isinf(trace[i]) ||
                                (trace[i - 1] > 0.0 && trace[i] >= tol.growth_factor * trace[i - 1]);
        if (!step_grows) growing = false;
    }
    return growing ? Verdict::fails_with_witness : Verdict::inconclusive;
}

}  // namespace detail

/// sup_n sum_k |m_nk|^q over n, k < w for each window w.
inline ConditionReport cond_sup_row_qnorm(const MatrixFn& fn, std::size_t N, double q,
                                          const Tolerances& tol = {},
                                          std::string label = "sup_row_qnorm") {
    ConditionReport rep;
    rep.condition = "sup_row_qnorm";
    rep.label = std::move(label);
    rep.windows = window_ladder(N);
    const DenseWindow M = materialize(fn, N, N);
    std::size_t sup_row = 0;
    for (std::size_t w : rep.windows) {
        double sup = 0.0;
        for (std::size_t n = 0; n < w; ++n) {
            CompensatedSum row;
            for (std::size_t k = 0; k < w; ++k) row.add(std::pow(std::abs(M.at(n, k)), q));
            if (row.value() > sup) {
                sup = row.value();
                sup_row = n;
            }
        }
        rep.measurements.push_back(sup);
    }
    rep.verdict = detail::verdict_from_trace(rep.measurements, tol);
    if (rep.verdict == Verdict::fails_with_witness)
        rep.witness = "row " + std::to_string(sup_row) + " q-power sum " +
                      std::to_string(rep.measurements.back());
    return rep;
}

/// Columnwise Cauchy proxy: for k < w/4 the fluctuation of m_nk over the
/// last half-window, relative to the column scale; tracked per window.
inline ConditionReport cond_column_limits(const MatrixFn& fn, std::size_t N,
                                          const Tolerances& tol = {},
                                          std::string label = "column_limits") {
    ConditionReport rep;
    rep.condition = "column_limits";
    rep.label = std::move(label);
    rep.windows = window_ladder(N);
    const DenseWindow M = materialize(fn, N, N);
    std::size_t bad_col = 0;
    for (std::size_t w : rep.windows) {
        const std::size_t k_cut = std::max<std::size_t>(1, w / 4);
        double worst = 0.0;
        for (std::size_t k = 0; k < k_cut; ++k) {
            double lo = M.at(w / 2, k), hi = lo, scale = 0.0;
            for (std::size_t n = w / 2; n < w; ++n) {
                const double v = M.at(n, k);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                scale = std::max(scale, std::abs(v));
            }
            const double fluct = (hi - lo) / std::max(scale, 1e-300);
            if (fluct > worst) {
                worst = fluct;
                bad_col = k;
            }
        }
        rep.measurements.push_back(worst);
    }
    const double last = rep.measurements.back();
    if (last <= tol.hold_rel) {
        rep.verdict = Verdict::holds_in_window;
    } else {
        bool growing = rep.measurements.size() >= 2;
        for (std::size_t i = 1; i < rep.measurements.size(); ++i)
            if (!(rep.measurements[i] >= tol.growth_factor * rep.measurements[i - 1] ||
                  std::isinf(rep.measurements[i])))
                growing = false;
        bool never_settles = rep.measurements.size() >= 2;
        for (double m : rep.measurements)
            if (!(m >= tol.no_limit_fluct)) never_settles = false;
        rep.verdict = (growing || never_settles) ? Verdict::fails_with_witness
                                                 : Verdict::inconclusive;
        if (rep.verdict == Verdict::fails_with_witness)
            rep.witness = "column " + std::to_string(bad_col) + " fluctuation " +
                          std::to_string(last);
    }
    return rep;
}

/// Discrepancy between the limit of absolute row sums and the absolute sum
/// of column limits. Requires usable column limits; rows carry the window's
/// full support, columns only k < w/4 (mass escaping along the diagonal is
/// exactly what this condition is meant to catch).
inline ConditionReport cond_abs_interchange(const MatrixFn& fn, std::size_t N,
                                            const Tolerances& tol = {},
                                            std::string label = "abs_interchange") {
    ConditionReport rep;
    rep.condition = "abs_interchange";
    rep.label = std::move(label);
    rep.windows = window_ladder(N);
    const ConditionReport columns = cond_column_limits(fn, N, tol);
    const DenseWindow M = materialize(fn, N, N);
    double row_sum_last = 0.0, col_sum_last = 0.0;
    for (std::size_t w : rep.windows) {
        CompensatedSum row;  // absolute row sum at the window's last row
        for (std::size_t k = 0; k < w; ++k) row.add(std::abs(M.at(w - 1, k)));
        const std::size_t k_cut = std::max<std::size_t>(1, w / 4);
        CompensatedSum cols;  // absolute sum of column-limit estimates
        for (std::size_t k = 0; k < k_cut; ++k) cols.add(std::abs(M.at(w - 1, k)));
        row_sum_last = row.value();
        col_sum_last = cols.value();
        rep.measurements.push_back(detail::rel_change(row_sum_last, col_sum_last));
    }
    if (columns.verdict != Verdict::holds_in_window) {
        rep.verdict = Verdict::inconclusive;  // column limits unavailable
        return rep;
    }
    const double last = rep.measurements.back();
    if (last <= tol.hold_rel || (row_sum_last == 0.0 && col_sum_last == 0.0)) {
        rep.verdict = Verdict::holds_in_window;
    } else if (rep.measurements.size() >= 2 &&
               last >= 0.5 * rep.measurements[rep.measurements.size() - 2] &&
               last > std::sqrt(tol.hold_rel)) {
        // persistent discrepancy that is not decaying with the window
        rep.verdict = Verdict::fails_with_witness;
        rep.witness = "row sums -> " + std::to_string(row_sum_last) +
                      ", summed column limits -> " + std::to_string(col_sum_last);
    } else {
        rep.verdict = Verdict::inconclusive;
    }
    return rep;
}

/// Objective of one subset candidate: sum_k |sum_{n in K} m_nk|^q over the
/// window's columns.
inline double subset_objective(const DenseWindow& M, const std::vector<std::size_t>& K,
                               std::size_t window, double q) {
    CompensatedSum total;
    for (std::size_t k = 0; k < window; ++k) {
        CompensatedSum col;
        for (std::size_t n : K)
            if (n < window) col.add(M.at(n, k));
        total.add(std::pow(std::abs(col.value()), q));
    }
    return total.value();
}

struct SubsetBounds {
    double lower = 0.0;                    // objective of the best candidate found
    double upper = 0.0;                    // columnwise bound sum_k (sum_n |m_nk|)^q
    std::optional<double> exact;           // set when the window was enumerated
    std::vector<std::size_t> best_subset;  // candidate achieving `lower` (or `exact`)
};

/// Bounds (or the exact value) of the subset supremum at one window.
/// `carry_in` candidates from smaller windows keep the lower bounds monotone.
inline SubsetBounds subset_qnorm_bounds(const DenseWindow& M, std::size_t window, double q,
                                        const SubsetFamilyBudget& budget,
                                        const std::vector<std::vector<std::size_t>>& carry_in = {}) {
    SubsetBounds out;
    CompensatedSum upper;
    for (std::size_t k = 0; k < window; ++k) {
        CompensatedSum col;
        for (std::size_t n = 0; n < window; ++n) col.add(std::abs(M.at(n, k)));
        upper.add(std::pow(col.value(), q));
    }
    out.upper = upper.value();

    // 2^window subsets; anything past 20 rows is out of desk range regardless
    // of the configured budget.
    if (window <= std::min<std::size_t>(budget.max_exhaustive_n, 20)) {
        double best = 0.0;
        unsigned long best_mask = 0;
        const unsigned long limit = 1UL << window;
        for (unsigned long mask = 1; mask < limit; ++mask) {
            CompensatedSum total;
            for (std::size_t k = 0; k < window; ++k) {
                CompensatedSum col;
                for (std::size_t n = 0; n < window; ++n)
                    if (mask & (1UL << n)) col.add(M.at(n, k));
                total.add(std::pow(std::abs(col.value()), q));
            }
            if (total.value() > best) {
                best = total.value();
                best_mask = mask;
            }
        }
        out.exact = best;
        out.lower = best;
        for (std::size_t n = 0; n < window; ++n)
            if (best_mask & (1UL << n)) out.best_subset.push_back(n);
        return out;
    }

    // Greedy lower bound: singletons, the full window, per-column
    // sign-aligned sets, plus carried-in candidates.
    std::vector<std::vector<std::size_t>> candidates = carry_in;
    for (std::size_t n = 0; n < window; ++n) candidates.push_back({n});
    {
        std::vector<std::size_t> full(window);
        for (std::size_t n = 0; n < window; ++n) full[n] = n;
        candidates.push_back(std::move(full));
    }
    for (std::size_t k = 0; k < window; ++k) {
        std::vector<std::size_t> pos, neg;
        for (std::size_t n = 0; n < window; ++n) {
            const double v = M.at(n, k);
            if (v > 0.0) pos.push_back(n);
            else if (v < 0.0) neg.push_back(n);
        }
        if (!pos.empty()) candidates.push_back(std::move(pos));
        if (!neg.empty()) candidates.push_back(std::move(neg));
    }
    for (auto& K : candidates) {
        const double v = subset_objective(M, K, window, q);
        if (v > out.lower) {
            out.lower = v;
            out.best_subset = K;
        }
    }
    return out;
}

/// The subset-supremum condition. "holds" only when the upper bound (or the
/// exact enumerated value) is stable across doublings; "fails" only when the
/// lower bound grows by >= 10% per doubling.
inline ConditionReport cond_subset_qnorm(const MatrixFn& fn, std::size_t N, double q,
                                         const SubsetFamilyBudget& budget = {},
                                         const Tolerances& tol = {},
                                         std::string label = "subset_qnorm") {
    ConditionReport rep;
    rep.condition = "subset_qnorm";
    rep.label = std::move(label);
    rep.windows = window_ladder(N);
    const DenseWindow M = materialize(fn, N, N);
    std::vector<std::vector<std::size_t>> carry;
    std::vector<std::size_t> last_witness;
    bool all_exact = true;
    for (std::size_t w : rep.windows) {
        const SubsetBounds b = subset_qnorm_bounds(M, w, q, budget, carry);
        rep.lower_bounds.push_back(b.lower);
        rep.upper_bounds.push_back(b.exact ? *b.exact : b.upper);
        rep.measurements.push_back(b.exact ? *b.exact
                                           : (budget.bound_mode == BoundMode::lower_greedy
                                                  ? b.lower
                                                  : b.upper));
        if (!b.exact) all_exact = false;
        if (!b.best_subset.empty()) {
            carry.push_back(b.best_subset);
            last_witness = b.best_subset;
        }
    }

    const auto grows = [&](const std::vector<double>& t) {
        if (t.size() < 2) return false;
        for (std::size_t i = 1; i < t.size(); ++i)
            if (!(std::isinf(t[i]) || (t[i - 1] > 0.0 && t[i] >= tol.growth_factor * t[i - 1])))
                return false;
        return true;
    };
    const auto stable = [&](const std::vector<double>& t) {
        if (t.size() < 2) return false;
        const double last = t.back(), prev = t[t.size() - 2];
        return (last == 0.0 && prev == 0.0) || detail::rel_change(last, prev) < tol.hold_rel;
    };

    if (all_exact) {
        if (stable(rep.measurements)) rep.verdict = Verdict::holds_in_window;
        else if (grows(rep.measurements)) rep.verdict = Verdict::fails_with_witness;
        else rep.verdict = Verdict::inconclusive;
    } else if (stable(rep.upper_bounds)) {
        rep.verdict = Verdict::holds_in_window;
    } else if (grows(rep.lower_bounds)) {
        rep.verdict = Verdict::fails_with_witness;
    } else {
        rep.verdict = Verdict::inconclusive;
    }

    if (rep.verdict == Verdict::fails_with_witness) {
        std::string k_str = "K={";
        for (std::size_t i = 0; i < last_witness.size(); ++i) {
            if (i) k_str += ",";
            k_str += std::to_string(last_witness[i]);
        }
        k_str += "}";
        rep.witness = k_str + " objective " + std::to_string(rep.lower_bounds.back());
    }
    return rep;
}

}  // namespace fibspace

#endif  // FIBSPACE_CONDITIONS_HPP
