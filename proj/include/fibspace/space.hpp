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
 * @file space.hpp
 * @brief Norms, membership diagnostics, inclusion bounds, solidity and the
 *        explicit counterexample sequences for the band-weighted spaces.
 *
 * Membership in an infinite-sum space is undecidable from a prefix. Every
 * check here states what it measures at truncation N and never claims more:
 * "holds-in-window" style verdicts come from growth across window doublings.
 *
 * Tolerances: exact assertions wherever both sides are rational; 1e-12
 * relative for float comparisons; 1e-9 relative change for "converged".
 */

#ifndef FIBSPACE_SPACE_HPP
#define FIBSPACE_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "band_operator.hpp"
#include "generators.hpp"
#include "params.hpp"
#include "prefix.hpp"
#include "summation.hpp"

namespace fibspace {

enum class NormMode { p_norm, sup_norm };

struct NormResult {
    double value = 0.0;
    NormMode mode = NormMode::p_norm;
    std::size_t truncation = 0;
};

/// The band-space norm of a prefix: the plain p-norm (sup-norm for p = inf)
/// of the forward transform over the same window.
inline NormResult fhat_norm(const Params& params, const Prefix& x) {
    if (x.empty()) throw std::invalid_argument("fhat_norm: empty prefix");
    const Prefix y = forward_transform(params, x);
    const std::vector<double> yd = to_doubles(y);
    NormResult out;
    out.truncation = x.size();
    out.mode = params.p_is_inf() ? NormMode::sup_norm : NormMode::p_norm;
    out.value = p_norm(yd, params.p);
    return out;
}

/// Returns (band-space norm of x, (|r| + 2|s|) * plain p-norm of x).
/// At any finite window the first never exceeds the second; this is a
/// finite-sum inequality and holds for arbitrary finite nonzero r, s.
inline std::pair<double, double> inclusion_bound_check(const Params& params, const Prefix& x) {
    const double lhs = fhat_norm(params, x).value;
    const double factor = (abs(params.r) + Rational(2) * abs(params.s)).to_double();
    const double rhs = factor * p_norm(to_doubles(x), params.p);
    return {lhs, rhs};
}

struct MonotonicityResult {
    double norm_q = 0.0;  // transform norm at the larger exponent
    double norm_p = 0.0;  // transform norm at the smaller exponent
};

/// For 1 <= p < q < inf and a shared (r, s): the q-norm of the transform
/// never exceeds its p-norm on a common window.
inline MonotonicityResult monotonicity_check(const Params& params_p, const Params& params_q,
                                             const Prefix& x) {
    if (!(params_p.r == params_q.r) || !(params_p.s == params_q.s))
        throw std::invalid_argument("monotonicity_check: (r, s) must agree");
    if (params_p.p_is_inf() || params_q.p_is_inf() || !(params_p.p < params_q.p))
        throw std::invalid_argument("monotonicity_check: need 1 <= p < q < inf");
    const std::vector<double> yd = to_doubles(forward_transform(params_p, x));
    return {p_norm(yd, params_q.p), p_norm(yd, params_p.p)};
}

struct CounterexampleReport {
    Prefix x;                               // the generated window
    bool transform_is_e0 = false;           // forward transform equals (1, 0, ..., 0) exactly
    bool delta_matches_differences = false; // closed-form deltas equal first differences exactly
    std::vector<std::size_t> windows;
    std::vector<double> sup_abs;            // sup_k |x_k| per window
    std::vector<double> delta_p_norm;       // p-norm of the delta family per window
    double sup_growth = 0.0;                // last doubling factor
    double delta_growth = 0.0;
};

/// Generates x_k = (1/r)(-s/r)^k f_{k+1}^2 over the window and measures the
/// l_inf and bv_p escape: the transform collapses to the first unit vector
/// while sup |x_k| and the p-norm of the first differences blow up.
/// Requires |s/r| >= 1 (below that the family stops growing).
inline CounterexampleReport counterexample_diagnostics(const Params& params, std::size_t N) {
    if (N < 4) throw std::invalid_argument("counterexample_diagnostics: window too small");
    if (abs(params.s / params.r) < Rational(1))
        throw std::invalid_argument("counterexample_diagnostics: requires |s/r| >= 1");

    CounterexampleReport rep;
    const auto family = counterexample_sequence(params);
    rep.x = family.prefix(N);

    // (a) transform is exactly e^(0)
    const Prefix y = forward_transform(params, rep.x);
    rep.transform_is_e0 = (y[0] == Rational(1));
    for (std::size_t k = 1; k < y.size() && rep.transform_is_e0; ++k)
        if (!y[k].is_zero()) rep.transform_is_e0 = false;

    // (c) closed-form deltas against literal first differences, exact
    const auto delta = delta_of_counterexample(params);
    rep.delta_matches_differences = (delta.at(0) == rep.x[0]);
    for (std::size_t k = 1; k < N && rep.delta_matches_differences; ++k)
        if (!(delta.at(k) == rep.x[k] - rep.x[k - 1])) rep.delta_matches_differences = false;

    // (b) growth across window doublings; sups compared exactly in rationals,
    // only the reported magnitude goes through double
    for (std::size_t w = std::max<std::size_t>(2, N / 4); w <= N; w *= 2) {
        rep.windows.push_back(w);
        Rational sup(0);
        for (std::size_t k = 0; k < w; ++k) sup = std::max(sup, abs(rep.x[k]), std::less<>{});
        rep.sup_abs.push_back(sup.to_double());

        std::vector<double> deltas;
        deltas.reserve(w);
        for (std::size_t k = 0; k < w; ++k) deltas.push_back(delta.at(k).to_double());
        const double dp = params.p_is_inf() ? sup_norm(deltas) : p_norm(deltas, params.p);
        rep.delta_p_norm.push_back(dp);
    }
    const std::size_t levels = rep.windows.size();
    if (levels >= 2) {
        rep.sup_growth = rep.sup_abs[levels - 1] / rep.sup_abs[levels - 2];
        rep.delta_growth = rep.delta_p_norm[levels - 1] / rep.delta_p_norm[levels - 2];
    }
    return rep;
}

/// Bounded-multiplier comparison at finite truncation: with M = sup |u_k|,
/// returns (sum_k |transform of (u x)|^p, M^p sum_k |transform of x|^p).
/// The right side dominates when the multiplier does not flip signs across
/// a band pair; sign-mixing u can push the left side above it, so this
/// reports the measured pair rather than enforcing an inequality.
inline std::pair<double, double> solidity_check(const Params& params, const Prefix& x,
                                                const Prefix& u) {
    if (x.size() != u.size()) throw std::invalid_argument("solidity_check: length mismatch");
    if (params.p_is_inf()) throw std::invalid_argument("solidity_check: needs finite p");
    Prefix ux;
    ux.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) ux.push_back(u[k] * x[k]);
    const double lhs = p_power_sum(to_doubles(forward_transform(params, ux)), params.p);
    const double M = sup_norm(to_doubles(u));
    const double rhs = std::pow(M, params.p) *
                       p_power_sum(to_doubles(forward_transform(params, x)), params.p);
    return {lhs, rhs};
}

struct NonAbsoluteWitness {
    Prefix x;
    double norm_x = 0.0;
    double norm_abs_x = 0.0;
};

/// Searches small sign/scale patterns for a prefix whose band-space norm
/// changes when all entries are replaced by absolute values. Such a witness
/// exists for every nonzero (r, s); failure signals degenerate parameters.
inline NonAbsoluteWitness non_absolute_witness(const Params& params) {
    std::vector<Prefix> patterns;
    for (int t : {1, 2, 3}) {
        for (int sign : {-1, 1}) {
            patterns.push_back({Rational(1), Rational(sign * t)});
            patterns.push_back({Rational(1), Rational(sign * t), Rational(1)});
            patterns.push_back({Rational(1), Rational(1), Rational(sign * t)});
        }
    }
    for (const Prefix& x : patterns) {
        const double n1 = fhat_norm(params, x).value;
        const double n2 = fhat_norm(params, abs_values(x)).value;
        const double scale = std::max({std::abs(n1), std::abs(n2), 1e-300});
        if (std::abs(n1 - n2) > 1e-9 * scale) return {x, n1, n2};
    }
    throw std::runtime_error("non_absolute_witness: no witness among searched patterns");
}

enum class MembershipVerdict { converged_within_tolerance, growing, inconclusive };

inline std::string to_string(MembershipVerdict v) {
    switch (v) {
        case MembershipVerdict::converged_within_tolerance: return "converged-within-tolerance";
        case MembershipVerdict::growing: return "growing";
        default: return "inconclusive";
    }
}

struct MembershipDiagnostic {
    std::vector<std::size_t> windows;
    std::vector<double> truncated_norms;  // nondecreasing for finite p
    MembershipVerdict verdict = MembershipVerdict::inconclusive;
    double tail_ratio = 0.0;  // last norm / previous norm
};

/// Finite proxy for "x lies in the band space": truncated norms across
/// window doublings. Converged when the last doubling moves the norm by
/// less than 1e-9 relative; growing when every doubling gains >= 10%.
inline MembershipDiagnostic membership_diagnostic(const Params& params,
                                                  const GeneratedSequence& seq, std::size_t N) {
    if (N < 8) throw std::invalid_argument("membership_diagnostic: window too small");
    MembershipDiagnostic diag;
    for (std::size_t w = std::max<std::size_t>(4, N / 4); w <= N; w *= 2) {
        diag.windows.push_back(w);
        diag.truncated_norms.push_back(fhat_norm(params, seq.prefix(w)).value);
    }
    const auto& t = diag.truncated_norms;
    const std::size_t L = t.size();
    if (L >= 2) {
        const double prev = t[L - 2];
        const double last = t[L - 1];
        diag.tail_ratio = prev == 0.0 ? (last == 0.0 ? 1.0 : kInfinity) : last / prev;
        const double rel = std::abs(last - prev) / std::max(std::abs(last), 1e-300);
        bool growing = true;
        for (std::size_t i = 1; i < L; ++i)
            if (!(t[i] >= 1.10 * t[i - 1]) || t[i] == 0.0) growing = false;
        if (rel < 1e-9 || (last == 0.0 && prev == 0.0))
            diag.verdict = MembershipVerdict::converged_within_tolerance;
        else if (growing)
            diag.verdict = MembershipVerdict::growing;
        else
            diag.verdict = MembershipVerdict::inconclusive;
    }
    return diag;
}

}  // namespace fibspace

#endif  // FIBSPACE_SPACE_HPP
