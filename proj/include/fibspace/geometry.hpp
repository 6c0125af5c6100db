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
 * @file geometry.hpp
 * @brief Desk-scale geometric experiments: Cesaro means, the partial-sum
 *        growth bound C(n+1)^{1/p}, greedy block selection, and the
 *        Garcia-Falset coefficient report.
 *
 * "Weakly null" is not checkable from finitely many prefixes. The harness
 * substitutes coordinatewise-null generated families (disjoint and
 * overlapping transform blocks); the selection procedure measures heads and
 * tails through the transform coordinates, where the generated families cut
 * cleanly. The constant family is the deliberate negative control: it is not
 * coordinatewise null, selection exhausts the window on it, and the growth
 * bound fails from some index on.
 */

#ifndef FIBSPACE_GEOMETRY_HPP
#define FIBSPACE_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "band_operator.hpp"
#include "generators.hpp"
#include "params.hpp"
#include "prefix.hpp"
#include "space.hpp"
#include "summation.hpp"

namespace fibspace {

struct BlockSequence {
    std::vector<Prefix> elements;     // all of band-space norm <= 1 (+1e-12)
    bool coordinatewise_null = false; // per-coordinate decay across the family
};

struct WindowExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// t_k(z) = (z_0 + ... + z_k)/(k+1), exact.
inline Prefix cesaro_mean(const std::vector<Prefix>& z, std::size_t k) {
    if (k >= z.size()) throw std::invalid_argument("cesaro_mean: k out of range");
    const std::size_t len = z[0].size();
    Prefix acc(len, Rational(0));
    for (std::size_t j = 0; j <= k; ++j) {
        if (z[j].size() != len) throw std::invalid_argument("cesaro_mean: ragged elements");
        for (std::size_t i = 0; i < len; ++i) acc[i] += z[j][i];
    }
    const Rational scale(1, static_cast<long long>(k + 1));
    for (auto& v : acc) v *= scale;
    return acc;
}

namespace detail {

/// p-norm of cached transform coordinates restricted to [lo, hi).
inline double masked_norm(const std::vector<double>& y, double p, std::size_t lo,
                          std::size_t hi) {
    hi = std::min(hi, y.size());
    if (lo >= hi) return 0.0;
    return p_norm(std::span<const double>(y.data() + lo, hi - lo), p);
}

}  // namespace detail

struct SelectionResult {
    std::vector<std::size_t> indices;  // chosen element indices n_j
    std::vector<Prefix> selected;      // z_j = elements[n_j]
    std::vector<std::size_t> cuts;     // the block cuts m_j
};

/// Greedy two-cursor block selection: for each j find a cut m_j past which
/// z_j's (transform) tail is < eps_j, then the first family index past which
/// every element's head up to m_j is < eps_j. Throws WindowExhausted when
/// the prefixes or the family run out before a cut is found, which signals
/// the inputs are not a usable weakly-null surrogate at this truncation.
inline SelectionResult select_subsequence(const BlockSequence& x, const std::vector<double>& eps,
                                          const Params& params) {
    if (x.elements.empty()) throw std::invalid_argument("select_subsequence: empty family");
    double eps_sum = 0.0;
    for (double e : eps) {
        if (e <= 0.0) throw std::invalid_argument("select_subsequence: eps must be positive");
        eps_sum += e;
    }
    if (eps_sum > 0.5 + 1e-12)
        throw std::invalid_argument("select_subsequence: sum of eps must be <= 1/2");

    const std::size_t len = x.elements[0].size();
    const std::size_t count = x.elements.size();
    std::vector<std::vector<double>> transforms;  // computed once per element
    transforms.reserve(count);
    for (const auto& z : x.elements)
        transforms.push_back(to_doubles(forward_transform(params, z)));

    SelectionResult out;
    std::size_t next = 0;   // candidate element cursor
    std::size_t m_prev = 0; // previous cut
    for (std::size_t j = 0; j < eps.size(); ++j) {
        if (next >= count)
            throw WindowExhausted("select_subsequence: family exhausted at step " +
                                  std::to_string(j));
        const std::vector<double>& yz = transforms[next];

        std::optional<std::size_t> cut;
        for (std::size_t m = (j == 0 ? 0 : m_prev + 1); m + 1 < len; ++m) {
            if (detail::masked_norm(yz, params.p, m + 1, len) < eps[j]) {
                cut = m;
                break;
            }
        }
        if (!cut)
            throw WindowExhausted("select_subsequence: no tail cut below eps at step " +
                                  std::to_string(j));

        out.indices.push_back(next);
        out.selected.push_back(x.elements[next]);
        out.cuts.push_back(*cut);
        m_prev = *cut;

        // first index past which every remaining element's head is small:
        // walk suffix maxima of the head norms
        std::size_t n_next = count;
        for (std::size_t i = count; i > next + 1; --i) {
            if (detail::masked_norm(transforms[i - 1], params.p, 0, *cut + 1) >= eps[j]) break;
            n_next = i - 1;
        }
        next = n_next;
    }
    return out;
}

struct BoundCheck {
    std::vector<double> lhs;  // || z_0 + ... + z_n || per n
    std::vector<double> rhs;  // (C+1)(n+1)^{1/p} per n
    std::optional<std::size_t> first_violation;
};

/// Partial-sum growth check: lhs_n = band-space norm of z_0 + ... + z_n,
/// rhs_n = (C+1)(n+1)^{1/p}. Requires C at least the max element norm.
inline BoundCheck banach_saks_bound_check(const std::vector<Prefix>& selected,
                                          const Params& params, double cap) {
    if (selected.empty()) throw std::invalid_argument("banach_saks_bound_check: empty family");
    if (params.p_is_inf() || params.p <= 1.0)
        throw std::invalid_argument("banach_saks_bound_check: need 1 < p < inf");
    for (const auto& z : selected) {
        if (fhat_norm(params, z).value > cap + 1e-9)
            throw std::invalid_argument(
                "banach_saks_bound_check: cap below an element norm");
    }
    BoundCheck out;
    Prefix acc(selected[0].size(), Rational(0));
    for (std::size_t n = 0; n < selected.size(); ++n) {
        acc = added(acc, selected[n]);
        out.lhs.push_back(fhat_norm(params, acc).value);
        out.rhs.push_back((cap + 1.0) * std::pow(static_cast<double>(n + 1), 1.0 / params.p));
        if (!out.first_violation && out.lhs.back() > out.rhs.back())
            out.first_violation = n;
    }
    return out;
}

struct GarciaFalsetReport {
    double value = 0.0;
    std::string annotation;
};

/// The known coefficient 2^{1/p} for 1 < p < inf; a reported value, never an
/// estimate. Below 2 it certifies the weak fixed point property.
inline GarciaFalsetReport garcia_falset_report(double p) {
    if (std::isinf(p) || p <= 1.0)
        throw std::invalid_argument("garcia_falset_report: need 1 < p < inf");
    GarciaFalsetReport rep;
    rep.value = std::pow(2.0, 1.0 / p);
    rep.annotation = rep.value < 2.0 ? "< 2: weak fixed point property holds" : "";
    return rep;
}

/// z_l = inverse transform of the l-th unit prefix: transforms are disjoint
/// single coordinates, norms exactly 1.
inline BlockSequence disjoint_transform_family(const Params& params, std::size_t count,
                                               std::size_t length) {
    if (length < count + 1)
        throw std::invalid_argument("disjoint_transform_family: length must exceed count");
    BlockSequence family;
    family.coordinatewise_null = true;
    for (std::size_t l = 0; l < count; ++l)
        family.elements.push_back(inverse_transform(params, unit_sequence(l).prefix(length)));
    return family;
}

/// z_l = inverse transform of (e^(l) + e^(l+1))/2: overlapping two-coordinate
/// blocks of norm 2^{1/p - 1} <= 1.
inline BlockSequence overlapping_block_family(const Params& params, std::size_t count,
                                              std::size_t length) {
    if (length < count + 2)
        throw std::invalid_argument("overlapping_block_family: length must exceed count + 1");
    BlockSequence family;
    family.coordinatewise_null = true;
    const Rational half(1, 2);
    for (std::size_t l = 0; l < count; ++l) {
        Prefix y(length, Rational(0));
        y[l] = half;
        y[l + 1] = half;
        family.elements.push_back(inverse_transform(params, y));
    }
    return family;
}

/// Every element is the same unit-norm vector; not coordinatewise null.
/// The negative control for the growth bound.
inline BlockSequence constant_family(const Params& params, std::size_t count,
                                     std::size_t length) {
    if (length < 2) throw std::invalid_argument("constant_family: length too small");
    BlockSequence family;
    family.coordinatewise_null = false;
    const Prefix z = inverse_transform(params, unit_sequence(0).prefix(length));
    family.elements.assign(count, z);
    return family;
}

}  // namespace fibspace

#endif  // FIBSPACE_GEOMETRY_HPP
