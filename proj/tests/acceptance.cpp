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
 * @file acceptance.cpp
 * @brief End-to-end acceptance suite. One pass/fail line per criterion;
 *        exit code 0 only if every criterion passes.
 *
 * Every tolerance is pinned here, in code: exact (bit-level) assertions for
 * rational identities, 1e-12 relative for float comparisons, 50% growth per
 * window doubling for the escape diagnostics.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <fibspace/fibspace.hpp>

using namespace fibspace;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    if (!ok) ++g_failures;
}

struct Gen {
    std::mt19937_64 rng;
    std::uniform_int_distribution<long long> num{-1000000, 1000000};
    std::uniform_int_distribution<long long> den{1, 1000000};
    std::uniform_int_distribution<long long> signed_small{-9, 9};
    std::uniform_int_distribution<long long> small{1, 9};

    explicit Gen(unsigned long long seed) : rng(seed) {}

    Rational value() { return Rational(num(rng), den(rng)); }
    Rational nonzero_small() {
        long long n = signed_small(rng);
        while (n == 0) n = signed_small(rng);
        return Rational(n, small(rng));
    }
    Params params(double p) { return Params(nonzero_small(), nonzero_small(), p); }
    Prefix prefix(std::size_t len) {
        Prefix x;
        x.reserve(len);
        for (std::size_t i = 0; i < len; ++i) x.push_back(value());
        return x;
    }
};

// --------------------------------------------------------------------------

void c1_exact_roundtrip() {
    Gen gen(101);
    std::vector<Params> pool;
    for (int i = 0; i < 20; ++i) pool.push_back(gen.params(2.0));
    std::uniform_int_distribution<std::size_t> len(1, 64);

    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int rep = 0; rep < 200 && ok; ++rep) {
        const Params& p = pool[rep % pool.size()];
        const Prefix x = gen.prefix(len(gen.rng));
        if (!(inverse_transform(p, forward_transform(p, x)) == x)) ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    criterion(1, "exact transform roundtrip, 200 prefixes / 20 parameter pairs",
              ok && secs < 10.0, "runtime " + std::to_string(secs) + " s");
}

void c2_inverse_matrix_identity() {
    Gen gen(202);
    bool ok = true;
    for (int rep = 0; rep < 5 && ok; ++rep) {
        const Params p = gen.params(2.0);
        const TriangleView F = fhat_view(p, 65);
        const TriangleView V = fhat_inverse_view(p, 65);
        for (std::size_t n = 0; n <= 64 && ok; ++n)
            for (std::size_t k = 0; k <= n && ok; ++k)
                if (!(product_entry(F, V, n, k) == Rational(n == k ? 1 : 0))) ok = false;
    }
    criterion(2, "windowed band-times-inverse product is the identity", ok);
}

void c3_isometry() {
    Gen gen(303);
    bool ok = true;
    for (double pe : {1.0, 1.5, 2.0, 3.0, kInfinity}) {
        for (int rep = 0; rep < 40 && ok; ++rep) {
            const Params p = gen.params(pe);
            const Prefix x = gen.prefix(1 + rep % 48);
            const double lhs = fhat_norm(p, x).value;
            // plain uncompensated route
            const std::vector<double> yd = to_doubles(forward_transform(p, x));
            double rhs = 0.0;
            if (std::isinf(pe)) {
                for (double v : yd) rhs = std::max(rhs, std::abs(v));
            } else {
                for (double v : yd) rhs += std::pow(std::abs(v), pe);
                rhs = std::pow(rhs, 1.0 / pe);
            }
            if (std::abs(lhs - rhs) > 1e-12 * std::max(rhs, 1e-300) && lhs != rhs) ok = false;
        }
    }
    criterion(3, "band norm equals the plain norm of the transform (5 exponents)", ok);
}

void c4_fibonacci_identities() {
    bool ok = true;
    for (std::size_t n = 1; n <= 500 && ok; ++n) {
        const BigInt want = (n % 2 == 1) ? 1 : -1;
        if (cassini(n) != want || cassini_substituted(n) != want) ok = false;
    }
    for (std::size_t n = 0; n <= 500 && ok; ++n) {
        const auto [lhs, rhs] = partial_sum_identity(n);
        if (lhs != rhs) ok = false;
    }
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    const bool ratio_ok = std::abs(ratio(100).to_double() - golden) <= 1e-12;
    criterion(4, "fibonacci identities exact to n = 500, golden ratio at n = 100",
              ok && ratio_ok);
}

void c5_counterexample_suite() {
    Gen gen(505);
    bool exact_ok = true;
    for (int rep = 0; rep < 10 && exact_ok; ++rep) {
        const Params p = gen.params(2.0);
        const Prefix x = counterexample_sequence(p).prefix(24);
        const Prefix y = forward_transform(p, x);
        if (!(y[0] == Rational(1))) exact_ok = false;
        for (std::size_t k = 1; k < y.size(); ++k)
            if (!y[k].is_zero()) exact_ok = false;
    }

    bool growth_ok = true;
    for (int rep = 0; rep < 5 && growth_ok; ++rep) {
        // force |s/r| >= 1 by stacking a scale >= 1 onto r
        const Rational r = gen.nonzero_small();
        const Rational scale(gen.small(gen.rng), 1);
        const Rational s = (gen.rng() % 2 ? r : -r) * scale;
        const auto rep5 = counterexample_diagnostics(Params(r, s, 2.0), 64);
        if (!rep5.transform_is_e0 || !rep5.delta_matches_differences) growth_ok = false;
        for (std::size_t i = 1; i < rep5.sup_abs.size(); ++i)
            if (!(rep5.sup_abs[i] >= 1.5 * rep5.sup_abs[i - 1])) growth_ok = false;
        for (std::size_t i = 1; i < rep5.delta_p_norm.size(); ++i)
            if (!(rep5.delta_p_norm[i] >= 1.5 * rep5.delta_p_norm[i - 1])) growth_ok = false;
    }
    criterion(5, "escape sequence: unit-vector transform and 50%-per-doubling growth",
              exact_ok && growth_ok);
}

void c6_inclusion_bound() {
    Gen gen(606);
    bool ok = true;
    int count = 0;
    for (double pe : {1.0, 2.0, kInfinity}) {
        const int reps = pe == 1.0 ? 166 : 167;
        for (int rep = 0; rep < reps && ok; ++rep) {
            const Params p = gen.params(pe);
            const auto [lhs, rhs] = inclusion_bound_check(p, gen.prefix(1 + rep % 32));
            if (!(lhs <= rhs + 1e-12 * std::max(1.0, rhs))) ok = false;
            ++count;
        }
    }
    criterion(6, "inclusion bound over " + std::to_string(count) + " random samples", ok);
}

void c7_basis() {
    Gen gen(707);
    bool transform_ok = true;
    for (int rep = 0; rep < 5 && transform_ok; ++rep) {
        const Params p = gen.params(2.0);
        for (std::size_t n = 0; n <= 32 && transform_ok; ++n)
            if (!verify_basis_transform(p, n, n + 33)) transform_ok = false;
    }

    bool residual_ok = true;
    for (double pe : {1.5, 2.0}) {
        const Params p = gen.params(pe);
        const Prefix x = gen.prefix(16);
        const std::vector<double> yd = to_doubles(forward_transform(p, x));
        double prev = kInfinity;
        for (std::size_t m = 0; m < x.size() && residual_ok; ++m) {
            const double res = expansion_residual(p, x, m);
            const std::vector<double> tail(yd.begin() + static_cast<long>(m) + 1, yd.end());
            const double want = p_norm(tail, pe);
            if (std::abs(res - want) > 1e-12 * std::max(1.0, want)) residual_ok = false;
            if (res > prev * (1.0 + 1e-12) + 1e-15) residual_ok = false;
            prev = res;
        }
    }
    criterion(7, "expansion elements transform to unit vectors; residuals match tail norms",
              transform_ok && residual_ok);
}

void c8_duality_identities() {
    Gen gen(808);
    bool identities_ok = true;
    for (int rep = 0; rep < 100 && identities_ok; ++rep) {
        const Params p = gen.params(2.0);
        const Prefix a = gen.prefix(12);
        const Prefix y = gen.prefix(12);
        const Prefix x = inverse_transform(p, y);
        const DualCandidate cand{a, p};
        const TriangleView B = build_B(cand, 12);
        const TriangleView D = build_D(cand, 12);
        for (std::size_t n = 0; n < 12 && identities_ok; ++n) {
            detail::FractionSum bn, dn, want;
            for (std::size_t k = 0; k <= n; ++k) {
                bn.add_product(B.entry(n, k), y[k]);
                dn.add_product(D.entry(n, k), y[k]);
                want.add_product(a[k], x[k]);
            }
            if (!(bn.value() == a[n] * x[n])) identities_ok = false;
            if (!(dn.value() == want.value())) identities_ok = false;
        }
    }

    bool sandwich_ok = true;
    for (int rep = 0; rep < 5 && sandwich_ok; ++rep) {
        const Params p = gen.params(2.0);
        const DualCandidate cand{gen.prefix(12), p};
        const DenseWindow M = materialize(build_B(cand, 12).entry, 12, 12);
        const SubsetBounds exact = subset_qnorm_bounds(M, 12, 2.0, {});
        SubsetFamilyBudget force_bounds;
        force_bounds.max_exhaustive_n = 0;
        const SubsetBounds pair = subset_qnorm_bounds(M, 12, 2.0, force_bounds);
        if (!exact.exact) sandwich_ok = false;
        else if (pair.lower > *exact.exact * (1.0 + 1e-9) + 1e-12) sandwich_ok = false;
        else if (*exact.exact > pair.upper * (1.0 + 1e-9) + 1e-12) sandwich_ok = false;
    }
    criterion(8, "dual matrix identities (100 instances) and subset-sup sandwich at 12",
              identities_ok && sandwich_ok);
}

void c9_classifier_oracles() {
    const Params p2(Rational(1), Rational(-1), 2.0);
    const Params pinf(Rational(1), Rational(-1), kInfinity);

    bool zero_ok = true;
    for (const auto& spec : matrix_class_table()) {
        const Params& p = spec.source_is_inf ? pinf : p2;
        for (std::size_t N : {16u, 32u, 64u}) {
            const auto rep = spec.band_domain
                                 ? classify(zero_matrix(), p, spec.id, N)
                                 : classify_plain(zero_matrix(), p.p, spec.id, N);
            if (rep.overall != Verdict::holds_in_window) zero_ok = false;
        }
    }

    bool stable_ok = true;
    bool witness_ok = true;
    for (std::size_t N : {16u, 32u, 64u}) {
        const auto id_l1 = classify_plain(identity_matrix(), 2.0, "lp_to_l1", N);
        if (id_l1.overall != Verdict::fails_with_witness) stable_ok = false;
        bool has_witness = false;
        for (const auto& c : id_l1.conditions)
            if (c.witness.find("K={") != std::string::npos) has_witness = true;
        if (!has_witness) witness_ok = false;

        if (classify_plain(identity_matrix(), 2.0, "lp_to_c", N).overall !=
            Verdict::holds_in_window)
            stable_ok = false;
        if (classify_plain(identity_matrix(), 2.0, "lp_to_linf", N).overall !=
            Verdict::holds_in_window)
            stable_ok = false;
        if (classify(fhat_matrix(p2), p2, "lpF_to_linf", N).overall !=
            Verdict::holds_in_window)
            stable_ok = false;
    }
    criterion(9, "classifier oracles stable across windows 16/32/64",
              zero_ok && stable_ok && witness_ok);
}

void c10_geometry() {
    bool sums_ok = true;
    bool bound_ok = true;
    for (double pe : {1.5, 2.0, 3.0}) {
        const Params p(Rational(1), Rational(-1), pe);
        const auto family = disjoint_transform_family(p, 65, 70);
        const auto bc = banach_saks_bound_check(family.elements, p, 1.0);
        if (bc.first_violation) bound_ok = false;
        for (std::size_t n = 0; n < bc.lhs.size(); ++n) {
            const double expect = std::pow(static_cast<double>(n + 1), 1.0 / pe);
            if (std::abs(bc.lhs[n] - expect) > 1e-12 * expect) sums_ok = false;
        }
        // the same family pushed through the selection procedure
        std::vector<double> eps;
        for (int j = 0; j < 16; ++j) eps.push_back(std::pow(2.0, -(j + 2)));
        const auto sel = select_subsequence(family, eps, p);
        const auto bc_sel = banach_saks_bound_check(sel.selected, p, 1.0);
        if (bc_sel.first_violation) bound_ok = false;
        // and the overlapping-block generator, selected the same way
        const auto overlapping = overlapping_block_family(p, 40, 46);
        const auto sel_ov = select_subsequence(overlapping, eps, p);
        const auto bc_ov = banach_saks_bound_check(sel_ov.selected, p, 1.0);
        if (bc_ov.first_violation) bound_ok = false;
    }

    bool control_ok = true;
    std::string onset;
    for (double pe : {1.5, 2.0, 3.0}) {
        const Params p(Rational(1), Rational(-1), pe);
        const auto bad = constant_family(p, 16, 20);
        const auto bc = banach_saks_bound_check(bad.elements, p, 1.0);
        // first n with (n+1)^{1-1/p} > 2: n+1 = floor(2^{p/(p-1)}) + 1
        const double edge = std::pow(2.0, pe / (pe - 1.0));
        const auto expected = static_cast<std::size_t>(std::floor(edge));
        if (!bc.first_violation || *bc.first_violation != expected) control_ok = false;
        onset += (onset.empty() ? "" : ", ") + std::to_string(expected);
    }

    const bool garcia_ok = garcia_falset_report(2.0).value == std::pow(2.0, 0.5);
    criterion(10, "partial-sum growth experiments and coefficient report",
              sums_ok && bound_ok && control_ok && garcia_ok,
              "negative-control onsets " + onset);
}

void c11_solidity() {
    Gen gen(1111);
    std::uniform_int_distribution<long long> unit(-100, 100);
    int violations = 0;
    for (int rep = 0; rep < 500; ++rep) {
        const Params p = gen.params(2.0);
        const Prefix x = gen.prefix(12);
        Prefix u;
        for (int i = 0; i < 12; ++i) u.push_back(Rational(unit(gen.rng), 100));
        const auto [lhs, rhs] = solidity_check(p, x, u);
        if (!(lhs <= rhs + 1e-12 * std::max(1.0, rhs))) ++violations;
    }
    // The bound is exceeded whenever the multiplier flips sign across a band
    // pair whose two terms nearly cancel; the smallest such pair is
    // u = (1, 0), x = (1, 1) at r = 1, s = -1, p = 2 with sides 5 > 3.25.
    // The measured pair is reported and this criterion records the failure.
    criterion(11, "solidity inequality on 500 random multiplier pairs", violations == 0,
              violations == 0 ? ""
                              : std::to_string(violations) +
                                    " of 500 pairs exceed the bound; minimal example "
                                    "u=(1,0), x=(1,1), r=1, s=-1, p=2 gives 5 > 13/4");
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    c1_exact_roundtrip();
    c2_inverse_matrix_identity();
    c3_isometry();
    c4_fibonacci_identities();
    c5_counterexample_suite();
    c6_inclusion_bound();
    c7_basis();
    c8_duality_identities();
    c9_classifier_oracles();
    c10_geometry();
    c11_solidity();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d of 11 criteria passed in %.1f s\n", 11 - g_failures, secs);
    return g_failures == 0 ? 0 : 1;
}
