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
 * @file fibspace_cli.cpp
 * @brief Command-line front end.
 *
 * Commands:
 *   transform   forward/inverse band transform of a sequence file or generator
 *   norm        band-space norm next to the plain norm of the transform
 *   basis       expansion element c^(n) with exact verification
 *   duals       dual-set condition checks d1..d4 for a candidate sequence
 *   classify    matrix classification against the supported mapping classes
 *   geometry    block-selection and partial-sum growth experiments
 *   demo        the full identity suite, one pass/fail line per item
 *
 * Reports are JSON with stable field order; identical inputs produce
 * byte-identical output. The "timings" field holds deterministic work
 * counters; wall-clock timing goes to stderr under --timings.
 *
 * Exit codes: 0 success / all checked properties hold, 1 a checked property
 * fails, 2 input or usage error.
 */

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <fibspace/fibspace.hpp>
#include <fibspace/sequence_file.hpp>

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace fibspace;

struct CommonOptions {
    std::string r = "1";
    std::string s = "-1";
    std::string p = "2";
    std::size_t n = 32;
    double tol = 1e-12;
    std::string input;
    std::string output;
    std::string mode;
    bool timings = false;
};

double parse_exponent(const std::string& text) {
    if (text == "inf" || text == "infinity") return kInfinity;
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("cannot parse exponent '" + text + "'");
    return v;
}

Params make_params(const CommonOptions& opt) {
    return Params(Rational::parse(opt.r), Rational::parse(opt.s), parse_exponent(opt.p));
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
}

ordered_json params_json(const Params& params, std::size_t n) {
    ordered_json j;
    j["r"] = params.r.str();
    j["s"] = params.s.str();
    j["p"] = exponent_str(params.p);
    j["n"] = n;
    return j;
}

/// JSON-safe number: non-finite values become strings.
ordered_json num(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "overflow" : "-overflow";
}

ordered_json condition_json(const ConditionReport& rep) {
    ordered_json j;
    j["name"] = rep.label;
    j["condition"] = rep.condition;
    j["verdict"] = to_string(rep.verdict);
    j["windows"] = rep.windows;
    auto arr = ordered_json::array();
    for (double m : rep.measurements) arr.push_back(num(m));
    j["measurements"] = std::move(arr);
    if (!rep.lower_bounds.empty()) {
        auto lo = ordered_json::array(), hi = ordered_json::array();
        for (double v : rep.lower_bounds) lo.push_back(num(v));
        for (double v : rep.upper_bounds) hi.push_back(num(v));
        j["lower_bounds"] = std::move(lo);
        j["upper_bounds"] = std::move(hi);
    }
    if (!rep.witness.empty()) j["witness"] = rep.witness;
    return j;
}

struct Report {
    ordered_json doc;
    bool any_fail = false;

    Report(const std::string& command, const Params& params, std::size_t n) {
        doc["command"] = command;
        doc["params"] = params_json(params, n);
        doc["verdicts"] = ordered_json::array();
        doc["witnesses"] = ordered_json::array();
    }

    void add_verdict(ordered_json v) { doc["verdicts"].push_back(std::move(v)); }

    void add_condition(const ConditionReport& rep) {
        if (rep.verdict == Verdict::fails_with_witness) {
            any_fail = true;
            if (!rep.witness.empty()) doc["witnesses"].push_back(rep.label + ": " + rep.witness);
        }
        add_verdict(condition_json(rep));
    }

    int finish(const std::string& output, ordered_json timings) {
        doc["timings"] = std::move(timings);
        write_output(output, doc.dump(2) + "\n");
        return any_fail ? 1 : 0;
    }
};

SequenceFile load_sequence(const CommonOptions& opt, const std::string& generator,
                           const Params& params) {
    if (!generator.empty()) {
        json doc;
        doc["generator"] = generator;
        return resolve_sequence(doc, params, opt.n);
    }
    if (opt.input.empty())
        throw std::invalid_argument("need --input FILE or --generator NAME");
    return resolve_sequence(json::parse(read_input(opt.input)), params, opt.n);
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--r", opt.r, "diagonal weight r as integer or fraction p/q (nonzero)");
    cmd->add_option("--s", opt.s, "subdiagonal weight s as integer or fraction p/q (nonzero)");
    cmd->add_option("--p", opt.p, "exponent p in [1, inf]; 'inf' selects the sup norm");
    cmd->add_option("--n", opt.n, "truncation window")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    cmd->add_option("--tol", opt.tol, "tolerance override for float comparisons");
    cmd->add_option("--input", opt.input, "input JSON file ('-' for stdin)");
    cmd->add_option("--output", opt.output, "output file ('-'/default stdout)");
    cmd->add_flag("--timings", opt.timings, "print wall-clock timing to stderr");
}

// ---------------------------------------------------------------------------
// transform

int cmd_transform(const CommonOptions& opt, const std::string& direction,
                  const std::string& generator) {
    const Params params = make_params(opt);
    SequenceFile in = load_sequence(opt, generator, params);
    if (!opt.mode.empty()) in.mode = value_mode_from(opt.mode);
    SequenceFile out;
    out.mode = in.mode;
    out.values = direction == "inverse" ? inverse_transform(params, in.values)
                                        : forward_transform(params, in.values);
    write_output(opt.output, out.serialize());
    return 0;
}

// ---------------------------------------------------------------------------
// norm

int cmd_norm(const CommonOptions& opt, const std::string& generator) {
    const Params params = make_params(opt);
    const SequenceFile in = load_sequence(opt, generator, params);
    const NormResult band = fhat_norm(params, in.values);
    const double plain = p_norm(to_doubles(forward_transform(params, in.values)), params.p);
    const double diff = std::abs(band.value - plain);
    const bool ok = diff <= opt.tol * std::max(1.0, std::abs(plain));

    Report rep("norm", params, in.values.size());
    ordered_json v;
    v["name"] = "fhat_norm";
    v["mode"] = band.mode == NormMode::sup_norm ? "sup-norm" : "p-norm";
    v["value"] = num(band.value);
    rep.add_verdict(v);
    ordered_json w;
    w["name"] = "p_norm_of_transform";
    w["value"] = num(plain);
    rep.add_verdict(w);
    ordered_json d;
    d["name"] = "isometry_abs_diff";
    d["value"] = num(diff);
    d["verdict"] = ok ? "holds-in-window" : "fails-with-witness";
    rep.add_verdict(d);
    if (!ok) {
        rep.any_fail = true;
        rep.doc["witnesses"].push_back("isometry difference " + std::to_string(diff));
    }

    const MembershipDiagnostic diag = membership_diagnostic(
        params, custom_sequence([&in](std::size_t k) {
            return k < in.values.size() ? in.values[k] : Rational(0);
        }),
        std::max<std::size_t>(8, in.values.size()));
    ordered_json m;
    m["name"] = "membership_diagnostic";
    m["windows"] = diag.windows;
    auto norms = ordered_json::array();
    for (double t : diag.truncated_norms) norms.push_back(num(t));
    m["truncated_norms"] = std::move(norms);
    m["verdict"] = to_string(diag.verdict);
    m["tail_ratio"] = num(diag.tail_ratio);
    rep.add_verdict(m);

    ordered_json timings;
    timings["truncation"] = in.values.size();
    timings["fib_cache_depth"] = fib_cache().size();
    return rep.finish(opt.output, timings);
}

// ---------------------------------------------------------------------------
// basis

int cmd_basis(const CommonOptions& opt, std::size_t index) {
    const Params params = make_params(opt);
    if (params.p_is_inf())
        throw std::invalid_argument("basis: the expansion family needs finite p");
    const Prefix element = basis_element(params, index, opt.n);
    const bool verified = verify_basis_transform(params, index, opt.n);

    Report rep("basis", params, opt.n);
    ordered_json v;
    v["name"] = "basis_element";
    v["index"] = index;
    auto vals = ordered_json::array();
    for (const auto& e : element) vals.push_back(e.str());
    v["values"] = std::move(vals);
    rep.add_verdict(v);
    ordered_json w;
    w["name"] = "transform_is_unit_vector";
    w["verdict"] = verified ? "holds-in-window" : "fails-with-witness";
    rep.add_verdict(w);
    if (!verified) {
        rep.any_fail = true;
        rep.doc["witnesses"].push_back("transform of c^(" + std::to_string(index) +
                                       ") differs from the unit vector");
    }
    ordered_json timings;
    timings["truncation"] = opt.n;
    timings["fib_cache_depth"] = fib_cache().size();
    return rep.finish(opt.output, timings);
}

// ---------------------------------------------------------------------------
// duals

int cmd_duals(const CommonOptions& opt, const std::string& generator) {
    const Params params = make_params(opt);
    if (params.p == 1.0)
        throw std::invalid_argument("duals: p = 1 is not supported for dual-set checks (need p > 1)");
    const SequenceFile in = load_sequence(opt, generator, params);
    DualCandidate cand{in.values, params};
    Tolerances tol;
    tol.hold_rel = std::min(opt.tol, 1e-6);

    Report rep("duals", params, opt.n);
    const auto d1 = check_d1(cand, opt.n, {}, tol);
    const auto d2 = check_d2(cand, opt.n, tol);
    const auto d3 = check_d3(cand, opt.n, tol);
    const auto d4 = check_d4(cand, opt.n, tol);
    rep.add_condition(d1);
    rep.add_condition(d2);
    rep.add_condition(d3);
    rep.add_condition(d4);
    rep.add_condition(gamma_dual_check(cand, opt.n, tol));

    ordered_json sets;
    sets["alpha_dual"] = ordered_json::array({"d1"});
    sets["beta_dual_lp"] = ordered_json::array({"d2", "d3"});
    // For the sup-norm source space two condition sets are in circulation;
    // both are reported rather than choosing.
    sets["beta_dual_linf"] = ordered_json{{"reading_a", ordered_json::array({"d2", "d4"})},
                                          {"reading_b", ordered_json::array({"d3", "d4"})}};
    sets["gamma_dual"] = ordered_json::array({"d2"});
    rep.doc["dual_sets"] = std::move(sets);

    ordered_json timings;
    timings["truncation"] = opt.n;
    timings["fib_cache_depth"] = fib_cache().size();
    return rep.finish(opt.output, timings);
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const CommonOptions& opt, const std::string& matrix_name,
                 const std::string& class_id, std::size_t exhaustive) {
    const Params params = make_params(opt);
    SampledMatrix A;
    if (!matrix_name.empty()) {
        if (matrix_name == "zero") A = zero_matrix();
        else if (matrix_name == "identity") A = identity_matrix();
        else if (matrix_name == "fhat") A = fhat_matrix(params);
        else if (matrix_name == "constant_row") A = constant_row_matrix(unit_sequence(0).prefix(1));
        else throw std::invalid_argument("unknown built-in matrix '" + matrix_name + "'");
    } else if (!opt.input.empty()) {
        A = dense_matrix(MatrixFile::parse(read_input(opt.input)).rows);
    } else {
        throw std::invalid_argument("need --matrix NAME or --input FILE");
    }

    SubsetFamilyBudget budget;
    budget.max_exhaustive_n = exhaustive;
    Tolerances tol;
    tol.hold_rel = std::min(opt.tol, 1e-6);

    const MatrixClassSpec& spec = find_class(class_id);
    const ClassificationReport result =
        spec.band_domain ? classify(A, params, class_id, opt.n, budget, tol)
                         : classify_plain(A, params.p, class_id, opt.n, budget, tol);

    Report rep("classify", params, opt.n);
    rep.doc["matrix"] = A.name;
    rep.doc["class"] = result.target_class;
    for (const auto& c : result.conditions) rep.add_condition(c);
    rep.doc["overall"] = to_string(result.overall);
    if (!result.note.empty()) rep.doc["note"] = result.note;
    rep.any_fail = result.overall == Verdict::fails_with_witness;

    ordered_json timings;
    timings["truncation"] = opt.n;
    timings["conditions_evaluated"] = result.conditions.size();
    timings["fib_cache_depth"] = fib_cache().size();
    return rep.finish(opt.output, timings);
}

// ---------------------------------------------------------------------------
// geometry

int cmd_geometry(const CommonOptions& opt, const std::string& family_name, std::size_t count,
                 double cap) {
    const Params params = make_params(opt);
    if (params.p_is_inf() || params.p <= 1.0)
        throw std::invalid_argument("geometry: need 1 < p < inf");

    const std::size_t length = std::max<std::size_t>(opt.n, 2 * count + 4);
    BlockSequence family;
    if (family_name == "disjoint") family = disjoint_transform_family(params, count, length);
    else if (family_name == "overlapping") family = overlapping_block_family(params, count, length);
    else if (family_name == "constant") family = constant_family(params, count, length);
    else throw std::invalid_argument("unknown family '" + family_name + "'");

    Report rep("geometry", params, length);
    rep.doc["family"] = family_name;
    rep.doc["count"] = count;

    std::vector<double> eps;
    for (std::size_t j = 0; j + 2 < 64 && eps.size() < count; ++j)
        eps.push_back(std::pow(2.0, -static_cast<double>(j + 2)));

    std::vector<Prefix> elements;
    ordered_json sel_json;
    try {
        const SelectionResult sel = select_subsequence(family, eps, params);
        sel_json["status"] = "selected";
        sel_json["indices"] = sel.indices;
        sel_json["cuts"] = sel.cuts;
        elements = sel.selected;
    } catch (const WindowExhausted& e) {
        sel_json["status"] = "window-exhausted";
        sel_json["detail"] = e.what();
        elements = family.elements;  // negative controls are bound-checked raw
    }
    rep.doc["selection"] = std::move(sel_json);

    const BoundCheck bc = banach_saks_bound_check(elements, params, cap);
    ordered_json bound;
    bound["name"] = "partial_sum_growth_bound";
    auto lhs = ordered_json::array(), rhs = ordered_json::array();
    for (double v : bc.lhs) lhs.push_back(num(v));
    for (double v : bc.rhs) rhs.push_back(num(v));
    bound["lhs"] = std::move(lhs);
    bound["rhs"] = std::move(rhs);
    if (bc.first_violation) {
        bound["verdict"] = "fails-with-witness";
        bound["first_violation"] = *bc.first_violation;
        rep.any_fail = true;
        rep.doc["witnesses"].push_back("growth bound violated from n = " +
                                       std::to_string(*bc.first_violation));
    } else {
        bound["verdict"] = "holds-in-window";
    }
    rep.add_verdict(bound);

    ordered_json cesaro;
    cesaro["name"] = "cesaro_mean_norms";
    auto trail = ordered_json::array();
    for (std::size_t k = 0; k < elements.size(); k = (k == 0 ? 1 : k * 2)) {
        const Prefix t = cesaro_mean(elements, std::min(k, elements.size() - 1));
        trail.push_back(num(fhat_norm(params, t).value));
        if (k >= elements.size() - 1) break;
    }
    cesaro["norms"] = std::move(trail);
    rep.add_verdict(cesaro);

    const GarciaFalsetReport gf = garcia_falset_report(params.p);
    ordered_json g;
    g["name"] = "garcia_falset_coefficient";
    g["value"] = num(gf.value);
    g["annotation"] = gf.annotation;
    rep.add_verdict(g);

    ordered_json timings;
    timings["family_length"] = length;
    timings["elements_checked"] = elements.size();
    timings["fib_cache_depth"] = fib_cache().size();
    return rep.finish(opt.output, timings);
}

// ---------------------------------------------------------------------------
// demo

struct DemoRunner {
    int passed = 0;
    int failed = 0;

    void item(const std::string& name, bool ok) {
        std::cout << (ok ? "  pass  " : "  FAIL  ") << name << "\n";
        (ok ? passed : failed) += 1;
    }
};

int cmd_demo(const CommonOptions& opt, bool inject_fault) {
    const Params params = make_params(opt);
    const double p = params.p_is_inf() ? 2.0 : params.p;
    DemoRunner run;
    std::mt19937_64 rng(20260808);
    std::uniform_int_distribution<long long> coeff(-50, 50), small(1, 9);
    auto random_rational = [&] { return Rational(coeff(rng), small(rng)); };
    auto random_nonzero = [&] {
        Rational v = random_rational();
        while (v.is_zero()) v = random_rational();
        return v;
    };

    std::cout << "identity suite (r=" << params.r.str() << ", s=" << params.s.str()
              << ", p=" << exponent_str(params.p) << ")\n";

    {
        bool ok = true;
        for (std::size_t n = 1; n <= 200; ++n) {
            const BigInt want = (n % 2 == 0) ? BigInt(-1) : BigInt(1);
            if (cassini(n) != want || cassini_substituted(n) != want) ok = false;
        }
        for (std::size_t n = 0; n <= 200; ++n) {
            const auto [lhs, rhs] = partial_sum_identity(n);
            if (lhs != rhs) ok = false;
        }
        run.item("fibonacci identities (n <= 200)", ok);
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        run.item("golden ratio limit at n = 100",
                 std::abs(ratio(100).to_double() - golden) <= 1e-12);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            const Params rs(random_nonzero(), random_nonzero(), p);
            Prefix x;
            for (int i = 0; i < 24; ++i) x.push_back(random_rational());
            if (!(inverse_transform(rs, forward_transform(rs, x)) == x)) ok = false;
        }
        run.item("exact transform roundtrip (20 random prefixes)", ok);
    }
    {
        bool ok = true;
        const Params rs(random_nonzero(), random_nonzero(), p);
        const auto F = fhat_view(rs, 24);
        const auto V = fhat_inverse_view(rs, 24);
        for (std::size_t n = 0; n < 24 && ok; ++n)
            for (std::size_t k = 0; k <= n && ok; ++k)
                if (!(product_entry(F, V, n, k) == Rational(n == k ? 1 : 0))) ok = false;
        run.item("band inverse identity (window 24)", ok);
    }
    {
        bool ok = true;
        for (int rep = 0; rep < 10 && ok; ++rep) {
            const Params rs(random_nonzero(), random_nonzero(), p);
            const Prefix x = counterexample_sequence(rs).prefix(16);
            const Prefix y = forward_transform(rs, x);
            if (!(y[0] == Rational(1))) ok = false;
            for (std::size_t k = 1; k < y.size(); ++k)
                if (!y[k].is_zero()) ok = false;
        }
        run.item("counterexample family transforms to the first unit vector", ok);
        const auto diag = counterexample_diagnostics(Params(Rational(1), Rational(-1), p), 32);
        run.item("counterexample sup and delta norms grow per doubling",
                 diag.sup_growth >= 1.5 && diag.delta_growth >= 1.5 &&
                     diag.delta_matches_differences);
    }
    {
        bool ok = true;
        for (std::size_t n = 0; n <= 8 && ok; ++n)
            if (!verify_basis_transform(params.p_is_inf() ? Params(params.r, params.s, 2.0)
                                                          : params,
                                        n, 24))
                ok = false;
        if (inject_fault) {
            // deliberately perturb one element entry and require the checker
            // to notice
            const Params q(params.r, params.s, p);
            Prefix c = basis_element(q, 2, 16);
            c[3] += Rational(1);
            const Prefix y = forward_transform(q, c);
            bool still_unit = y[2] == Rational(1);
            for (std::size_t k = 0; k < y.size(); ++k)
                if (k != 2 && !y[k].is_zero()) still_unit = false;
            ok = ok && still_unit;  // expected to break
        }
        run.item(inject_fault ? "basis verification (fault injected)" : "basis verification",
                 ok);
    }
    {
        const Params q(params.r, params.s, p);
        bool ok = true;
        for (int rep = 0; rep < 10 && ok; ++rep) {
            Prefix a, y;
            for (int i = 0; i < 12; ++i) a.push_back(random_rational());
            for (int i = 0; i < 12; ++i) y.push_back(random_rational());
            const Prefix x = inverse_transform(q, y);
            const auto B = build_B(DualCandidate{a, q}, 12);
            const auto D = build_D(DualCandidate{a, q}, 12);
            for (std::size_t n = 0; n < 12 && ok; ++n) {
                detail::FractionSum bn, dn, axn;
                for (std::size_t k = 0; k <= n; ++k) {
                    bn.add_product(B.entry(n, k), y[k]);
                    dn.add_product(D.entry(n, k), y[k]);
                    axn.add_product(a[k], x[k]);
                }
                if (!(bn.value() == a[n] * x[n])) ok = false;
                if (!(dn.value() == axn.value())) ok = false;
            }
        }
        run.item("dual matrix identities (10 random instances)", ok);
    }
    {
        const Params q(params.r, params.s, p);
        const auto zero_holds = classify(zero_matrix(), q, "lpF_to_linf", 16).overall;
        const auto id_l1 = classify_plain(identity_matrix(), p, "lp_to_l1", 32).overall;
        const auto fhat_linf = classify(fhat_matrix(q), q, "lpF_to_linf", 32).overall;
        run.item("classifier: zero matrix maps everywhere",
                 zero_holds == Verdict::holds_in_window);
        run.item("classifier: identity escapes the summable-image class",
                 id_l1 == Verdict::fails_with_witness);
        run.item("classifier: band matrix itself lands in the bounded class",
                 fhat_linf == Verdict::holds_in_window);
    }
    {
        // constant multipliers attain the bounded-multiplier bound exactly;
        // sign-mixing multipliers can exceed it (the check reports, not asserts)
        const Params q(params.r, params.s, p);
        bool ok = true;
        for (int rep = 0; rep < 50 && ok; ++rep) {
            Prefix x;
            for (int i = 0; i < 16; ++i) x.push_back(random_rational());
            const Rational c(coeff(rng), 10);
            const auto [lhs, rhs] = solidity_check(q, x, Prefix(16, c));
            if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs))) ok = false;
        }
        run.item("solidity bound attained by constant multipliers (50 pairs)", ok);
    }
    {
        const Params q(params.r, params.s, p);
        const auto fam = disjoint_transform_family(q, 17, 24);
        const auto bc = banach_saks_bound_check(fam.elements, q, 1.0);
        bool ok = !bc.first_violation.has_value();
        for (std::size_t n = 0; n < bc.lhs.size() && ok; ++n) {
            const double expect = std::pow(static_cast<double>(n + 1), 1.0 / q.p);
            if (std::abs(bc.lhs[n] - expect) > 1e-12 * expect) ok = false;
        }
        run.item("disjoint family partial sums grow like (n+1)^(1/p)", ok);
        const auto gf = garcia_falset_report(q.p);
        std::cout << "  info  garcia-falset coefficient at p = " << exponent_str(q.p) << ": "
                  << std::setprecision(12) << gf.value
                  << (gf.annotation.empty() ? "" : " (" + gf.annotation + ")") << "\n";
    }

    std::cout << run.passed << " passed, " << run.failed << " failed\n";
    return run.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact band-matrix sequence space toolkit"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string direction = "forward";
    std::string generator;
    std::string matrix_name;
    std::string class_id = "lpF_to_linf";
    std::string family_name = "disjoint";
    std::size_t index = 0;
    std::size_t count = 17;
    std::size_t exhaustive = 12;
    double cap = 1.0;
    bool inject_fault = false;

    auto* transform = app.add_subcommand("transform", "apply the band transform or its inverse");
    add_common(transform, opt);
    transform->add_option("--direction", direction, "forward or inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));
    transform->add_option("--generator", generator, "built-in input family");
    transform->add_option("--mode", opt.mode, "output value mode: exact or float")
        ->check(CLI::IsMember({"exact", "float"}));

    auto* norm = app.add_subcommand("norm", "band-space norm and isometry witness");
    add_common(norm, opt);
    norm->add_option("--generator", generator, "built-in input family");

    auto* basis = app.add_subcommand("basis", "expansion element c^(n) with verification");
    add_common(basis, opt);
    basis->add_option("--index", index, "element index n");

    auto* duals = app.add_subcommand("duals", "dual-set condition checks for a candidate");
    add_common(duals, opt);
    duals->add_option("--generator", generator, "built-in candidate family");

    auto* classify_cmd = app.add_subcommand("classify", "matrix classification");
    add_common(classify_cmd, opt);
    classify_cmd->add_option("--matrix", matrix_name,
                             "built-in matrix: zero, identity, fhat, constant_row");
    classify_cmd->add_option("--class", class_id, "target class id");
    classify_cmd->add_option("--max-exhaustive", exhaustive,
                             "subset enumeration cutoff (rows)");

    auto* geometry = app.add_subcommand("geometry", "block selection and growth experiments");
    add_common(geometry, opt);
    geometry->add_option("--family", family_name, "disjoint, overlapping or constant")
        ->check(CLI::IsMember({"disjoint", "overlapping", "constant"}));
    geometry->add_option("--count", count, "number of family elements");
    geometry->add_option("--cap", cap, "norm cap C in the growth bound");

    auto* demo = app.add_subcommand("demo", "run the full identity suite");
    add_common(demo, opt);
    demo->add_flag("--inject-fault", inject_fault,
                   "perturb one checked value to prove the checkers notice");

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (transform->parsed()) rc = cmd_transform(opt, direction, generator);
        else if (norm->parsed()) rc = cmd_norm(opt, generator);
        else if (basis->parsed()) rc = cmd_basis(opt, index);
        else if (duals->parsed()) rc = cmd_duals(opt, generator);
        else if (classify_cmd->parsed()) rc = cmd_classify(opt, matrix_name, class_id, exhaustive);
        else if (geometry->parsed()) rc = cmd_geometry(opt, family_name, count, cap);
        else if (demo->parsed()) rc = cmd_demo(opt, inject_fault);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (opt.timings) {
        const auto t1 = std::chrono::steady_clock::now();
        std::cerr << "wall: " << std::chrono::duration<double>(t1 - t0).count() << " s\n";
    }
    return rc;
}
