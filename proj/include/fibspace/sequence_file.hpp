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
 * @file sequence_file.hpp
 * @brief JSON sequence and matrix files.
 *
 * Sequence document, literal form:
 *     { "mode": "exact",  "values": ["1", "-3/2", ...] }
 *     { "mode": "float",  "values": [1.5, -0.25, ...] }
 * or generator form:
 *     { "generator": "counterexample" | "delta_counterexample" | "basis" |
 *                    "unit" | "constant" | "zero",
 *       "args": { "index": 3, "value": "1/2" } }
 *
 * Matrix document:
 *     { "mode": "exact" | "float", "rows": [["1", "0"], ["0", "1"], ...] }
 *
 * Exact values are fraction strings and round-trip bit-exactly:
 * parse(print(x)) = x. Float values are parsed into exact binary rationals
 * (doubles are dyadic fractions), so transforms stay exact either way; the
 * mode only controls how output is printed.
 */

#ifndef FIBSPACE_SEQUENCE_FILE_HPP
#define FIBSPACE_SEQUENCE_FILE_HPP

#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "generators.hpp"
#include "params.hpp"
#include "prefix.hpp"

namespace fibspace {

enum class ValueMode { exact, floating };

inline std::string to_string(ValueMode m) { return m == ValueMode::exact ? "exact" : "float"; }

inline ValueMode value_mode_from(const std::string& s) {
    if (s == "exact") return ValueMode::exact;
    if (s == "float") return ValueMode::floating;
    throw std::invalid_argument("mode: expected \"exact\" or \"float\", got \"" + s + "\"");
}

namespace detail {

inline std::string shortest_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

inline Rational value_from_json(const nlohmann::json& v, ValueMode mode, std::size_t index) {
    const std::string where = "values[" + std::to_string(index) + "]";
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long long>());
        if (v.is_number_float()) {
            if (mode == ValueMode::exact)
                throw std::invalid_argument("non-integral number in exact mode");
            return Rational::from_double(v.get<double>());
        }
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
    }
    throw std::invalid_argument(where + ": expected a fraction string or a number");
}

}  // namespace detail

struct SequenceFile {
    ValueMode mode = ValueMode::exact;
    Prefix values;

    static SequenceFile from_json(const nlohmann::json& doc) {
        if (!doc.is_object()) throw std::invalid_argument("sequence file: expected an object");
        if (!doc.contains("values") || !doc["values"].is_array())
            throw std::invalid_argument("sequence file: missing \"values\" array");
        SequenceFile out;
        out.mode = doc.contains("mode") ? value_mode_from(doc["mode"].get<std::string>())
                                        : ValueMode::exact;
        std::size_t i = 0;
        for (const auto& v : doc["values"])
            out.values.push_back(detail::value_from_json(v, out.mode, i++));
        if (out.values.empty()) throw std::invalid_argument("sequence file: empty \"values\"");
        return out;
    }

    static SequenceFile parse(const std::string& text) {
        return from_json(nlohmann::json::parse(text));
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json doc;
        doc["mode"] = to_string(mode);
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : values) {
            if (mode == ValueMode::exact)
                arr.push_back(v.str());
            else
                arr.push_back(v.to_double());
        }
        doc["values"] = std::move(arr);
        return doc;
    }

    std::string serialize(int indent = 2) const { return to_json().dump(indent) + "\n"; }
};

/// Resolves either literal values or a named generator into a prefix of
/// length N (literal documents keep their own length).
inline SequenceFile resolve_sequence(const nlohmann::json& doc, const Params& params,
                                     std::size_t N) {
    if (doc.is_object() && doc.contains("generator")) {
        const std::string name = doc["generator"].get<std::string>();
        const nlohmann::json args =
            doc.contains("args") ? doc["args"] : nlohmann::json::object();
        SequenceFile out;
        out.mode = ValueMode::exact;
        if (name == "counterexample") {
            out.values = counterexample_sequence(params).prefix(N);
        } else if (name == "delta_counterexample") {
            out.values = delta_of_counterexample(params).prefix(N);
        } else if (name == "basis") {
            const auto idx = args.value("index", 0ULL);
            out.values = basis_sequence(params, idx).prefix(N);
        } else if (name == "unit") {
            const auto idx = args.value("index", 0ULL);
            out.values = unit_sequence(idx).prefix(N);
        } else if (name == "constant") {
            const Rational v = args.contains("value")
                                   ? detail::value_from_json(args["value"], ValueMode::floating, 0)
                                   : Rational(1);
            out.values = constant_sequence(v).prefix(N);
        } else if (name == "zero") {
            out.values = zero_sequence().prefix(N);
        } else {
            throw std::invalid_argument("unknown generator \"" + name + "\"");
        }
        return out;
    }
    return SequenceFile::from_json(doc);
}

struct MatrixFile {
    ValueMode mode = ValueMode::exact;
    std::vector<std::vector<Rational>> rows;

    static MatrixFile from_json(const nlohmann::json& doc) {
        if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
            throw std::invalid_argument("matrix file: missing \"rows\" array");
        MatrixFile out;
        out.mode = doc.contains("mode") ? value_mode_from(doc["mode"].get<std::string>())
                                        : ValueMode::exact;
        std::size_t flat = 0;
        for (const auto& row : doc["rows"]) {
            if (!row.is_array()) throw std::invalid_argument("matrix file: rows must be arrays");
            std::vector<Rational> r;
            for (const auto& v : row) r.push_back(detail::value_from_json(v, out.mode, flat++));
            out.rows.push_back(std::move(r));
        }
        if (out.rows.empty()) throw std::invalid_argument("matrix file: empty \"rows\"");
        return out;
    }

    static MatrixFile parse(const std::string& text) {
        return from_json(nlohmann::json::parse(text));
    }
};

}  // namespace fibspace

#endif  // FIBSPACE_SEQUENCE_FILE_HPP
