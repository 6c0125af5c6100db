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

/// @file prefix.hpp
/// @brief Finite truncations (x_0, ..., x_{N-1}) of infinite sequences.
///
/// The exact rational vector is the universal carrier; float pipelines
/// convert per term at the point of summation.

#ifndef FIBSPACE_PREFIX_HPP
#define FIBSPACE_PREFIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace fibspace {

using Prefix = std::vector<Rational>;

inline std::vector<double> to_doubles(const Prefix& x) {
    std::vector<double> out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(v.to_double());
    return out;
}

inline Prefix scaled(const Rational& a, const Prefix& x) {
    Prefix out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(a * v);
    return out;
}

inline Prefix added(const Prefix& x, const Prefix& y) {
    if (x.size() != y.size()) throw std::invalid_argument("prefix: length mismatch");
    Prefix out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
    return out;
}

inline Prefix subtracted(const Prefix& x, const Prefix& y) {
    if (x.size() != y.size()) throw std::invalid_argument("prefix: length mismatch");
    Prefix out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] - y[i]);
    return out;
}

inline Prefix abs_values(const Prefix& x) {
    Prefix out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(abs(v));
    return out;
}

inline bool all_zero(const Prefix& x) {
    for (const auto& v : x)
        if (!v.is_zero()) return false;
    return true;
}

}  // namespace fibspace

#endif  // FIBSPACE_PREFIX_HPP
