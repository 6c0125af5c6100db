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

/// @file params.hpp
/// @brief The (r, s, p) triple defining a weighted band space l_p(F^(r,s)).

#ifndef FIBSPACE_PARAMS_HPP
#define FIBSPACE_PARAMS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace fibspace {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Band weights r (diagonal) and s (subdiagonal), both nonzero, plus the
/// exponent p in [1, inf]. p = kInfinity selects the sup norm.
struct Params {
    Rational r;
    Rational s;
    double p = 2.0;

    Params(Rational r_, Rational s_, double p_) : r(std::move(r_)), s(std::move(s_)), p(p_) {
        if (r.is_zero() || s.is_zero())
            throw std::invalid_argument("params: r and s must be nonzero");
        if (std::isnan(p) || p < 1.0)
            throw std::invalid_argument("params: p must lie in [1, inf]");
    }

    bool p_is_inf() const { return std::isinf(p); }

    /// Conjugate exponent q. q = 1 for p = inf; undefined (throws) for p = 1.
    double conjugate() const {
        if (p_is_inf()) return 1.0;
        if (p == 1.0) throw std::domain_error("params: conjugate exponent undefined for p = 1");
        return p / (p - 1.0);
    }

    /// -s/r, the geometric factor of the inverse band entries.
    Rational neg_s_over_r() const { return -(s / r); }
};

inline std::string exponent_str(double p) {
    if (std::isinf(p)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

}  // namespace fibspace

#endif  // FIBSPACE_PARAMS_HPP
