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
 * @file summation.hpp
 * @brief Compensated floating-point summation and p-norms.
 *
 * The band-weighted terms span many orders of magnitude, so |.|^p sums use
 * Neumaier's variant of Kahan summation before the 1/p root.
 */

#ifndef FIBSPACE_SUMMATION_HPP
#define FIBSPACE_SUMMATION_HPP

#include <cmath>
#include <span>
#include <stdexcept>

namespace fibspace {

class CompensatedSum {
   public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

   private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double sup_norm(std::span<const double> values) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

/// sum_k |v_k|^p for finite p >= 1.
inline double p_power_sum(std::span<const double> values, double p) {
    if (std::isinf(p) || p < 1.0) throw std::invalid_argument("p_power_sum: need finite p >= 1");
    CompensatedSum acc;
    if (p == 1.0) {
        for (double v : values) acc.add(std::abs(v));
    } else if (p == 2.0) {
        for (double v : values) acc.add(v * v);
    } else {
        for (double v : values) acc.add(std::pow(std::abs(v), p));
    }
    return acc.value();
}

/// (sum_k |v_k|^p)^{1/p}, or sup_k |v_k| when p = inf.
inline double p_norm(std::span<const double> values, double p) {
    if (std::isinf(p)) return sup_norm(values);
    const double s = p_power_sum(values, p);
    if (p == 1.0) return s;
    if (p == 2.0) return std::sqrt(s);
    return std::pow(s, 1.0 / p);
}

}  // namespace fibspace

#endif  // FIBSPACE_SUMMATION_HPP
