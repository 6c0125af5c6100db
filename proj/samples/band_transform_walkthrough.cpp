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

// Walks one sequence through the band transform and back, then shows the
// escape sequence: unbounded coordinates whose transform is a single spike.

#include <iostream>

#include <fibspace/band_operator.hpp>
#include <fibspace/generators.hpp>
#include <fibspace/space.hpp>

namespace {

void print(const char* name, const fibspace::Prefix& x) {
    std::cout << name << " = (";
    for (std::size_t i = 0; i < x.size(); ++i) std::cout << (i ? ", " : "") << x[i].str();
    std::cout << ")\n";
}

}  // namespace

int main() {
    using namespace fibspace;
    const Params params(Rational(2), Rational(3), 2.0);

    Prefix x{Rational(1), Rational(1), Rational(-1, 2)};
    print("x", x);
    const Prefix y = forward_transform(params, x);
    print("F x", y);
    print("F^{-1} F x", inverse_transform(params, y));

    const Params witness_params(Rational(1), Rational(-1), 2.0);
    const Prefix w = counterexample_sequence(witness_params).prefix(7);
    print("\nescape sequence", w);
    print("its transform", forward_transform(witness_params, w));
    std::cout << "band-space norm: " << fhat_norm(witness_params, w).value
              << " (bounded) while sup |w_k| = " << abs(w.back()).str() << " keeps growing\n";
    return 0;
}
