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

// Prints consecutive Fibonacci ratios closing in on the golden ratio,
// together with the exact Cassini residue that drives the alternation.

#include <cmath>
#include <iomanip>
#include <iostream>

#include <fibspace/fib.hpp>

int main() {
    using namespace fibspace;
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    std::cout << std::setprecision(16);
    std::cout << "n     f_{n+1}/f_n          error                    cassini\n";
    for (std::size_t n : {1, 2, 5, 10, 20, 40, 80}) {
        const double r = ratio(n).to_double();
        std::cout << std::left << std::setw(6) << n << std::setw(21) << r << std::setw(25)
                  << std::abs(r - golden) << cassini(n).str() << "\n";
    }
    return 0;
}
