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

/// @file fibspace.hpp
/// @brief Umbrella header.

#ifndef FIBSPACE_FIBSPACE_HPP
#define FIBSPACE_FIBSPACE_HPP

#include "band_operator.hpp"   // IWYU pragma: export
#include "basis.hpp"           // IWYU pragma: export
#include "conditions.hpp"      // IWYU pragma: export
#include "duality.hpp"         // IWYU pragma: export
#include "fib.hpp"             // IWYU pragma: export
#include "generators.hpp"      // IWYU pragma: export
#include "geometry.hpp"        // IWYU pragma: export
#include "matrix_class.hpp"    // IWYU pragma: export
#include "params.hpp"          // IWYU pragma: export
#include "prefix.hpp"          // IWYU pragma: export
#include "rational.hpp"        // IWYU pragma: export
#include "space.hpp"           // IWYU pragma: export
#include "summation.hpp"       // IWYU pragma: export
#include "triangle.hpp"        // IWYU pragma: export

#endif  // FIBSPACE_FIBSPACE_HPP
