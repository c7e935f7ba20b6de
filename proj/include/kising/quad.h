// Copyright 2026 The kicked-ising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KISING_QUAD_H
#define KISING_QUAD_H

#include <quadmath.h>

#include <string>
#include <string_view>

namespace kising {

/// IEEE binary128 (113-bit significand, ~34 significant digits).
using quad = __float128;

inline quad quad_pi() {
    return M_PIq;
}

/// Reduces x into [0, modulus). modulus must be positive.
inline quad reduce_mod(quad x, quad modulus) {
    quad r = fmodq(x, modulus);
    if (r < 0) {
        r += modulus;
    }
    if (r >= modulus) {
        r -= modulus;
    }
    return r;
}

/// Parses a decimal or scientific literal exactly rounded to binary128.
/// Throws ParseError on trailing garbage or empty input.
quad parse_quad(std::string_view text);

std::string format_quad(quad value, int significant_digits = 34);

}  // namespace kising

#endif
