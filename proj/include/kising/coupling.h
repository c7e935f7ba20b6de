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

#ifndef KISING_COUPLING_H
#define KISING_COUPLING_H

#include <cstdint>
#include <string>
#include <string_view>

#include "kising/quad.h"

namespace kising {

/// Reduced fraction num/den with den >= 1.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// The quadratic surd a*sqrt(b)/c, b >= 0 square-free is not required.
struct QuadraticSurd {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 1;
};

/// Ising coupling J. Rational couplings keep exact integer arithmetic in every
/// phase reduction; everything else is carried as a binary128 value.
class CouplingSpec {
   public:
    enum class Kind { rational, surd, real };

    CouplingSpec();

    static CouplingSpec rational(std::int64_t num, std::int64_t den);
    static CouplingSpec surd(std::int64_t a, std::int64_t b, std::int64_t c);
    static CouplingSpec real(quad value, std::string text = "");

    /// J + eps as a real coupling. The text records both parts.
    CouplingSpec offset_by(quad eps, std::string_view eps_text = "") const;

    Kind kind() const {
        return kind_;
    }
    bool is_rational() const {
        return kind_ == Kind::rational;
    }
    /// Throws UnsupportedRepresentationError unless is_rational().
    const Rational &as_rational() const;
    const QuadraticSurd &as_surd() const;

    quad value() const {
        return value_;
    }
    double to_double() const {
        return static_cast<double>(value_);
    }
    std::string to_string() const;

   private:
    Kind kind_;
    Rational rational_;
    QuadraticSurd surd_;
    quad value_;
    std::string text_;
};

/// Accepts "r/h", "r", "[a*]sqrt(b)[/c]" and decimal or scientific literals.
/// Decimals are classified as real even when they are exactly representable
/// as fractions. Throws ParseError with the offending position.
CouplingSpec parse_coupling(std::string_view text);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace kising

#endif
