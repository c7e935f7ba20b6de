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

#include "kising/quad.h"

#include <cctype>
#include <string>

#include "kising/errors.h"

namespace kising {

quad parse_quad(std::string_view text) {
    std::string buffer(text);
    if (buffer.empty()) {
        throw ParseError("empty number", 0);
    }
    if (std::isspace(static_cast<unsigned char>(buffer.front()))) {
        throw ParseError("leading whitespace in number", 0);
    }
    char *end = nullptr;
    quad value = strtoflt128(buffer.c_str(), &end);
    std::size_t consumed = static_cast<std::size_t>(end - buffer.c_str());
    if (consumed == 0) {
        throw ParseError("expected a number", 0);
    }
    if (consumed != buffer.size()) {
        throw ParseError("unexpected character '" + std::string(1, buffer[consumed]) + "'", consumed);
    }
    if (isinfq(value) || isnanq(value)) {
        throw ParseError("number is not finite", 0);
    }
    return value;
}

std::string format_quad(quad value, int significant_digits) {
    char buffer[128];
    quadmath_snprintf(buffer, sizeof buffer, "%.*Qg", significant_digits, value);
    return buffer;
}

}  // namespace kising
