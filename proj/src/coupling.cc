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

#include "kising/coupling.h"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "kising/errors.h"

namespace kising {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

CouplingSpec::CouplingSpec() : kind_(Kind::rational), value_(0) {
}

CouplingSpec CouplingSpec::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw ArgumentError("coupling denominator must be nonzero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    CouplingSpec spec;
    spec.kind_ = Kind::rational;
    spec.rational_ = {num, den};
    spec.value_ = static_cast<quad>(num) / static_cast<quad>(den);
    spec.text_ = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    return spec;
}

CouplingSpec CouplingSpec::surd(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (c == 0) {
        throw ArgumentError("surd denominator must be nonzero");
    }
    if (b < 0) {
        throw ArgumentError("surd radicand must be non-negative");
    }
    if (c < 0) {
        a = -a;
        c = -c;
    }
    std::int64_t root = static_cast<std::int64_t>(sqrtq(static_cast<quad>(b)) + 0.5Q);
    if (root * root == b) {
        return rational(a * root, c);
    }
    CouplingSpec spec;
    spec.kind_ = Kind::surd;
    spec.surd_ = {a, b, c};
    spec.value_ = static_cast<quad>(a) * sqrtq(static_cast<quad>(b)) / static_cast<quad>(c);
    std::string text;
    if (a == -1) {
        text = "-";
    } else if (a != 1) {
        text = std::to_string(a) + "*";
    }
    text += "sqrt(" + std::to_string(b) + ")";
    if (c != 1) {
        text += "/" + std::to_string(c);
    }
    spec.text_ = text;
    return spec;
}

CouplingSpec CouplingSpec::real(quad value, std::string text) {
    if (isinfq(value) || isnanq(value)) {
        throw ArgumentError("coupling must be finite");
    }
    CouplingSpec spec;
    spec.kind_ = Kind::real;
    spec.value_ = value;
    spec.text_ = text.empty() ? format_quad(value) : std::move(text);
    return spec;
}

CouplingSpec CouplingSpec::offset_by(quad eps, std::string_view eps_text) const {
    std::string e = eps_text.empty() ? format_quad(eps, 17) : std::string(eps_text);
    if (!e.empty() && e.front() != '-' && e.front() != '+') {
        e = "+" + e;
    }
    return real(value_ + eps, text_ + e);
}

const Rational &CouplingSpec::as_rational() const {
    if (kind_ != Kind::rational) {
        throw UnsupportedRepresentationError("coupling " + text_ + " is not rational");
    }
    return rational_;
}

const QuadraticSurd &CouplingSpec::as_surd() const {
    if (kind_ != Kind::surd) {
        throw UnsupportedRepresentationError("coupling " + text_ + " is not a surd");
    }
    return surd_;
}

std::string CouplingSpec::to_string() const {
    return text_;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const {
        return pos >= text.size();
    }
    char peek() const {
        return done() ? '\0' : text[pos];
    }
    bool accept(std::string_view token) {
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!accept(token)) {
            throw ParseError("expected '" + std::string(token) + "'", pos);
        }
    }
    std::int64_t integer() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos;
        }
        if (start == pos) {
            throw ParseError("expected digits", pos);
        }
        std::int64_t value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            int digit = text[i] - '0';
            if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
                throw ParseError("integer too large", start);
            }
            value = value * 10 + digit;
        }
        return value;
    }
};

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

}  // namespace

CouplingSpec parse_coupling(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) {
        ++first;
    }
    std::size_t last = text.size();
    while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) {
        --last;
    }
    if (first == last) {
        throw ParseError("empty coupling", first);
    }
    std::string_view body = text.substr(first, last - first);
    Cursor cur{body, 0};
    std::int64_t sign = 1;
    if (cur.accept("-")) {
        sign = -1;
    } else {
        cur.accept("+");
    }

    try {
        std::string_view rest = body.substr(cur.pos);
        if (rest.find("sqrt") != std::string_view::npos) {
            std::int64_t a = 1;
            if (!cur.accept("sqrt")) {
                a = cur.integer();
                cur.expect("*");
                cur.expect("sqrt");
            }
            cur.expect("(");
            std::int64_t b = cur.integer();
            cur.expect(")");
            std::int64_t c = 1;
            if (cur.accept("/")) {
                c = cur.integer();
                if (c == 0) {
                    throw ParseError("zero denominator", cur.pos - 1);
                }
            }
            if (!cur.done()) {
                throw ParseError("unexpected character '" + std::string(1, cur.peek()) + "'", cur.pos);
            }
            return CouplingSpec::surd(sign * a, b, c);
        }
        std::size_t slash = rest.find('/');
        if (slash != std::string_view::npos || all_digits(rest)) {
            std::int64_t num = cur.integer();
            std::int64_t den = 1;
            if (cur.accept("/")) {
                std::size_t at = cur.pos;
                den = cur.integer();
                if (den == 0) {
                    throw ParseError("zero denominator", at);
                }
            }
            if (!cur.done()) {
                throw ParseError("unexpected character '" + std::string(1, cur.peek()) + "'", cur.pos);
            }
            return CouplingSpec::rational(sign * num, den);
        }
        std::size_t offset = cur.pos;
        try {
            quad v = parse_quad(rest);
            return CouplingSpec::real(sign * v, std::string(body));
        } catch (const ParseError &e) {
            throw ParseError(e.detail(), e.position() + offset);
        }
    } catch (const ParseError &e) {
        throw ParseError(e.detail(), e.position() + first);
    }
}

}  // namespace kising
