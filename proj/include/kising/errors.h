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

#ifndef KISING_ERRORS_H
#define KISING_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kising {

/// Invalid argument passed to a library operation (out-of-range size, bad fraction, ...).
class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position` is the byte offset of the offending character.
class ParseError : public ArgumentError {
   public:
    ParseError(const std::string &message, std::size_t position)
        : ArgumentError(message + " (at position " + std::to_string(position) + ")"), detail_(message), position_(position) {
    }
    /// The message without the position suffix.
    const std::string &detail() const {
        return detail_;
    }
    std::size_t position() const {
        return position_;
    }

   private:
    std::string detail_;
    std::size_t position_;
};

/// A size or memory guard would be exceeded.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A numerical post-condition (norm, unitarity, precision bound) was violated.
class NumericGuardError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Too few levels or samples for a statistic to be meaningful.
class StatisticsError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operation requested on a representation that does not support it.
class UnsupportedRepresentationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace kising

#endif
