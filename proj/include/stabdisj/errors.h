// Copyright 2026 The stabdisj Authors
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

#ifndef STABDISJ_ERRORS_H
#define STABDISJ_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stabdisj {

/// Root of every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input. The CLI maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// A configured size cap was exceeded. The CLI maps these to exit code 3.
struct ResourceError : Error {
    using Error::Error;
};

/// A well-formed input for which the requested quantity is not defined
/// (e.g. a level bound with d_down <= 1). The CLI maps these to exit code 1.
struct InapplicableError : Error {
    using Error::Error;
};

struct DimensionError : InputError {
    using InputError::InputError;
};

struct ParseError : InputError {
    ParseError(const std::string &what, std::size_t position)
        : InputError(what + " (at index " + std::to_string(position) + ")"), position(position) {
    }
    std::size_t position;
};

struct NotFullRank : InputError {
    NotFullRank(std::size_t rows, std::size_t rank, const std::string &context = "")
        : InputError(
              context + "check matrix is not full rank: " + std::to_string(rows) + " rows but rank " +
              std::to_string(rank)),
          rows(rows),
          rank(rank) {
    }
    std::size_t rows;
    std::size_t rank;
};

struct NonAbelian : InputError {
    NonAbelian(std::size_t row_a, std::size_t row_b, const std::string &context = "")
        : InputError(
              context + "check rows " + std::to_string(row_a) + " and " + std::to_string(row_b) + " anticommute"),
          row_a(row_a),
          row_b(row_b) {
    }
    std::size_t row_a;
    std::size_t row_b;
};

struct TrivialClass : InputError {
    TrivialClass() : InputError("logical class is trivial (its representative lies in the stabilizer group)") {
    }
};

struct NotInNormalizer : InputError {
    NotInNormalizer() : InputError("operator does not commute with every stabilizer generator") {
    }
};

struct InvalidWitness : InputError {
    using InputError::InputError;
};

struct InvalidC : InputError {
    using InputError::InputError;
};

struct NotIndependent : InputError {
    using InputError::InputError;
};

struct NotCss : InputError {
    using InputError::InputError;
};

struct InnerNotK1 : InputError {
    using InputError::InputError;
};

struct InvalidGraph : InputError {
    using InputError::InputError;
};

struct TooLarge : ResourceError {
    using ResourceError::ResourceError;
};

struct BoundInapplicable : InapplicableError {
    using InapplicableError::InapplicableError;
};

struct HypothesisNotMet : InapplicableError {
    using InapplicableError::InapplicableError;
};

}  // namespace stabdisj

#endif
