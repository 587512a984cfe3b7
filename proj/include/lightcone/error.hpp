// Copyright 2026 The Lightcone Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lightcone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid input: bad qubit index, arity mismatch, missing parameter.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Text input that does not follow the circuit / Hamiltonian / graph grammar.
class ParseError : public Error {
   public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {
    }

    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// A size or numeric guard was exceeded (dense simulation too large, singular matrix, ...).
class GuardError : public Error {
   public:
    using Error::Error;
};

/// Invalid experiment configuration.
class ConfigError : public Error {
   public:
    using Error::Error;
};

}  // namespace lightcone
