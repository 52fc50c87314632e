// Copyright 2026 the relrep authors
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

#ifndef RELREP_ERROR_HPP_
#define RELREP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace relrep {

  enum class ErrorKind {
    missing_table,
    unavailable,
    base_mismatch,
    universe_violation,
    cap_exceeded,
    not_composition_preserving,
    missing_top,
    not_idempotent,
    no_distinction,
    wrong_semantics,
    precondition_failed,
    carrier_too_large,
    invalid_argument,
    parse_error,
    internal
  };

  constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
      case ErrorKind::missing_table: return "MissingTable";
      case ErrorKind::unavailable: return "Unavailable";
      case ErrorKind::base_mismatch: return "BaseMismatch";
      case ErrorKind::universe_violation: return "UniverseViolation";
      case ErrorKind::cap_exceeded: return "CapExceeded";
      case ErrorKind::not_composition_preserving:
        return "NotCompositionPreserving";
      case ErrorKind::missing_top: return "MissingTop";
      case ErrorKind::not_idempotent: return "NotIdempotent";
      case ErrorKind::no_distinction: return "NoDistinction";
      case ErrorKind::wrong_semantics: return "WrongSemantics";
      case ErrorKind::precondition_failed: return "PreconditionFailed";
      case ErrorKind::carrier_too_large: return "CarrierTooLarge";
      case ErrorKind::invalid_argument: return "InvalidArgument";
      case ErrorKind::parse_error: return "ParseError";
      case ErrorKind::internal: return "Internal";
    }
    return "Unknown";
  }

  // All library failures are reported through this type; `kind()` is the
  // programmatic discriminator, `what()` carries "Kind: detail".
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
          _kind(kind),
          _detail(detail) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorKind   _kind;
    std::string _detail;
  };

}  // namespace relrep

#endif  // RELREP_ERROR_HPP_
