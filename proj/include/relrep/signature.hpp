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

#ifndef RELREP_SIGNATURE_HPP_
#define RELREP_SIGNATURE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace relrep {

  enum class Symbol : std::uint8_t {
    compose,
    meet,
    join,
    complement,
    order,
    const_e,
    const_zero,
    const_top
  };

  inline constexpr std::array<Symbol, 8> all_symbols = {Symbol::compose,
                                                        Symbol::meet,
                                                        Symbol::join,
                                                        Symbol::complement,
                                                        Symbol::order,
                                                        Symbol::const_e,
                                                        Symbol::const_zero,
                                                        Symbol::const_top};

  constexpr std::string_view to_string(Symbol s) noexcept {
    switch (s) {
      case Symbol::compose: return "compose";
      case Symbol::meet: return "meet";
      case Symbol::join: return "join";
      case Symbol::complement: return "complement";
      case Symbol::order: return "order";
      case Symbol::const_e: return "e";
      case Symbol::const_zero: return "zero";
      case Symbol::const_top: return "top";
    }
    return "?";
  }

  // Accepts the canonical names above plus a few common spellings.
  inline std::optional<Symbol> symbol_from_string(std::string_view s) {
    if (s == "compose" || s == "comp" || s == "." || s == "·") {
      return Symbol::compose;
    } else if (s == "meet" || s == "and") {
      return Symbol::meet;
    } else if (s == "join" || s == "or") {
      return Symbol::join;
    } else if (s == "complement" || s == "-" || s == "neg") {
      return Symbol::complement;
    } else if (s == "order" || s == "le" || s == "<=") {
      return Symbol::order;
    } else if (s == "e" || s == "const_e" || s == "identity") {
      return Symbol::const_e;
    } else if (s == "zero" || s == "0" || s == "const_zero") {
      return Symbol::const_zero;
    } else if (s == "top" || s == "const_top") {
      return Symbol::const_top;
    }
    return std::nullopt;
  }

  // A set of symbols. Composition is always a member.
  class Signature {
   public:
    Signature() noexcept : _bits(bit(Symbol::compose)) {}

    Signature(std::initializer_list<Symbol> symbols) noexcept : Signature() {
      for (auto s : symbols) {
        _bits |= bit(s);
      }
    }

    static Signature full() noexcept {
      Signature sig;
      for (auto s : all_symbols) {
        sig._bits |= bit(s);
      }
      return sig;
    }

    // Parses a comma separated list such as "compose,meet,join".
    static Signature parse(std::string_view text) {
      Signature   sig;
      std::size_t start = 0;
      while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        auto token = trim(text.substr(start, end - start));
        if (!token.empty()) {
          auto s = symbol_from_string(token);
          if (!s) {
            throw Error(ErrorKind::invalid_argument,
                        "unknown signature symbol '" + std::string(token)
                            + "'");
          }
          sig._bits |= bit(*s);
        }
        start = end + 1;
      }
      return sig;
    }

    bool contains(Symbol s) const noexcept {
      return (_bits & bit(s)) != 0;
    }

    Signature with(Symbol s) const noexcept {
      Signature r = *this;
      r._bits |= bit(s);
      return r;
    }

    Signature without(Symbol s) const noexcept {
      Signature r = *this;
      if (s != Symbol::compose) {
        r._bits &= static_cast<std::uint8_t>(~bit(s));
      }
      return r;
    }

    bool is_subset_of(Signature const& other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }

    std::vector<Symbol> symbols() const {
      std::vector<Symbol> out;
      for (auto s : all_symbols) {
        if (contains(s)) {
          out.push_back(s);
        }
      }
      return out;
    }

    std::string to_string() const {
      std::string out;
      for (auto s : symbols()) {
        if (!out.empty()) {
          out += ',';
        }
        out += relrep::to_string(s);
      }
      return out;
    }

    bool operator==(Signature const&) const = default;

   private:
    static constexpr std::uint8_t bit(Symbol s) noexcept {
      return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
    }

    static std::string_view trim(std::string_view s) noexcept {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::uint8_t _bits;
  };

  enum class Semantics { relative, universal };

  constexpr std::string_view to_string(Semantics s) noexcept {
    return s == Semantics::relative ? "relative" : "universal";
  }

  inline std::optional<Semantics> semantics_from_string(std::string_view s) {
    if (s == "relative") {
      return Semantics::relative;
    } else if (s == "universal") {
      return Semantics::universal;
    }
    return std::nullopt;
  }

}  // namespace relrep

#endif  // RELREP_SIGNATURE_HPP_
