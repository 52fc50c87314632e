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

// Abstract finite algebras given by operation tables, and the notions
// derived from them: diversity, domain and range, normality, the
// injective-function elements, domain/range equivalence and idempotents.

#ifndef RELREP_ALGEBRA_HPP_
#define RELREP_ALGEBRA_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "signature.hpp"

namespace relrep {

  using Element   = std::uint32_t;
  using Partition = std::vector<std::vector<Element>>;

  // A finite algebra. Elements are the indices 0..n-1; names exist for I/O.
  // Optional tables are set once while building and never change afterwards.
  class FiniteAlgebra {
   public:
    FiniteAlgebra(std::vector<std::string> names, std::vector<Element> compose)
        : _names(std::move(names)), _compose(std::move(compose)) {
      if (_names.empty()) {
        throw Error(ErrorKind::invalid_argument,
                    "an algebra needs at least one element");
      }
      std::unordered_set<std::string> seen;
      for (auto const& nm : _names) {
        if (!seen.insert(nm).second) {
          throw Error(ErrorKind::invalid_argument,
                      "duplicate element name '" + nm + "'");
        }
      }
      check_binary_table(_compose, "compose");
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(Element a) const {
      return _names.at(a);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<Element> index_of(std::string_view nm) const {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (_names[i] == nm) {
          return static_cast<Element>(i);
        }
      }
      return std::nullopt;
    }

    Element compose(Element a, Element b) const noexcept {
      return _compose[a * size() + b];
    }

    Element meet(Element a, Element b) const noexcept {
      return (*_meet)[a * size() + b];
    }

    Element join(Element a, Element b) const noexcept {
      return (*_join)[a * size() + b];
    }

    Element complement(Element a) const noexcept {
      return (*_complement)[a];
    }

    bool order(Element a, Element b) const noexcept {
      return (*_order)[a * size() + b] != 0;
    }

    bool has_meet() const noexcept {
      return _meet.has_value();
    }
    bool has_join() const noexcept {
      return _join.has_value();
    }
    bool has_complement() const noexcept {
      return _complement.has_value();
    }
    bool has_order() const noexcept {
      return _order.has_value();
    }

    std::optional<Element> e() const noexcept {
      return _e;
    }
    std::optional<Element> zero() const noexcept {
      return _zero;
    }
    std::optional<Element> top() const noexcept {
      return _top;
    }

    std::vector<Element> const& compose_table() const noexcept {
      return _compose;
    }
    std::optional<std::vector<Element>> const& meet_table() const noexcept {
      return _meet;
    }
    std::optional<std::vector<Element>> const& join_table() const noexcept {
      return _join;
    }
    std::optional<std::vector<Element>> const&
    complement_table() const noexcept {
      return _complement;
    }
    std::optional<std::vector<std::uint8_t>> const&
    order_matrix() const noexcept {
      return _order;
    }

    std::map<std::string, Element> const& designated() const noexcept {
      return _designated;
    }

    std::optional<Element> designated(std::string const& key) const {
      auto it = _designated.find(key);
      if (it == _designated.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    // True if the table or constant for `s` is present.
    bool provides(Symbol s) const noexcept {
      switch (s) {
        case Symbol::compose: return true;
        case Symbol::meet: return has_meet();
        case Symbol::join: return has_join();
        case Symbol::complement: return has_complement();
        case Symbol::order: return has_order();
        case Symbol::const_e: return _e.has_value();
        case Symbol::const_zero: return _zero.has_value();
        case Symbol::const_top: return _top.has_value();
      }
      return false;
    }

    // Every symbol for which a table or constant is present.
    Signature available_signature() const noexcept {
      Signature sig;
      for (auto s : all_symbols) {
        if (provides(s)) {
          sig = sig.with(s);
        }
      }
      return sig;
    }

    FiniteAlgebra& set_meet(std::vector<Element> t) {
      check_binary_table(t, "meet");
      _meet = std::move(t);
      return *this;
    }

    FiniteAlgebra& set_join(std::vector<Element> t) {
      check_binary_table(t, "join");
      _join = std::move(t);
      return *this;
    }

    FiniteAlgebra& set_complement(std::vector<Element> t) {
      if (t.size() != size()) {
        throw Error(ErrorKind::invalid_argument,
                    "complement table must have one entry per element");
      }
      for (auto x : t) {
        check_index(x, "complement");
      }
      _complement = std::move(t);
      return *this;
    }

    FiniteAlgebra& set_order(std::vector<std::uint8_t> t) {
      if (t.size() != size() * size()) {
        throw Error(ErrorKind::invalid_argument,
                    "order matrix must be n x n");
      }
      for (auto& x : t) {
        x = x != 0 ? 1 : 0;
      }
      _order = std::move(t);
      return *this;
    }

    FiniteAlgebra& set_e(Element x) {
      check_index(x, "e");
      _e = x;
      return *this;
    }

    FiniteAlgebra& set_zero(Element x) {
      check_index(x, "zero");
      _zero = x;
      return *this;
    }

    FiniteAlgebra& set_top(Element x) {
      check_index(x, "top");
      _top = x;
      return *this;
    }

    FiniteAlgebra& designate(std::string const& key, Element x) {
      check_index(x, key);
      _designated[key] = x;
      return *this;
    }

   private:
    void check_index(Element x, std::string const& field) const {
      if (x >= size()) {
        throw Error(ErrorKind::invalid_argument,
                    field + " refers to element " + std::to_string(x)
                        + " but the algebra has " + std::to_string(size())
                        + " elements");
      }
    }

    void check_binary_table(std::vector<Element> const& t,
                            char const*                 field) const {
      if (t.size() != size() * size()) {
        throw Error(ErrorKind::invalid_argument,
                    std::string(field) + " table must be n x n");
      }
      for (auto x : t) {
        check_index(x, field);
      }
    }

    std::vector<std::string>                _names;
    std::vector<Element>                    _compose;
    std::optional<std::vector<Element>>      _meet;
    std::optional<std::vector<Element>>      _join;
    std::optional<std::vector<Element>>      _complement;
    std::optional<std::vector<std::uint8_t>> _order;
    std::optional<Element>                   _e;
    std::optional<Element>                   _zero;
    std::optional<Element>                   _top;
    std::map<std::string, Element>           _designated;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  enum class Law {
    associativity,
    meet_idempotence,
    meet_commutativity,
    meet_associativity,
    join_idempotence,
    join_commutativity,
    join_associativity,
    absorption,
    order_reflexivity,
    order_antisymmetry,
    order_transitivity,
    order_meet_consistency,
    zero_minimum,
    top_maximum,
    compose_monotonicity,
    normality
  };

  constexpr std::string_view to_string(Law law) noexcept {
    switch (law) {
      case Law::associativity: return "Associativity";
      case Law::meet_idempotence: return "MeetIdempotence";
      case Law::meet_commutativity: return "MeetCommutativity";
      case Law::meet_associativity: return "MeetAssociativity";
      case Law::join_idempotence: return "JoinIdempotence";
      case Law::join_commutativity: return "JoinCommutativity";
      case Law::join_associativity: return "JoinAssociativity";
      case Law::absorption: return "Absorption";
      case Law::order_reflexivity: return "OrderReflexivity";
      case Law::order_antisymmetry: return "OrderAntisymmetry";
      case Law::order_transitivity: return "OrderTransitivity";
      case Law::order_meet_consistency: return "OrderMeetConsistency";
      case Law::zero_minimum: return "ZeroMinimum";
      case Law::top_maximum: return "TopMaximum";
      case Law::compose_monotonicity: return "ComposeMonotonicity";
      case Law::normality: return "Normality";
    }
    return "?";
  }

  struct Violation {
    Law                  law;
    std::vector<Element> witnesses;

    bool operator==(Violation const&) const = default;
  };

  namespace detail {
    // Collects at most `limit` witnesses per law.
    class ViolationSink {
     public:
      explicit ViolationSink(std::size_t limit) : _limit(limit) {}

      bool full(Law law) const {
        auto it = _count.find(law);
        return it != _count.end() && it->second >= _limit;
      }

      void add(Law law, std::vector<Element> w) {
        if (!full(law)) {
          ++_count[law];
          _out.push_back({law, std::move(w)});
        }
      }

      std::vector<Violation> take() {
        return std::move(_out);
      }

     private:
      std::size_t              _limit;
      std::map<Law, std::size_t> _count;
      std::vector<Violation>   _out;
    };

    template <typename Op>
    void check_semilattice(std::size_t n,
                           Op          op,
                           Law         idem,
                           Law         comm,
                           Law         assoc,
                           ViolationSink& sink) {
      for (Element a = 0; a < n; ++a) {
        if (op(a, a) != a) {
          sink.add(idem, {a});
        }
        for (Element b = 0; b < n; ++b) {
          if (op(a, b) != op(b, a)) {
            sink.add(comm, {a, b});
          }
        }
      }
      for (Element a = 0; a < n && !sink.full(assoc); ++a) {
        for (Element b = 0; b < n; ++b) {
          for (Element c = 0; c < n; ++c) {
            if (op(op(a, b), c) != op(a, op(b, c))) {
              sink.add(assoc, {a, b, c});
            }
          }
        }
      }
    }

    inline void require_table(FiniteAlgebra const& alg, Symbol s) {
      if (!alg.provides(s)) {
        throw Error(ErrorKind::missing_table, std::string(to_string(s)));
      }
    }
  }  // namespace detail

  // Checks the structural laws of every symbol in `sig`: associativity of
  // composition, lattice laws for meet/join, partial order laws, and the
  // bound constants. Reports at most `max_per_law` witnesses for each law.
  inline std::vector<Violation> validate_algebra(FiniteAlgebra const& alg,
                                                 Signature const&     sig,
                                                 std::size_t max_per_law = 1) {
    for (auto s : sig.symbols()) {
      detail::require_table(alg, s);
    }
    std::size_t const     n = alg.size();
    detail::ViolationSink sink(max_per_law);

    for (Element a = 0; a < n && !sink.full(Law::associativity); ++a) {
      for (Element b = 0; b < n; ++b) {
        Element const ab = alg.compose(a, b);
        for (Element c = 0; c < n; ++c) {
          if (alg.compose(ab, c) != alg.compose(a, alg.compose(b, c))) {
            sink.add(Law::associativity, {a, b, c});
          }
        }
      }
    }

    bool const meet = sig.contains(Symbol::meet);
    bool const join = sig.contains(Symbol::join);
    if (meet) {
      detail::check_semilattice(
          n,
          [&](Element x, Element y) { return alg.meet(x, y); },
          Law::meet_idempotence,
          Law::meet_commutativity,
          Law::meet_associativity,
          sink);
    }
    if (join) {
      detail::check_semilattice(
          n,
          [&](Element x, Element y) { return alg.join(x, y); },
          Law::join_idempotence,
          Law::join_commutativity,
          Law::join_associativity,
          sink);
    }
    if (meet && join) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (alg.meet(a, alg.join(a, b)) != a
              || alg.join(a, alg.meet(a, b)) != a) {
            sink.add(Law::absorption, {a, b});
          }
        }
      }
    }

    bool const order = sig.contains(Symbol::order);
    if (order) {
      for (Element a = 0; a < n; ++a) {
        if (!alg.order(a, a)) {
          sink.add(Law::order_reflexivity, {a});
        }
        for (Element b = 0; b < n; ++b) {
          if (a != b && alg.order(a, b) && alg.order(b, a)) {
            sink.add(Law::order_antisymmetry, {a, b});
          }
          if (meet && alg.order(a, b) != (alg.meet(a, b) == a)) {
            sink.add(Law::order_meet_consistency, {a, b});
          }
        }
      }
      for (Element a = 0; a < n && !sink.full(Law::order_transitivity);
           ++a) {
        for (Element b = 0; b < n; ++b) {
          if (!alg.order(a, b)) {
            continue;
          }
          for (Element c = 0; c < n; ++c) {
            if (alg.order(b, c) && !alg.order(a, c)) {
              sink.add(Law::order_transitivity, {a, b, c});
            }
          }
        }
      }
      if (sig.contains(Symbol::const_zero)) {
        for (Element a = 0; a < n; ++a) {
          if (!alg.order(*alg.zero(), a)) {
            sink.add(Law::zero_minimum, {*alg.zero(), a});
          }
        }
      }
      if (sig.contains(Symbol::const_top)) {
        for (Element a = 0; a < n; ++a) {
          if (!alg.order(a, *alg.top())) {
            sink.add(Law::top_maximum, {a, *alg.top()});
          }
        }
      }
    }
    return sink.take();
  }

  // a <= b, read from the order matrix or, failing that, from meet.
  inline bool leq(FiniteAlgebra const& alg, Element a, Element b) {
    if (alg.has_order()) {
      return alg.order(a, b);
    } else if (alg.has_meet()) {
      return alg.meet(a, b) == a;
    }
    throw Error(ErrorKind::unavailable, "no order or meet table");
  }

  // Conditions that every representable algebra satisfies but which the
  // validator does not enforce: composition is monotone in each argument.
  inline std::vector<Violation> representability_warnings(
      FiniteAlgebra const& alg,
      std::size_t          max_per_law = 1) {
    detail::ViolationSink sink(max_per_law);
    if (!alg.has_order() && !alg.has_meet()) {
      return {};
    }
    std::size_t const n = alg.size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a == b || !leq(alg, a, b)) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (!leq(alg, alg.compose(c, a), alg.compose(c, b))
              || !leq(alg, alg.compose(a, c), alg.compose(b, c))) {
            sink.add(Law::compose_monotonicity, {a, b, c});
          }
        }
      }
    }
    return sink.take();
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived notions
  ////////////////////////////////////////////////////////////////////////

  // The diversity element -e, or the designated "div" when no complement
  // of e is available.
  inline Element derived_div(FiniteAlgebra const& alg) {
    if (alg.has_complement() && alg.e()) {
      return alg.complement(*alg.e());
    }
    if (auto d = alg.designated("div")) {
      return *d;
    }
    throw Error(ErrorKind::unavailable,
                "div needs complement and e, or a designated div");
  }

  // Returns a copy of `alg` with div recorded under designated["div"].
  inline FiniteAlgebra with_div(FiniteAlgebra alg) {
    Element const d = derived_div(alg);
    alg.designate("div", d);
    return alg;
  }

  namespace detail {
    inline void require_dom_ran(FiniteAlgebra const& alg) {
      if (!alg.has_meet() || !alg.top() || !alg.e()) {
        throw Error(ErrorKind::unavailable,
                    "dom/ran need meet, top and e");
      }
    }
  }  // namespace detail

  // dom(a) = (a top) meet e
  inline Element derived_dom(FiniteAlgebra const& alg, Element a) {
    detail::require_dom_ran(alg);
    return alg.meet(alg.compose(a, *alg.top()), *alg.e());
  }

  // ran(a) = (top a) meet e
  inline Element derived_ran(FiniteAlgebra const& alg, Element a) {
    detail::require_dom_ran(alg);
    return alg.meet(alg.compose(*alg.top(), a), *alg.e());
  }

  struct NormalityResult {
    bool                 normal = true;
    std::vector<Element> witnesses;
  };

  // dom(a) a = a = a ran(a) for every a.
  inline NormalityResult normality_check(FiniteAlgebra const& alg) {
    detail::require_dom_ran(alg);
    NormalityResult out;
    for (Element a = 0; a < alg.size(); ++a) {
      if (alg.compose(derived_dom(alg, a), a) != a
          || alg.compose(a, derived_ran(alg, a)) != a) {
        out.normal = false;
        out.witnesses.push_back(a);
      }
    }
    return out;
  }

  // {a : (a div) meet a = 0 = (div a) meet a}
  inline std::vector<Element> i_elements_via_meet(FiniteAlgebra const& alg) {
    if (!alg.has_meet() || !alg.zero()) {
      throw Error(ErrorKind::unavailable,
                  "i-elements via meet need meet and zero");
    }
    Element const        d    = derived_div(alg);
    Element const        zero = *alg.zero();
    std::vector<Element> out;
    for (Element a = 0; a < alg.size(); ++a) {
      if (alg.meet(alg.compose(a, d), a) == zero
          && alg.meet(alg.compose(d, a), a) == zero) {
        out.push_back(a);
      }
    }
    return out;
  }

  // {a : a <= -(a div) and a <= -(div a)}
  inline std::vector<Element> i_elements_via_complement(
      FiniteAlgebra const& alg) {
    if (!alg.has_order() || !alg.has_complement()) {
      throw Error(ErrorKind::unavailable,
                  "i-elements via complement need order and complement");
    }
    Element const        d = derived_div(alg);
    std::vector<Element> out;
    for (Element a = 0; a < alg.size(); ++a) {
      if (alg.order(a, alg.complement(alg.compose(a, d)))
          && alg.order(a, alg.complement(alg.compose(d, a)))) {
        out.push_back(a);
      }
    }
    return out;
  }

  namespace detail {
    template <typename Key>
    Partition partition_by(std::size_t n, Key key) {
      std::map<Element, std::vector<Element>> buckets;
      for (Element a = 0; a < n; ++a) {
        buckets[key(a)].push_back(a);
      }
      Partition out;
      for (auto& [k, cls] : buckets) {
        out.push_back(std::move(cls));
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace detail

  // Classes of a -> a top; ordered by least member.
  inline Partition dom_equiv_classes(FiniteAlgebra const& alg) {
    if (!alg.top()) {
      throw Error(ErrorKind::unavailable, "domain classes need top");
    }
    Element const t = *alg.top();
    return detail::partition_by(
        alg.size(), [&](Element a) { return alg.compose(a, t); });
  }

  // Classes of a -> top a; ordered by least member.
  inline Partition ran_equiv_classes(FiniteAlgebra const& alg) {
    if (!alg.top()) {
      throw Error(ErrorKind::unavailable, "range classes need top");
    }
    Element const t = *alg.top();
    return detail::partition_by(
        alg.size(), [&](Element a) { return alg.compose(t, a); });
  }

  inline std::vector<Element> idempotents(FiniteAlgebra const& alg) {
    std::vector<Element> out;
    for (Element a = 0; a < alg.size(); ++a) {
      if (alg.compose(a, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Analysis
  ////////////////////////////////////////////////////////////////////////

  struct AnalysisReport {
    std::optional<std::vector<Element>> i_elements;
    std::vector<Element>                idempotents;
    std::optional<bool>                 normal;
    std::vector<Element>                normality_witnesses;
    std::optional<Partition>            dom_classes;
    std::optional<Partition>            ran_classes;
    std::vector<Violation>              violations;
    std::vector<Violation>              warnings;
  };

  // Runs every derived notion that the algebra's tables support.
  inline AnalysisReport analyze(FiniteAlgebra const& alg) {
    AnalysisReport r;
    r.violations  = validate_algebra(alg, alg.available_signature());
    r.warnings    = representability_warnings(alg);
    r.idempotents = idempotents(alg);
    bool const has_div
        = (alg.has_complement() && alg.e()) || alg.designated("div");
    if (has_div && alg.has_meet() && alg.zero()) {
      r.i_elements = i_elements_via_meet(alg);
    } else if (has_div && alg.has_order() && alg.has_complement()) {
      r.i_elements = i_elements_via_complement(alg);
    }
    if (alg.has_meet() && alg.top() && alg.e()) {
      auto nr                = normality_check(alg);
      r.normal               = nr.normal;
      r.normality_witnesses  = std::move(nr.witnesses);
    }
    if (alg.top()) {
      r.dom_classes = dom_equiv_classes(alg);
      r.ran_classes = ran_equiv_classes(alg);
    }
    return r;
  }

}  // namespace relrep

#endif  // RELREP_ALGEBRA_HPP_
