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

// Concrete algebras of relations: a list of relations closed under the
// operations of a signature, together with the abstract tables obtained by
// computing those operations on the relations directly.

#ifndef RELREP_CONCRETE_HPP_
#define RELREP_CONCRETE_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "relation.hpp"
#include "signature.hpp"

namespace relrep {

  // Union of a list of relations over base m.
  inline Relation union_of(std::size_t m, std::vector<Relation> const& rs) {
    Relation u(m);
    for (auto const& r : rs) {
      u = join_rel(u, r);
    }
    return u;
  }

  struct ConcreteAlgebra {
    std::size_t           base_size;
    std::vector<Relation> relations;  // sorted canonically, distinct
    Semantics             semantics;
    Signature             signature;
    FiniteAlgebra         algebra;

    // The relation complements are taken in.
    Relation universe() const {
      return semantics == Semantics::universal
                 ? Relation::full(base_size)
                 : union_of(base_size, relations);
    }

    std::optional<Element> index_of(Relation const& r) const {
      auto it = std::lower_bound(relations.begin(), relations.end(), r);
      if (it != relations.end() && *it == r) {
        return static_cast<Element>(it - relations.begin());
      }
      return std::nullopt;
    }
  };

  inline std::string relation_name(Relation const& r, std::size_t index) {
    if (r.base_size() <= 8) {
      return "r" + std::to_string(r.code());
    }
    return "a" + std::to_string(index);
  }

  namespace detail {
    class ClosureSet {
     public:
      ClosureSet(std::size_t cap) : _cap(cap) {}

      bool add(Relation const& r) {
        if (_seen.insert(r).second) {
          _list.push_back(r);
          if (_list.size() > _cap) {
            throw Error(ErrorKind::cap_exceeded,
                        "closure exceeds " + std::to_string(_cap)
                            + " elements");
          }
          return true;
        }
        return false;
      }

      std::vector<Relation>& list() noexcept {
        return _list;
      }

     private:
      std::size_t                                _cap;
      std::unordered_set<Relation, RelationHash> _seen;
      std::vector<Relation>                      _list;
    };
  }  // namespace detail

  // Builds the algebra of relations tables from a closed list of relations.
  // Throws Internal if the list is not closed.
  inline ConcreteAlgebra make_concrete_algebra(std::vector<Relation> rels,
                                               Signature const&      sig,
                                               Semantics             sem) {
    if (rels.empty()) {
      throw Error(ErrorKind::invalid_argument, "no relations");
    }
    std::size_t const m = rels.front().base_size();
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    std::size_t const n = rels.size();

    std::unordered_map<Relation, Element, RelationHash> index;
    std::vector<std::string>                            names;
    for (std::size_t i = 0; i < n; ++i) {
      if (rels[i].base_size() != m) {
        throw Error(ErrorKind::base_mismatch, "generators differ in base size");
      }
      index.emplace(rels[i], static_cast<Element>(i));
      names.push_back(relation_name(rels[i], i));
    }
    auto lookup = [&](Relation const& r, char const* op) {
      auto it = index.find(r);
      if (it == index.end()) {
        throw Error(ErrorKind::internal,
                    std::string("relation list not closed under ") + op);
      }
      return it->second;
    };
    auto binary = [&](auto op, char const* what) {
      std::vector<Element> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = lookup(op(rels[a], rels[b]), what);
        }
      }
      return t;
    };

    FiniteAlgebra alg(std::move(names), binary(compose_rel, "compose"));
    if (sig.contains(Symbol::meet)) {
      alg.set_meet(binary(meet_rel, "meet"));
    }
    if (sig.contains(Symbol::join)) {
      alg.set_join(binary(join_rel, "join"));
    }
    Relation const universe = sem == Semantics::universal
                                  ? Relation::full(m)
                                  : union_of(m, rels);
    if (sig.contains(Symbol::complement)) {
      std::vector<Element> t(n);
      for (std::size_t a = 0; a < n; ++a) {
        t[a] = lookup(complement_rel(rels[a], universe), "complement");
      }
      alg.set_complement(std::move(t));
    }
    if (sig.contains(Symbol::order)) {
      std::vector<std::uint8_t> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = rels[a].is_subset_of(rels[b]) ? 1 : 0;
        }
      }
      alg.set_order(std::move(t));
    }
    if (sig.contains(Symbol::const_e)) {
      alg.set_e(lookup(Relation::identity(m), "e"));
    }
    if (sig.contains(Symbol::const_zero)) {
      alg.set_zero(lookup(Relation::empty(m), "zero"));
    }
    if (sig.contains(Symbol::const_top)) {
      alg.set_top(lookup(universe, "top"));
    }
    return ConcreteAlgebra{m, std::move(rels), sem, sig, std::move(alg)};
  }

  // Least set of relations containing the generators and the constants of
  // `sig` that is closed under the operations of `sig`. Under relative
  // semantics complements are taken inside the union of the final set.
  inline ConcreteAlgebra closure_generate(std::vector<Relation> const& generators,
                                          Signature const&             sig,
                                          Semantics                    sem,
                                          std::size_t cap = 4096) {
    if (generators.empty()) {
      throw Error(ErrorKind::invalid_argument, "closure needs a generator");
    }
    std::size_t const m = generators.front().base_size();
    for (auto const& g : generators) {
      if (g.base_size() != m) {
        throw Error(ErrorKind::base_mismatch, "generators differ in base size");
      }
    }
    bool const meet  = sig.contains(Symbol::meet);
    bool const join  = sig.contains(Symbol::join);
    bool const comp  = sig.contains(Symbol::complement);
    bool const top   = sig.contains(Symbol::const_top);
    bool const univ  = sem == Semantics::universal;
    auto const full  = Relation::full(m);

    detail::ClosureSet set(cap);
    for (auto const& g : generators) {
      set.add(g);
    }
    if (sig.contains(Symbol::const_e)) {
      set.add(Relation::identity(m));
    }
    if (sig.contains(Symbol::const_zero)) {
      set.add(Relation::empty(m));
    }
    if (top && univ) {
      set.add(full);
    }

    auto&                 list      = set.list();
    std::size_t           processed = 0;
    while (true) {
      while (processed < list.size()) {
        std::size_t const i = processed++;
        for (std::size_t j = 0; j <= i; ++j) {
          // list may reallocate during add; copy operands first
          Relation const a = list[i];
          Relation const b = list[j];
          set.add(compose_rel(a, b));
          set.add(compose_rel(b, a));
          if (meet) {
            set.add(meet_rel(a, b));
          }
          if (join) {
            set.add(join_rel(a, b));
          }
        }
        if (comp && univ) {
          Relation const a = list[i];
          set.add(complement_rel(a, full));
        }
      }
      if (univ || !(comp || top)) {
        break;
      }
      Relation const    u      = union_of(m, list);
      std::size_t const before = list.size();
      if (top) {
        set.add(u);
      }
      if (comp) {
        for (std::size_t i = 0; i < before; ++i) {
          Relation const a = list[i];
          set.add(complement_rel(a, u));
        }
      }
      if (list.size() == before) {
        break;
      }
    }
    return make_concrete_algebra(list, sig, sem);
  }

  // The algebra of all relations on an m-point base (m <= 3).
  inline ConcreteAlgebra full_relation_algebra(std::size_t m,
                                               Semantics   sem = Semantics::universal,
                                               Signature   sig = Signature::full()) {
    if (m == 0 || m > 3) {
      throw Error(ErrorKind::cap_exceeded,
                  "full relation algebras are built for base sizes 1..3");
    }
    std::vector<Relation> all;
    std::uint64_t const   count = std::uint64_t(1) << (m * m);
    for (std::uint64_t c = 0; c < count; ++c) {
      all.push_back(Relation::from_code(m, c));
    }
    return make_concrete_algebra(std::move(all), sig, sem);
  }

}  // namespace relrep

#endif  // RELREP_CONCRETE_HPP_
