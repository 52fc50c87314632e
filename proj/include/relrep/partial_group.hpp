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

// Partial groups: a carrier with a partially defined associative product and
// an identity. Includes restriction of a group to a square root subset, and a
// bounded search for embeddings into symmetric groups.

#ifndef RELREP_PARTIAL_GROUP_HPP_
#define RELREP_PARTIAL_GROUP_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"

namespace relrep {

  inline constexpr Element undefined = std::numeric_limits<Element>::max();

  class PartialGroup {
   public:
    PartialGroup(std::vector<std::string>            names,
                 Element                             identity,
                 std::vector<Element>                table,
                 std::optional<std::vector<Element>> sqrt = std::nullopt)
        : _names(std::move(names)),
          _identity(identity),
          _table(std::move(table)),
          _sqrt(std::move(sqrt)) {
      std::size_t const n = _names.size();
      if (n == 0) {
        throw Error(ErrorKind::invalid_argument, "empty carrier");
      }
      if (_identity >= n) {
        throw Error(ErrorKind::invalid_argument, "identity outside the carrier");
      }
      if (_table.size() != n * n) {
        throw Error(ErrorKind::invalid_argument, "product table must be n x n");
      }
      for (auto x : _table) {
        if (x != undefined && x >= n) {
          throw Error(ErrorKind::invalid_argument, "product outside the carrier");
        }
      }
      if (_sqrt) {
        std::sort(_sqrt->begin(), _sqrt->end());
        _sqrt->erase(std::unique(_sqrt->begin(), _sqrt->end()), _sqrt->end());
        for (auto x : *_sqrt) {
          if (x >= n) {
            throw Error(ErrorKind::invalid_argument, "sqrt element outside the carrier");
          }
        }
      }
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

    std::optional<Element> index_of(std::string const& nm) const {
      auto it = std::find(_names.begin(), _names.end(), nm);
      if (it == _names.end()) {
        return std::nullopt;
      }
      return static_cast<Element>(it - _names.begin());
    }

    Element identity() const noexcept {
      return _identity;
    }

    // undefined when a*b is not defined
    Element product(Element a, Element b) const noexcept {
      return _table[a * size() + b];
    }

    bool defined(Element a, Element b) const noexcept {
      return product(a, b) != undefined;
    }

    std::optional<std::vector<Element>> const& sqrt() const noexcept {
      return _sqrt;
    }

    std::vector<Element> const& table() const noexcept {
      return _table;
    }

   private:
    std::vector<std::string>            _names;
    Element                             _identity;
    std::vector<Element>                _table;
    std::optional<std::vector<Element>> _sqrt;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  enum class PgAxiom {
    identity,
    associativity,
    left_cancellation,
    right_cancellation,
    squareness
  };

  constexpr std::string_view to_string(PgAxiom a) noexcept {
    switch (a) {
      case PgAxiom::identity: return "Identity";
      case PgAxiom::associativity: return "Associativity";
      case PgAxiom::left_cancellation: return "LeftCancellation";
      case PgAxiom::right_cancellation: return "RightCancellation";
      case PgAxiom::squareness: return "Squareness";
    }
    return "?";
  }

  struct PgViolation {
    PgAxiom              axiom;
    std::vector<Element> witnesses;
  };

  struct PartialGroupReport {
    std::vector<PgViolation>            violations;
    std::optional<std::vector<Element>> sqrt;  // given, or inferred
    bool                                sqrt_inferred = false;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  // Largest carrier for which a square root subset is searched for.
  inline constexpr std::size_t max_sqrt_inference = 12;

  namespace detail {
    // Why `s` fails to be a square root set, or nullopt if it is one.
    inline std::optional<std::vector<Element>>
    squareness_failure(PartialGroup const& pg, std::vector<bool> const& in) {
      std::size_t const n = pg.size();
      if (!in[pg.identity()]) {
        return std::vector<Element>{pg.identity()};
      }
      std::vector<bool> hit(n, false);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (pg.defined(a, b) != (in[a] && in[b])) {
            return std::vector<Element>{a, b};
          }
          if (pg.defined(a, b)) {
            hit[pg.product(a, b)] = true;
          }
        }
      }
      for (Element c = 0; c < n; ++c) {
        if (!hit[c]) {
          return std::vector<Element>{c};
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // Identity, weak associativity (both bracketings defined), both
  // cancellation laws, and squareness against the given sqrt or, when there
  // is none, against every subset containing the identity.
  inline PartialGroupReport validate_partial_group(PartialGroup const& pg,
                                                   std::size_t max_per_axiom = 1) {
    std::size_t const            n = pg.size();
    PartialGroupReport           r;
    std::map<PgAxiom, std::size_t> count;
    auto add = [&](PgAxiom ax, std::vector<Element> w) {
      if (count[ax]++ < max_per_axiom) {
        r.violations.push_back({ax, std::move(w)});
      }
    };
    Element const e = pg.identity();
    for (Element a = 0; a < n; ++a) {
      if ((pg.defined(e, a) && pg.product(e, a) != a)
          || (pg.defined(a, e) && pg.product(a, e) != a)) {
        add(PgAxiom::identity, {a});
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element const ab = pg.product(a, b);
        if (ab == undefined) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          Element const bc = pg.product(b, c);
          if (bc == undefined) {
            continue;
          }
          Element const l = pg.product(ab, c);
          Element const rr = pg.product(a, bc);
          if (l != undefined && rr != undefined && l != rr) {
            add(PgAxiom::associativity, {a, b, c});
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = y + 1; z < n; ++z) {
          if (pg.defined(x, y) && pg.product(x, y) == pg.product(x, z)) {
            add(PgAxiom::left_cancellation, {x, y, z});
          }
          if (pg.defined(y, x) && pg.product(y, x) == pg.product(z, x)) {
            add(PgAxiom::right_cancellation, {x, y, z});
          }
        }
      }
    }
    if (pg.sqrt()) {
      std::vector<bool> in(n, false);
      for (auto a : *pg.sqrt()) {
        in[a] = true;
      }
      if (auto w = detail::squareness_failure(pg, in)) {
        add(PgAxiom::squareness, *w);
      }
      r.sqrt = pg.sqrt();
      return r;
    }
    if (n > max_sqrt_inference) {
      throw Error(ErrorKind::carrier_too_large,
                  "sqrt inference is limited to carriers of size "
                      + std::to_string(max_sqrt_inference));
    }
    // subsets of the non-identity elements, in increasing mask order
    std::vector<Element> others;
    for (Element a = 0; a < n; ++a) {
      if (a != e) {
        others.push_back(a);
      }
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << others.size()); ++mask) {
      std::vector<bool> in(n, false);
      in[e] = true;
      for (std::size_t i = 0; i < others.size(); ++i) {
        if (((mask >> i) & 1u) != 0) {
          in[others[i]] = true;
        }
      }
      if (!detail::squareness_failure(pg, in)) {
        std::vector<Element> s;
        for (Element a = 0; a < n; ++a) {
          if (in[a]) {
            s.push_back(a);
          }
        }
        r.sqrt          = std::move(s);
        r.sqrt_inferred = true;
        return r;
      }
    }
    add(PgAxiom::squareness, {});
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups and restriction
  ////////////////////////////////////////////////////////////////////////

  // A finite group by its Cayley table.
  struct CayleyGroup {
    std::vector<std::string> names;
    Element                  identity = 0;
    std::vector<Element>     table;

    std::size_t size() const noexcept {
      return names.size();
    }

    Element product(Element a, Element b) const noexcept {
      return table[a * size() + b];
    }
  };

  inline CayleyGroup cyclic_group(std::size_t n) {
    CayleyGroup g;
    for (std::size_t i = 0; i < n; ++i) {
      g.names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    }
    g.table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g.table[a * n + b] = static_cast<Element>((a + b) % n);
      }
    }
    return g;
  }

  inline CayleyGroup direct_product(CayleyGroup const& g, CayleyGroup const& h) {
    CayleyGroup       p;
    std::size_t const n = g.size() * h.size();
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < h.size(); ++b) {
        p.names.push_back("(" + g.names[a] + "," + h.names[b] + ")");
      }
    }
    p.identity = static_cast<Element>(g.identity * h.size() + h.identity);
    p.table.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto const a = g.product(static_cast<Element>(x / h.size()),
                                 static_cast<Element>(y / h.size()));
        auto const b = h.product(static_cast<Element>(x % h.size()),
                                 static_cast<Element>(y % h.size()));
        p.table[x * n + y] = static_cast<Element>(a * h.size() + b);
      }
    }
    return p;
  }

  // The symmetric group on k points, elements in lexicographic order of
  // their one-line notation (so the identity is element 0).
  inline CayleyGroup symmetric_group(std::size_t k) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    CayleyGroup       g;
    std::size_t const n = perms.size();
    for (auto const& q : perms) {
      std::string nm = "[";
      for (auto i : q) {
        nm += std::to_string(i);
      }
      g.names.push_back(nm + "]");
    }
    g.table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::size_t> c(k);
        for (std::size_t i = 0; i < k; ++i) {
          c[i] = perms[a][perms[b][i]];
        }
        g.table[a * n + b] = static_cast<Element>(
            std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return g;
  }

  // The partial group on sqrt*sqrt whose products are those of `g` on
  // sqrt x sqrt and undefined elsewhere.
  inline PartialGroup restrict_group(CayleyGroup const&       g,
                                     std::span<Element const> sqrt) {
    if (std::find(sqrt.begin(), sqrt.end(), g.identity) == sqrt.end()) {
      throw Error(ErrorKind::invalid_argument, "sqrt must contain the identity");
    }
    std::set<Element> carrier;
    for (auto a : sqrt) {
      if (a >= g.size()) {
        throw Error(ErrorKind::invalid_argument, "sqrt element outside the group");
      }
      for (auto b : sqrt) {
        carrier.insert(g.product(a, b));
      }
    }
    std::vector<Element> elems(carrier.begin(), carrier.end());
    std::map<Element, Element> index;
    std::vector<std::string>   names;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      index[elems[i]] = static_cast<Element>(i);
      names.push_back(g.names[elems[i]]);
    }
    std::size_t const    n = elems.size();
    std::vector<Element> table(n * n, undefined);
    std::vector<Element> root;
    for (auto a : sqrt) {
      root.push_back(index.at(a));
      for (auto b : sqrt) {
        table[index.at(a) * n + index.at(b)] = index.at(g.product(a, b));
      }
    }
    return PartialGroup(std::move(names), index.at(g.identity), std::move(table), std::move(root));
  }

  inline PartialGroup restrict_group(CayleyGroup const&             g,
                                     std::initializer_list<Element> sqrt) {
    return restrict_group(g, std::span<Element const>(sqrt.begin(), sqrt.size()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutations and embeddings
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_degree = 10;

  // A permutation of {0, ..., k-1} in one-line notation.
  class Permutation {
   public:
    Permutation() = default;

    static Permutation identity(std::size_t k) {
      Permutation p;
      p._images.resize(k);
      std::iota(p._images.begin(), p._images.end(), std::uint8_t(0));
      return p;
    }

    static Permutation from_images(std::vector<std::uint8_t> images) {
      std::vector<bool> seen(images.size(), false);
      for (auto i : images) {
        if (i >= images.size() || seen[i]) {
          throw Error(ErrorKind::invalid_argument, "not a permutation");
        }
        seen[i] = true;
      }
      Permutation p;
      p._images = std::move(images);
      return p;
    }

    std::size_t degree() const noexcept {
      return _images.size();
    }

    std::uint8_t operator[](std::size_t i) const noexcept {
      return _images[i];
    }

    std::vector<std::uint8_t> const& images() const noexcept {
      return _images;
    }

    // (p * q)(i) = p(q(i))
    Permutation operator*(Permutation const& q) const {
      Permutation r;
      r._images.resize(degree());
      for (std::size_t i = 0; i < degree(); ++i) {
        r._images[i] = _images[q._images[i]];
      }
      return r;
    }

    Permutation inverse() const {
      Permutation r;
      r._images.resize(degree());
      for (std::size_t i = 0; i < degree(); ++i) {
        r._images[_images[i]] = static_cast<std::uint8_t>(i);
      }
      return r;
    }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < degree(); ++i) {
        if (_images[i] != i) {
          return false;
        }
      }
      return true;
    }

    // Cycle lengths, longest first.
    std::vector<std::size_t> cycle_type() const {
      std::vector<bool>        seen(degree(), false);
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = _images[j]) {
          seen[j] = true;
          ++len;
        }
        out.push_back(len);
      }
      std::sort(out.rbegin(), out.rend());
      return out;
    }

    // The representative of this permutation's conjugacy class whose cycles
    // are runs of consecutive points, longest first.
    Permutation canonical_conjugate() const {
      Permutation r;
      r._images.resize(degree());
      std::size_t start = 0;
      for (auto len : cycle_type()) {
        for (std::size_t i = 0; i < len; ++i) {
          r._images[start + i] = static_cast<std::uint8_t>(start + (i + 1) % len);
        }
        start += len;
      }
      return r;
    }

    auto operator<=>(Permutation const&) const = default;

   private:
    std::vector<std::uint8_t> _images;
  };

  struct Embedding {
    std::size_t              degree = 0;
    std::vector<Permutation> images;  // carrier element -> permutation
  };

  struct EmbeddingCheck {
    bool                 ok = true;
    std::string          failure;  // "injectivity", "identity" or "product"
    std::vector<Element> witnesses;
  };

  // Injectivity, identity to identity, and every defined product respected.
  inline EmbeddingCheck check_embedding(PartialGroup const& pg, Embedding const& phi) {
    EmbeddingCheck r;
    auto fail = [&](char const* what, std::vector<Element> w) {
      r.ok        = false;
      r.failure   = what;
      r.witnesses = std::move(w);
      return r;
    };
    std::size_t const n = pg.size();
    if (phi.images.size() != n) {
      return fail("totality", {});
    }
    for (auto const& p : phi.images) {
      if (p.degree() != phi.degree) {
        return fail("degree", {});
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (phi.images[a] == phi.images[b]) {
          return fail("injectivity", {a, b});
        }
      }
    }
    if (!phi.images[pg.identity()].is_identity()) {
      return fail("identity", {pg.identity()});
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (pg.defined(a, b)
            && phi.images[a] * phi.images[b] != phi.images[pg.product(a, b)]) {
          return fail("product", {a, b});
        }
      }
    }
    return r;
  }

  enum class EmbedStatus { found, not_found, resource_exhausted };

  constexpr std::string_view to_string(EmbedStatus s) noexcept {
    switch (s) {
      case EmbedStatus::found: return "found";
      case EmbedStatus::not_found: return "not_found";
      case EmbedStatus::resource_exhausted: return "resource_exhausted";
    }
    return "?";
  }

  struct EmbedOutcome {
    EmbedStatus              status = EmbedStatus::not_found;
    std::optional<Embedding> embedding;
    std::size_t              bound = 0;
    std::uint64_t            nodes = 0;
  };

  namespace detail {
    class EmbeddingSearch {
     public:
      EmbeddingSearch(PartialGroup const& pg, std::size_t k, std::uint64_t budget)
          : _pg(pg), _k(k), _budget(budget), _phi(pg.size()) {
        std::size_t const n = pg.size();
        std::vector<std::size_t> degree(n, 0);
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            if (pg.defined(a, b)) {
              _triples.push_back({a, b, pg.product(a, b)});
              ++degree[a];
              ++degree[b];
            }
          }
        }
        _order.resize(n);
        std::iota(_order.begin(), _order.end(), Element(0));
        std::stable_sort(_order.begin(), _order.end(), [&](Element a, Element b) {
          return degree[a] > degree[b];
        });
        auto p = Permutation::identity(k);
        std::vector<std::uint8_t> img = p.images();
        do {
          _perms.push_back(Permutation::from_images(img));
        } while (std::next_permutation(img.begin(), img.end()));
      }

      std::optional<Embedding> run() {
        _phi[_pg.identity()] = Permutation::identity(_k);
        if (!propagate() || !search()) {
          return std::nullopt;
        }
        Embedding e{_k, {}};
        for (auto const& p : _phi) {
          e.images.push_back(*p);
        }
        return e;
      }

      std::uint64_t nodes() const noexcept {
        return _nodes;
      }

      struct Exhausted {};

     private:
      using Assignment = std::vector<std::optional<Permutation>>;

      bool set(Element a, Permutation const& p, bool& changed) {
        if (_phi[a]) {
          return *_phi[a] == p;
        }
        for (auto const& q : _phi) {
          if (q && *q == p) {
            return false;
          }
        }
        _phi[a] = p;
        changed = true;
        return true;
      }

      // Two known values of a*b = c determine the third.
      bool propagate() {
        bool changed = true;
        while (changed) {
          changed = false;
          for (auto const& [a, b, c] : _triples) {
            auto const& pa = _phi[a];
            auto const& pb = _phi[b];
            auto const& pc = _phi[c];
            if (pa && pb) {
              if (!set(c, *pa * *pb, changed)) {
                return false;
              }
            } else if (pa && pc) {
              if (!set(b, pa->inverse() * *pc, changed)) {
                return false;
              }
            } else if (pb && pc) {
              if (!set(a, *pc * pb->inverse(), changed)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool only_identities_assigned() const {
        for (auto const& p : _phi) {
          if (p && !p->is_identity()) {
            return false;
          }
        }
        return true;
      }

      bool search() {
        auto next = std::find_if(_order.begin(), _order.end(),
                                 [&](Element a) { return !_phi[a]; });
        if (next == _order.end()) {
          return true;
        }
        // conjugating an embedding gives an embedding, so the first free
        // choice can be a class representative
        bool const canonical_only = only_identities_assigned();
        Assignment const saved    = _phi;
        for (auto const& p : _perms) {
          if (canonical_only && p != p.canonical_conjugate()) {
            continue;
          }
          if (++_nodes > _budget) {
            throw Exhausted{};
          }
          bool changed = false;
          if (set(*next, p, changed) && propagate() && search()) {
            return true;
          }
          _phi = saved;
        }
        return false;
      }

      struct Triple {
        Element a, b, c;
      };

      PartialGroup const&      _pg;
      std::size_t              _k;
      std::uint64_t            _budget;
      std::uint64_t            _nodes = 0;
      Assignment               _phi;
      std::vector<Triple>      _triples;
      std::vector<Element>     _order;
      std::vector<Permutation> _perms;
    };
  }  // namespace detail

  // Searches permutation degrees 1..max_deg for an embedding.
  inline EmbedOutcome embed_search(PartialGroup const& pg,
                                   std::size_t         max_deg,
                                   std::uint64_t       node_limit = 10'000'000) {
    if (max_deg < 1 || max_deg > max_degree) {
      throw Error(ErrorKind::invalid_argument,
                  "max degree must be in 1.." + std::to_string(max_degree));
    }
    EmbedOutcome out;
    for (std::size_t k = 1; k <= max_deg; ++k) {
      detail::EmbeddingSearch s(pg, k, node_limit - out.nodes);
      out.bound = k;
      try {
        auto e = s.run();
        out.nodes += s.nodes();
        if (e) {
          if (!check_embedding(pg, *e).ok) {
            throw Error(ErrorKind::internal, "embedding search produced an invalid map");
          }
          out.status    = EmbedStatus::found;
          out.embedding = std::move(e);
          return out;
        }
      } catch (detail::EmbeddingSearch::Exhausted const&) {
        out.nodes += s.nodes();
        out.status = EmbedStatus::resource_exhausted;
        return out;
      }
    }
    out.status = EmbedStatus::not_found;
    return out;
  }

}  // namespace relrep

#endif  // RELREP_PARTIAL_GROUP_HPP_
