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

// Bounded search for representations over small base sets.
//
// The unknowns are the bits v[a][x][y] = "(x, y) is in h(a)". The search is a
// DPLL-style backtracking over these bits with dedicated propagators for each
// symbol of the signature:
//
//   compose     h(a) h(b) <= h(ab) pointwise, and every pair of h(ab) needs a
//               witness z; the witness existential is propagated when one
//               candidate z remains and fails when none remain
//   meet/join   pointwise and/or
//   complement  pointwise negation (universal) or exclusive membership within
//               the union of all images (relative)
//   order       containment when a <= b, a separating pair when a !<= b
//   constants   e, 0 fixed at the root; top contains every image
//   faithful    a separating pair for every a != b (implied by order if present)
//
// Base points are interchangeable; when symmetry breaking is on, a failed
// decision L is also refuted for every transposition of base points that
// fixes the current partial assignment.
//
// Failure at base size k means no representation exists on k points. Nothing
// is claimed about larger bases.

#ifndef RELREP_REPSEARCH_HPP_
#define RELREP_REPSEARCH_HPP_

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "relation.hpp"
#include "representation.hpp"
#include "signature.hpp"

namespace relrep {

  struct SearchConfig {
    std::size_t   max_base          = 4;
    Semantics     semantics         = Semantics::universal;
    bool          require_top_equiv = false;
    std::uint64_t node_limit        = 50'000'000;
    bool          symmetry_breaking = true;
  };

  enum class SearchStatus { found, not_found, resource_exhausted };

  constexpr std::string_view to_string(SearchStatus s) noexcept {
    switch (s) {
      case SearchStatus::found: return "found";
      case SearchStatus::not_found: return "not_found";
      case SearchStatus::resource_exhausted: return "resource_exhausted";
    }
    return "?";
  }

  struct BaseStats {
    std::size_t   base_size;
    std::uint64_t nodes;
    SearchStatus  status;
  };

  struct SearchStats {
    std::uint64_t          nodes = 0;
    std::vector<BaseStats> per_base;
    double                 elapsed_ms = 0;
  };

  struct SearchOutcome {
    SearchStatus                  status;
    std::optional<Representation> representation;
    // bases 1..bound were exhausted (not_found) or the base that was being
    // searched when the limit hit (resource_exhausted)
    std::size_t bound = 0;
    SearchStats stats;
  };

  namespace detail {

    class RepresentationSearch {
      using Var = std::uint32_t;

     public:
      RepresentationSearch(std::shared_ptr<FiniteAlgebra const> alg,
                           Signature                            sig,
                           SearchConfig const&                  cfg,
                           std::size_t                          base,
                           std::uint64_t                        node_budget)
          : _algp(std::move(alg)),
            _alg(*_algp),
            _sig(sig),
            _cfg(cfg),
            _m(base),
            _mm(base * base),
            _n(_alg.size()),
            _budget(node_budget),
            _val(_n * _mm, -1) {
        build_constraints();
      }

      // Returns found / not_found / resource_exhausted for this base size.
      SearchStatus run() {
        if (!root_assignments() || !propagate()) {
          return SearchStatus::not_found;
        }
        try {
          return search() ? SearchStatus::found : SearchStatus::not_found;
        } catch (Exhausted const&) {
          return SearchStatus::resource_exhausted;
        }
      }

      std::uint64_t nodes() const noexcept {
        return _nodes;
      }

      Representation result() const {
        std::vector<Relation> images;
        for (Element a = 0; a < _n; ++a) {
          Relation r(_m);
          for (Point x = 0; x < _m; ++x) {
            for (Point y = 0; y < _m; ++y) {
              if (_val[var(a, x, y)] == 1) {
                r.insert(x, y);
              }
            }
          }
          images.push_back(r);
        }
        return Representation(_algp, _m, std::move(images), _sig, _cfg.semantics);
      }

     private:
      struct Exhausted {};

      Var var(Element a, std::size_t x, std::size_t y) const noexcept {
        return static_cast<Var>(a * _mm + x * _m + y);
      }

      std::int8_t val(Element a, std::size_t x, std::size_t y) const noexcept {
        return _val[var(a, x, y)];
      }

      ////////////////////////////////////////////////////////////////////
      // Constraint tables
      ////////////////////////////////////////////////////////////////////

      void build_constraints() {
        _products_of.assign(_n, {});
        for (Element a = 0; a < _n; ++a) {
          for (Element b = 0; b < _n; ++b) {
            _products_of[_alg.compose(a, b)].emplace_back(a, b);
          }
        }
        _lattice_of.assign(_n, {});
        auto add_lattice = [&](Element a, Element b, Element c, bool is_meet) {
          auto const id = static_cast<std::uint32_t>(_lattice.size());
          _lattice.push_back({a, b, c, is_meet});
          _lattice_of[a].push_back(id);
          if (b != a) {
            _lattice_of[b].push_back(id);
          }
          if (c != a && c != b) {
            _lattice_of[c].push_back(id);
          }
        };
        for (Element a = 0; a < _n; ++a) {
          for (Element b = a; b < _n; ++b) {
            if (_sig.contains(Symbol::meet)) {
              add_lattice(a, b, _alg.meet(a, b), true);
            }
            if (_sig.contains(Symbol::join)) {
              add_lattice(a, b, _alg.join(a, b), false);
            }
          }
        }
        _comp_of.assign(_n, {});
        if (_sig.contains(Symbol::complement)) {
          for (Element a = 0; a < _n; ++a) {
            auto const id = static_cast<std::uint32_t>(_comp.size());
            _comp.emplace_back(a, _alg.complement(a));
            _comp_of[a].push_back(id);
            if (_alg.complement(a) != a) {
              _comp_of[_alg.complement(a)].push_back(id);
            }
          }
        }
        _le_of.assign(_n, {});
        _nle_of.assign(_n, {});
        _diff_of.assign(_n, {});
        auto add_le = [&](Element a, Element b) {
          auto const id = static_cast<std::uint32_t>(_le.size());
          _le.emplace_back(a, b);
          _le_of[a].push_back(id);
          _le_of[b].push_back(id);
        };
        bool const order = _sig.contains(Symbol::order);
        if (order) {
          for (Element a = 0; a < _n; ++a) {
            for (Element b = 0; b < _n; ++b) {
              if (a == b) {
                continue;
              }
              if (_alg.order(a, b)) {
                add_le(a, b);
              } else {
                auto const id = static_cast<std::uint32_t>(_nle.size());
                _nle.emplace_back(a, b);
                _nle_of[a].push_back(id);
                _nle_of[b].push_back(id);
              }
            }
          }
        } else {
          for (Element a = 0; a < _n; ++a) {
            for (Element b = a + 1; b < _n; ++b) {
              auto const id = static_cast<std::uint32_t>(_diff.size());
              _diff.emplace_back(a, b);
              _diff_of[a].push_back(id);
              _diff_of[b].push_back(id);
            }
          }
        }
        if (_sig.contains(Symbol::const_top)) {
          Element const t = *_alg.top();
          for (Element a = 0; a < _n; ++a) {
            if (a != t && !(order && _alg.order(a, t))) {
              add_le(a, t);
            }
          }
        }
        if (_cfg.require_top_equiv) {
          if (!_alg.top()) {
            throw Error(ErrorKind::invalid_argument,
                        "top equivalence requested but the algebra has no top");
          }
          _equiv_top = _alg.top();
        }

        // static decision order: constants first, then by how often an
        // element is the result of an operation
        std::vector<std::size_t> degree(_n, 0);
        for (Element c = 0; c < _n; ++c) {
          degree[c] += _products_of[c].size();
        }
        for (auto const& t : _lattice) {
          ++degree[t.c];
        }
        std::vector<Element> order_el(_n);
        std::iota(order_el.begin(), order_el.end(), 0);
        auto is_const = [&](Element a) {
          return (_sig.contains(Symbol::const_e) && _alg.e() == a)
                 || (_sig.contains(Symbol::const_zero) && _alg.zero() == a)
                 || (_sig.contains(Symbol::const_top) && _alg.top() == a)
                 || _equiv_top == a;
        };
        std::stable_sort(order_el.begin(), order_el.end(), [&](Element a, Element b) {
          if (is_const(a) != is_const(b)) {
            return is_const(a);
          }
          return degree[a] > degree[b];
        });
        _elem_order = order_el;
        for (auto a : order_el) {
          for (std::size_t p = 0; p < _mm; ++p) {
            _static_order.push_back(static_cast<Var>(a * _mm + p));
          }
        }
      }

      ////////////////////////////////////////////////////////////////////
      // Assignment and propagation
      ////////////////////////////////////////////////////////////////////

      bool assign(Var v, std::int8_t value) {
        if (_val[v] == value) {
          return true;
        }
        if (_val[v] != -1) {
          return false;
        }
        _val[v] = value;
        _trail.push_back(v);
        return true;
      }

      bool assign(Element a, std::size_t x, std::size_t y, std::int8_t value) {
        return assign(var(a, x, y), value);
      }

      void undo_to(std::size_t mark) {
        while (_trail.size() > mark) {
          _val[_trail.back()] = -1;
          _trail.pop_back();
        }
        _qhead = _trail.size();
      }

      bool root_assignments() {
        for (std::size_t x = 0; x < _m; ++x) {
          for (std::size_t y = 0; y < _m; ++y) {
            if (_sig.contains(Symbol::const_e)
                && !assign(*_alg.e(), x, y, x == y ? 1 : 0)) {
              return false;
            }
            if (_sig.contains(Symbol::const_zero) && !assign(*_alg.zero(), x, y, 0)) {
              return false;
            }
          }
          if (_equiv_top && !assign(*_equiv_top, x, x, 1)) {
            return false;
          }
        }
        return true;
      }

      // Witness existential for (x, y) in h(ab): true unless refuted.
      bool check_witness(Element a, Element b, std::size_t x, std::size_t y) {
        std::size_t count = 0;
        std::size_t last  = 0;
        for (std::size_t z = 0; z < _m; ++z) {
          auto const l = val(a, x, z);
          auto const r = val(b, z, y);
          if (l == 1 && r == 1) {
            return true;
          }
          if (l != 0 && r != 0) {
            ++count;
            last = z;
          }
        }
        if (count == 0) {
          return false;
        }
        if (count == 1) {
          return assign(a, x, last, 1) && assign(b, last, y, 1);
        }
        return true;
      }

      // a !<= b: some pair in h(a) but not in h(b)
      bool check_separation(Element a, Element b) {
        std::size_t count = 0;
        std::size_t last  = 0;
        for (std::size_t p = 0; p < _mm; ++p) {
          auto const va = _val[a * _mm + p];
          auto const vb = _val[b * _mm + p];
          if (va == 1 && vb == 0) {
            return true;
          }
          if (va != 0 && vb != 1) {
            ++count;
            last = p;
          }
        }
        if (count == 0) {
          return false;
        }
        if (count == 1) {
          return assign(static_cast<Var>(a * _mm + last), 1)
                 && assign(static_cast<Var>(b * _mm + last), 0);
        }
        return true;
      }

      // a != b: some pair where h(a) and h(b) differ
      bool check_difference(Element a, Element b) {
        std::size_t count = 0;
        std::size_t last  = 0;
        for (std::size_t p = 0; p < _mm; ++p) {
          auto const va = _val[a * _mm + p];
          auto const vb = _val[b * _mm + p];
          if (va != -1 && vb != -1) {
            if (va != vb) {
              return true;
            }
            continue;
          }
          ++count;
          last = p;
        }
        if (count == 0) {
          return false;
        }
        if (count == 1) {
          auto const va = _val[a * _mm + last];
          auto const vb = _val[b * _mm + last];
          if (va != -1) {
            return assign(static_cast<Var>(b * _mm + last), static_cast<std::int8_t>(1 - va));
          }
          if (vb != -1) {
            return assign(static_cast<Var>(a * _mm + last), static_cast<std::int8_t>(1 - vb));
          }
        }
        return true;
      }

      bool covered(std::size_t p) const {
        for (Element c = 0; c < _n; ++c) {
          if (_val[c * _mm + p] == 1) {
            return true;
          }
        }
        return false;
      }

      bool propagate_compose(Element a, std::size_t x, std::size_t y, std::int8_t v) {
        // a as left factor: pair (x, z=y)
        {
          std::size_t const z = y;
          for (Element b = 0; b < _n; ++b) {
            Element const c = _alg.compose(a, b);
            for (std::size_t w = 0; w < _m; ++w) {
              if (v == 1) {
                if (val(b, z, w) == 1 && !assign(c, x, w, 1)) {
                  return false;
                }
                if (val(c, x, w) == 0 && !assign(b, z, w, 0)) {
                  return false;
                }
              } else if (val(c, x, w) == 1 && !check_witness(a, b, x, w)) {
                return false;
              }
            }
          }
        }
        // a as right factor: pair (z=x, y)
        {
          std::size_t const z = x;
          for (Element b = 0; b < _n; ++b) {
            Element const c = _alg.compose(b, a);
            for (std::size_t w = 0; w < _m; ++w) {
              if (v == 1) {
                if (val(b, w, z) == 1 && !assign(c, w, y, 1)) {
                  return false;
                }
                if (val(c, w, y) == 0 && !assign(b, w, z, 0)) {
                  return false;
                }
              } else if (val(c, w, y) == 1 && !check_witness(b, a, w, y)) {
                return false;
              }
            }
          }
        }
        // a as a product
        for (auto [p, q] : _products_of[a]) {
          if (v == 1) {
            if (!check_witness(p, q, x, y)) {
              return false;
            }
          } else {
            for (std::size_t z = 0; z < _m; ++z) {
              if (val(p, x, z) == 1 && !assign(q, z, y, 0)) {
                return false;
              }
              if (val(q, z, y) == 1 && !assign(p, x, z, 0)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool propagate_lattice(Element a, std::size_t p) {
        for (auto id : _lattice_of[a]) {
          auto const& t  = _lattice[id];
          Var const   va = static_cast<Var>(t.a * _mm + p);
          Var const   vb = static_cast<Var>(t.b * _mm + p);
          Var const   vc = static_cast<Var>(t.c * _mm + p);
          // join is meet with 0 and 1 swapped
          std::int8_t const one  = t.is_meet ? 1 : 0;
          std::int8_t const zero = static_cast<std::int8_t>(1 - one);
          auto const x = _val[va], y = _val[vb], z = _val[vc];
          if (x == one && y == one && !assign(vc, one)) {
            return false;
          }
          if ((x == zero || y == zero) && !assign(vc, zero)) {
            return false;
          }
          if (z == one && !(assign(va, one) && assign(vb, one))) {
            return false;
          }
          if (z == zero) {
            if (_val[va] == one && !assign(vb, zero)) {
              return false;
            }
            if (_val[vb] == one && !assign(va, zero)) {
              return false;
            }
          }
        }
        return true;
      }

      bool propagate_complement(Element a, std::size_t p, std::int8_t v) {
        bool const univ = _cfg.semantics == Semantics::universal;
        for (auto id : _comp_of[a]) {
          auto [x, nx]        = _comp[id];
          Element const other = x == a ? nx : x;
          Var const     vo    = static_cast<Var>(other * _mm + p);
          if (univ) {
            if (!assign(vo, static_cast<std::int8_t>(1 - v))) {
              return false;
            }
          } else if (v == 1) {
            if (!assign(vo, 0)) {
              return false;
            }
          } else if (covered(p)) {
            if (!assign(vo, 1)) {
              return false;
            }
          } else if (_val[vo] == 0) {
            // p lies outside every image
            for (Element c = 0; c < _n; ++c) {
              if (!assign(static_cast<Var>(c * _mm + p), 0)) {
                return false;
              }
            }
          }
        }
        if (!univ && v == 1 && !_comp.empty()) {
          for (auto [x, nx] : _comp) {
            Var const vx  = static_cast<Var>(x * _mm + p);
            Var const vnx = static_cast<Var>(nx * _mm + p);
            if (_val[vx] == 0 && !assign(vnx, 1)) {
              return false;
            }
            if (_val[vnx] == 0 && !assign(vx, 1)) {
              return false;
            }
          }
        }
        return true;
      }

      bool propagate_order(Element a, std::size_t p, std::int8_t v) {
        for (auto id : _le_of[a]) {
          auto [lo, hi] = _le[id];
          if (a == lo && v == 1 && !assign(static_cast<Var>(hi * _mm + p), 1)) {
            return false;
          }
          if (a == hi && v == 0 && !assign(static_cast<Var>(lo * _mm + p), 0)) {
            return false;
          }
        }
        for (auto id : _nle_of[a]) {
          if (!check_separation(_nle[id].first, _nle[id].second)) {
            return false;
          }
        }
        for (auto id : _diff_of[a]) {
          if (!check_difference(_diff[id].first, _diff[id].second)) {
            return false;
          }
        }
        return true;
      }

      bool propagate_top_equiv(std::size_t x, std::size_t y, std::int8_t v) {
        Element const t = *_equiv_top;
        if (!assign(t, y, x, v)) {
          return false;
        }
        for (std::size_t z = 0; z < _m; ++z) {
          if (v == 1) {
            // (x, y) and (y, z) give (x, z); (z, x) and (x, y) give (z, y)
            if (val(t, y, z) == 1 && !assign(t, x, z, 1)) {
              return false;
            }
            if (val(t, x, z) == 0 && !assign(t, y, z, 0)) {
              return false;
            }
            if (val(t, z, x) == 1 && !assign(t, z, y, 1)) {
              return false;
            }
            if (val(t, z, y) == 0 && !assign(t, z, x, 0)) {
              return false;
            }
          } else {
            if (val(t, x, z) == 1 && !assign(t, z, y, 0)) {
              return false;
            }
            if (val(t, z, y) == 1 && !assign(t, x, z, 0)) {
              return false;
            }
          }
        }
        return true;
      }

      bool propagate() {
        while (_qhead < _trail.size()) {
          Var const         v     = _trail[_qhead++];
          std::int8_t const value = _val[v];
          auto const        a     = static_cast<Element>(v / _mm);
          std::size_t const p     = v % _mm;
          std::size_t const x     = p / _m;
          std::size_t const y     = p % _m;
          if (!propagate_compose(a, x, y, value) || !propagate_lattice(a, p)
              || !propagate_complement(a, p, value)
              || !propagate_order(a, p, value)
              || (_equiv_top == a && !propagate_top_equiv(x, y, value))) {
            _qhead = _trail.size();
            return false;
          }
        }
        return true;
      }

      ////////////////////////////////////////////////////////////////////
      // Decisions
      ////////////////////////////////////////////////////////////////////

      // Prefer a literal that supplies a witness for an unsupported pair.
      std::optional<Var> witness_decision() const {
        for (auto c : _elem_order) {
          for (std::size_t x = 0; x < _m; ++x) {
            for (std::size_t y = 0; y < _m; ++y) {
              if (val(c, x, y) != 1) {
                continue;
              }
              for (auto [p, q] : _products_of[c]) {
                std::optional<Var> pick;
                bool               satisfied = false;
                for (std::size_t z = 0; z < _m; ++z) {
                  auto const l = val(p, x, z);
                  auto const r = val(q, z, y);
                  if (l == 1 && r == 1) {
                    satisfied = true;
                    break;
                  }
                  if (!pick && l != 0 && r != 0) {
                    pick = l == -1 ? var(p, x, z) : var(q, z, y);
                  }
                }
                if (!satisfied && pick) {
                  return pick;
                }
              }
            }
          }
        }
        return std::nullopt;
      }

      std::optional<Var> static_decision() {
        while (_static_pos < _static_order.size()
               && _val[_static_order[_static_pos]] != -1) {
          ++_static_pos;
        }
        if (_static_pos == _static_order.size()) {
          return std::nullopt;
        }
        return _static_order[_static_pos];
      }

      Var permuted(Var v, std::size_t u, std::size_t w) const {
        auto const  a  = v / _mm;
        std::size_t x  = (v % _mm) / _m;
        std::size_t y  = v % _m;
        auto        sw = [&](std::size_t p) { return p == u ? w : p == w ? u : p; };
        return static_cast<Var>(a * _mm + sw(x) * _m + sw(y));
      }

      // Transpositions (u w) that leave the current assignment unchanged and
      // move v.
      std::vector<Var> symmetric_images(Var v) const {
        std::vector<Var> out;
        for (std::size_t u = 0; u < _m; ++u) {
          for (std::size_t w = u + 1; w < _m; ++w) {
            Var const image = permuted(v, u, w);
            if (image == v) {
              continue;
            }
            bool fixed = true;
            for (auto t : _trail) {
              if (_val[permuted(t, u, w)] != _val[t]) {
                fixed = false;
                break;
              }
            }
            if (fixed) {
              out.push_back(image);
            }
          }
        }
        return out;
      }

      bool search() {
        std::optional<Var> decision;
        std::int8_t        first = 0;
        if ((decision = witness_decision())) {
          first = 1;
        } else if ((decision = static_decision())) {
          first = 0;
        } else {
          return true;
        }
        std::size_t const saved_static = _static_pos;
        std::vector<Var>  images;
        if (_cfg.symmetry_breaking) {
          images = symmetric_images(*decision);
        }
        std::size_t const mark = _trail.size();
        for (int branch = 0; branch < 2; ++branch) {
          if (++_nodes > _budget) {
            throw Exhausted{};
          }
          auto const value = static_cast<std::int8_t>(branch == 0 ? first : 1 - first);
          bool       ok    = assign(*decision, value);
          if (branch == 1) {
            for (auto im : images) {
              ok = ok && assign(im, value);
            }
          }
          if (ok && propagate() && search()) {
            return true;
          }
          undo_to(mark);
          _static_pos = saved_static;
        }
        return false;
      }

      struct LatticeTriple {
        Element a, b, c;
        bool    is_meet;
      };

      std::shared_ptr<FiniteAlgebra const> _algp;
      FiniteAlgebra const&                 _alg;
      Signature                            _sig;
      SearchConfig                         _cfg;
      std::size_t                          _m;
      std::size_t                          _mm;
      std::size_t                          _n;
      std::uint64_t                        _budget;
      std::uint64_t                        _nodes = 0;

      std::vector<std::int8_t> _val;
      std::vector<Var>         _trail;
      std::size_t              _qhead      = 0;
      std::size_t              _static_pos = 0;
      std::vector<Var>         _static_order;
      std::vector<Element>     _elem_order;

      std::vector<std::vector<std::pair<Element, Element>>> _products_of;
      std::vector<LatticeTriple>                            _lattice;
      std::vector<std::vector<std::uint32_t>>               _lattice_of;
      std::vector<std::pair<Element, Element>>              _comp;
      std::vector<std::vector<std::uint32_t>>               _comp_of;
      std::vector<std::pair<Element, Element>>              _le;
      std::vector<std::vector<std::uint32_t>>               _le_of;
      std::vector<std::pair<Element, Element>>              _nle;
      std::vector<std::vector<std::uint32_t>>               _nle_of;
      std::vector<std::pair<Element, Element>>              _diff;
      std::vector<std::vector<std::uint32_t>>               _diff_of;
      std::optional<Element>                                _equiv_top;
    };

    inline void check_search_config(SearchConfig const& cfg) {
      if (cfg.max_base < 1 || cfg.max_base > max_base_size) {
        throw Error(ErrorKind::invalid_argument, "max_base must be in 1..32");
      }
      if (cfg.node_limit < 1) {
        throw Error(ErrorKind::invalid_argument, "node_limit must be positive");
      }
    }

    inline void require_valid(FiniteAlgebra const& alg, Signature const& sig) {
      auto const v = validate_algebra(alg, sig);
      if (!v.empty()) {
        throw Error(ErrorKind::precondition_failed,
                    "algebra fails " + std::string(to_string(v.front().law)));
      }
    }

    inline VerifyOptions search_verify_options(SearchConfig const& cfg) {
      VerifyOptions vo;
      vo.require_top_equiv = cfg.require_top_equiv;
      return vo;
    }
  }  // namespace detail

  // Searches base sizes 1..cfg.max_base in order and returns the first
  // representation found.
  inline SearchOutcome search_representation(FiniteAlgebra const& alg,
                                             Signature const&     sig,
                                             SearchConfig const&  cfg = {}) {
    detail::check_search_config(cfg);
    detail::require_valid(alg, sig);
    auto const    start = std::chrono::steady_clock::now();
    auto const    algp  = std::make_shared<FiniteAlgebra const>(alg);
    SearchOutcome out{SearchStatus::not_found, std::nullopt, 0, {}};
    auto finish = [&] {
      out.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
      return out;
    };
    for (std::size_t m = 1; m <= cfg.max_base; ++m) {
      detail::RepresentationSearch s(algp, sig, cfg, m, cfg.node_limit - out.stats.nodes);
      auto const status = s.run();
      out.stats.nodes += s.nodes();
      out.stats.per_base.push_back({m, s.nodes(), status});
      out.bound = m;
      if (status == SearchStatus::found) {
        auto rep = s.result();
        if (!verify_representation(rep, detail::search_verify_options(cfg)).ok()) {
          throw Error(ErrorKind::internal,
                      "search produced a representation that fails verification");
        }
        out.status         = SearchStatus::found;
        out.representation = std::move(rep);
        return finish();
      }
      if (status == SearchStatus::resource_exhausted) {
        out.status = SearchStatus::resource_exhausted;
        return finish();
      }
    }
    return finish();
  }

  // Search at exactly one base size.
  inline SearchOutcome search_representation_at(FiniteAlgebra const& alg,
                                                Signature const&     sig,
                                                SearchConfig const&  cfg,
                                                std::size_t          base) {
    detail::check_search_config(cfg);
    detail::require_valid(alg, sig);
    if (base < 1 || base > max_base_size) {
      throw Error(ErrorKind::invalid_argument, "base size out of range");
    }
    auto const    algp = std::make_shared<FiniteAlgebra const>(alg);
    SearchOutcome out{SearchStatus::not_found, std::nullopt, base, {}};
    detail::RepresentationSearch s(algp, sig, cfg, base, cfg.node_limit);
    out.status      = s.run();
    out.stats.nodes = s.nodes();
    out.stats.per_base.push_back({base, s.nodes(), out.status});
    if (out.status == SearchStatus::found) {
      out.representation = s.result();
      if (!verify_representation(*out.representation,
                                 detail::search_verify_options(cfg))
               .ok()) {
        throw Error(ErrorKind::internal,
                    "search produced a representation that fails verification");
      }
    }
    return out;
  }

  // Every map from elements to relations on `base_size` points that passes
  // verification. Only for n <= 4 and base_size <= 2.
  inline std::vector<Representation> exhaustive_oracle(FiniteAlgebra const& alg,
                                                       Signature const&     sig,
                                                       std::size_t          base_size,
                                                       Semantics sem = Semantics::universal,
                                                       bool require_top_equiv = false) {
    if (alg.size() > 4 || base_size > 2 || base_size < 1) {
      throw Error(ErrorKind::cap_exceeded,
                  "exhaustive oracle is limited to n <= 4 and base size <= 2");
    }
    auto const          algp  = std::make_shared<FiniteAlgebra const>(alg);
    std::size_t const   n     = alg.size();
    std::uint64_t const per   = std::uint64_t(1) << (base_size * base_size);
    std::uint64_t       total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= per;
    }
    VerifyOptions vo;
    vo.require_top_equiv = require_top_equiv;
    std::vector<Representation> out;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Relation> images;
      std::uint64_t         c = code;
      for (std::size_t i = 0; i < n; ++i) {
        images.push_back(Relation::from_code(base_size, c % per));
        c /= per;
      }
      Representation rep(algp, base_size, std::move(images), sig, sem);
      if (verify_representation(rep, vo).ok()) {
        out.push_back(std::move(rep));
      }
    }
    return out;
  }

}  // namespace relrep

#endif  // RELREP_REPSEARCH_HPP_
