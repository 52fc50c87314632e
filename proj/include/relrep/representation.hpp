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

// Representations of finite algebras by binary relations: checking them,
// and the transformations that turn a representation into a better behaved
// one (quotient by where e acts universally, symmetric interior of top, and
// the combined pipeline making the injective-function elements injective).

#ifndef RELREP_REPRESENTATION_HPP_
#define RELREP_REPRESENTATION_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "concrete.hpp"
#include "error.hpp"
#include "relation.hpp"
#include "signature.hpp"

namespace relrep {

  class Representation {
   public:
    Representation(std::shared_ptr<FiniteAlgebra const> alg,
                   std::size_t                          base_size,
                   std::vector<Relation>                images,
                   Signature                            claimed,
                   Semantics                            sem)
        : _alg(std::move(alg)),
          _m(base_size),
          _images(std::move(images)),
          _claimed(claimed),
          _sem(sem) {
      if (!_alg) {
        throw Error(ErrorKind::invalid_argument, "representation without algebra");
      }
      if (_images.size() != _alg->size()) {
        throw Error(ErrorKind::invalid_argument,
                    "representation must map every element (got "
                        + std::to_string(_images.size()) + " of "
                        + std::to_string(_alg->size()) + ")");
      }
      for (auto const& r : _images) {
        if (r.base_size() != _m) {
          throw Error(ErrorKind::base_mismatch,
                      "image over base " + std::to_string(r.base_size())
                          + ", representation base " + std::to_string(_m));
        }
      }
    }

    FiniteAlgebra const& algebra() const noexcept {
      return *_alg;
    }

    std::shared_ptr<FiniteAlgebra const> const& algebra_ptr() const noexcept {
      return _alg;
    }

    std::size_t base_size() const noexcept {
      return _m;
    }

    Relation const& operator()(Element a) const {
      return _images.at(a);
    }

    std::vector<Relation> const& images() const noexcept {
      return _images;
    }

    Signature claimed_signature() const noexcept {
      return _claimed;
    }

    Semantics semantics() const noexcept {
      return _sem;
    }

    // Same algebra, signature and semantics; new images.
    Representation with_images(std::size_t base_size,
                               std::vector<Relation> images) const {
      return Representation(_alg, base_size, std::move(images), _claimed, _sem);
    }

    Representation with_signature(Signature sig) const {
      return Representation(_alg, _m, _images, sig, _sem);
    }

    Representation with_semantics(Semantics sem) const {
      return Representation(_alg, _m, _images, _claimed, sem);
    }

    // Union of all images: the universe of relative complementation.
    Relation union_of_images() const {
      return union_of(_m, _images);
    }

   private:
    std::shared_ptr<FiniteAlgebra const> _alg;
    std::size_t                          _m;
    std::vector<Relation>                _images;
    Signature                            _claimed;
    Semantics                            _sem;
  };

  // Each element mapped to its own relation.
  inline Representation identity_representation(ConcreteAlgebra const& c) {
    return Representation(std::make_shared<FiniteAlgebra const>(c.algebra),
                          c.base_size,
                          c.relations,
                          c.signature,
                          c.semantics);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  struct Witness {
    std::vector<Element> elements;
    std::vector<Point>   points;

    bool operator==(Witness const&) const = default;
  };

  struct SymbolCheck {
    Symbol                 symbol;
    bool                   ok = true;
    std::optional<Witness> witness = std::nullopt;
  };

  struct VerifyOptions {
    bool require_top_equiv = false;
    bool check_i           = false;
    bool check_domran      = false;
  };

  struct VerificationReport {
    bool                     faithful = true;
    std::optional<Witness>   collision;
    std::vector<SymbolCheck> symbols;
    std::optional<bool>      top_is_equivalence;
    bool                     top_equivalence_required = false;
    std::optional<bool>      i_preserved;
    std::optional<Witness>   i_witness;
    std::optional<bool>      domran_preserved;
    std::optional<Witness>   domran_witness;

    std::optional<bool> preserves(Symbol s) const {
      for (auto const& c : symbols) {
        if (c.symbol == s) {
          return c.ok;
        }
      }
      return std::nullopt;
    }

    bool ok() const {
      if (!faithful) {
        return false;
      }
      for (auto const& c : symbols) {
        if (!c.ok) {
          return false;
        }
      }
      if (top_equivalence_required && top_is_equivalence != true) {
        return false;
      }
      return i_preserved != false && domran_preserved != false;
    }
  };

  namespace detail {
    inline std::vector<Point> first_difference(Relation const& r,
                                               Relation const& s) {
      for (Point x = 0; x < r.base_size(); ++x) {
        auto diff = r.row(x) ^ s.row(x);
        if (diff != 0) {
          return {x, static_cast<Point>(std::countr_zero(diff))};
        }
      }
      return {};
    }

    inline std::vector<Point> first_pair_outside(Relation const& r,
                                                 Relation const& s) {
      for (Point x = 0; x < r.base_size(); ++x) {
        auto diff = r.row(x) & ~s.row(x);
        if (diff != 0) {
          return {x, static_cast<Point>(std::countr_zero(diff))};
        }
      }
      return {};
    }

    inline void fail(SymbolCheck& c, Witness w) {
      if (c.ok) {
        c.ok      = false;
        c.witness = std::move(w);
      }
    }

    inline SymbolCheck check_compose(Representation const& rep) {
      auto const&       alg = rep.algebra();
      SymbolCheck       c{Symbol::compose};
      std::size_t const n = alg.size();
      for (Element a = 0; a < n && c.ok; ++a) {
        for (Element b = 0; b < n && c.ok; ++b) {
          auto const expect = compose_rel(rep(a), rep(b));
          auto const& got   = rep(alg.compose(a, b));
          if (got != expect) {
            fail(c, {{a, b}, first_difference(got, expect)});
          }
        }
      }
      return c;
    }

    inline std::optional<std::vector<Element>> i_set(FiniteAlgebra const& alg) {
      bool const has_div
          = (alg.has_complement() && alg.e()) || alg.designated("div");
      if (!has_div) {
        return std::nullopt;
      }
      if (alg.has_meet() && alg.zero()) {
        return i_elements_via_meet(alg);
      }
      if (alg.has_order() && alg.has_complement()) {
        return i_elements_via_complement(alg);
      }
      return std::nullopt;
    }
  }  // namespace detail

  // Checks every symbol of the claimed signature against its concrete
  // meaning, plus faithfulness, and optionally the injective-function and
  // domain/range equivalence properties. Never throws on failed checks.
  inline VerificationReport verify_representation(Representation const& rep,
                                                  VerifyOptions const& opts = {}) {
    auto const&        alg = rep.algebra();
    std::size_t const  n   = alg.size();
    std::size_t const  m   = rep.base_size();
    Signature const    sig = rep.claimed_signature();
    VerificationReport r;
    r.top_equivalence_required = opts.require_top_equiv;

    {
      std::unordered_map<Relation, Element, RelationHash> seen;
      for (Element a = 0; a < n; ++a) {
        auto [it, inserted] = seen.emplace(rep(a), a);
        if (!inserted) {
          r.faithful  = false;
          r.collision = Witness{{it->second, a}, {}};
          break;
        }
      }
    }

    for (auto s : sig.symbols()) {
      if (!alg.provides(s)) {
        SymbolCheck c{s};
        detail::fail(c, {});
        r.symbols.push_back(c);
        continue;
      }
      SymbolCheck c{s};
      switch (s) {
        case Symbol::compose: c = detail::check_compose(rep); break;
        case Symbol::meet:
        case Symbol::join:
          for (Element a = 0; a < n && c.ok; ++a) {
            for (Element b = 0; b < n && c.ok; ++b) {
              auto const expect = s == Symbol::meet ? meet_rel(rep(a), rep(b))
                                                    : join_rel(rep(a), rep(b));
              auto const& got
                  = rep(s == Symbol::meet ? alg.meet(a, b) : alg.join(a, b));
              if (got != expect) {
                detail::fail(c, {{a, b}, detail::first_difference(got, expect)});
              }
            }
          }
          break;
        case Symbol::complement: {
          Relation const universe = rep.semantics() == Semantics::universal
                                        ? Relation::full(m)
                                        : rep.union_of_images();
          for (Element a = 0; a < n && c.ok; ++a) {
            auto const  expect = complement_rel(rep(a), universe);
            auto const& got    = rep(alg.complement(a));
            if (got != expect) {
              detail::fail(c, {{a}, detail::first_difference(got, expect)});
            }
          }
          break;
        }
        case Symbol::order:
          for (Element a = 0; a < n && c.ok; ++a) {
            for (Element b = 0; b < n && c.ok; ++b) {
              bool const contained = rep(a).is_subset_of(rep(b));
              if (alg.order(a, b) != contained) {
                detail::fail(
                    c,
                    {{a, b},
                     contained ? std::vector<Point>{}
                               : detail::first_pair_outside(rep(a), rep(b))});
              }
            }
          }
          break;
        case Symbol::const_e: {
          auto const id = Relation::identity(m);
          if (rep(*alg.e()) != id) {
            detail::fail(c, {{*alg.e()}, detail::first_difference(rep(*alg.e()), id)});
          }
          break;
        }
        case Symbol::const_zero:
          if (!rep(*alg.zero()).is_empty()) {
            auto const p = rep(*alg.zero()).pairs().front();
            detail::fail(c, {{*alg.zero()}, {p.first, p.second}});
          }
          break;
        case Symbol::const_top: {
          Element const t = *alg.top();
          for (Element a = 0; a < n && c.ok; ++a) {
            if (!rep(a).is_subset_of(rep(t))) {
              detail::fail(c, {{a, t}, detail::first_pair_outside(rep(a), rep(t))});
            }
          }
          break;
        }
      }
      r.symbols.push_back(c);
    }

    if (alg.top() && (sig.contains(Symbol::const_top) || opts.require_top_equiv)) {
      r.top_is_equivalence = is_equivalence(rep(*alg.top()));
    }

    if (opts.check_i) {
      if (auto is = detail::i_set(alg)) {
        r.i_preserved = true;
        for (auto a : *is) {
          if (!is_injective_partial_function(rep(a))) {
            r.i_preserved = false;
            r.i_witness   = Witness{{a}, {}};
            break;
          }
        }
      }
    }

    if (opts.check_domran && alg.top()) {
      Element const t = *alg.top();
      r.domran_preserved = true;
      for (Element a = 0; a < n && *r.domran_preserved; ++a) {
        for (Element b = a + 1; b < n; ++b) {
          bool const abstract_dom = alg.compose(a, t) == alg.compose(b, t);
          bool const concrete_dom = rep(a).domain() == rep(b).domain();
          bool const abstract_ran = alg.compose(t, a) == alg.compose(t, b);
          bool const concrete_ran = rep(a).range() == rep(b).range();
          if (abstract_dom != concrete_dom || abstract_ran != concrete_ran) {
            r.domran_preserved = false;
            r.domran_witness   = Witness{{a, b}, {}};
            break;
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Base-set manipulations
  ////////////////////////////////////////////////////////////////////////

  // Image of every relation of `a` under the point map, compared with `b`.
  // `map` must be a bijection from the base of `a` onto the base of `b`.
  inline bool isomorphic_via(Representation const&  a,
                             Representation const&  b,
                             std::span<Point const> map) {
    if (a.algebra().size() != b.algebra().size()
        || a.base_size() != b.base_size() || map.size() != a.base_size()) {
      return false;
    }
    PointSet hit = 0;
    for (auto p : map) {
      if (p >= b.base_size() || ((hit >> p) & 1u) != 0) {
        return false;
      }
      hit |= PointSet(1) << p;
    }
    for (Element e = 0; e < a.algebra().size(); ++e) {
      Relation moved(b.base_size());
      for (auto [x, y] : a(e).pairs()) {
        moved.insert(map[x], map[y]);
      }
      if (moved != b(e)) {
        return false;
      }
    }
    return true;
  }

  struct Restriction {
    Representation     rep;
    std::vector<Point> kept;  // new point i is old point kept[i]
  };

  // Drops every point outside `keep`, renumbering the rest in order.
  inline Restriction restrict_base(Representation const& rep, PointSet keep) {
    std::vector<Point> kept;
    std::vector<Point> renumber(rep.base_size(), 0);
    for (Point x = 0; x < rep.base_size(); ++x) {
      if (((keep >> x) & 1u) != 0) {
        renumber[x] = static_cast<Point>(kept.size());
        kept.push_back(x);
      }
    }
    if (kept.empty()) {
      throw Error(ErrorKind::precondition_failed, "restriction to an empty base");
    }
    std::vector<Relation> images;
    for (auto const& r : rep.images()) {
      Relation s(kept.size());
      for (auto [x, y] : r.pairs()) {
        if (((keep >> x) & 1u) != 0 && ((keep >> y) & 1u) != 0) {
          s.insert(renumber[x], renumber[y]);
        }
      }
      images.push_back(s);
    }
    return {rep.with_images(kept.size(), std::move(images)), std::move(kept)};
  }

  struct Inflation {
    Representation     rep;
    std::vector<Point> projection;  // new point -> old point
  };

  // Replaces point x by fibers[x] copies; two new points are related by h'(a)
  // exactly when their projections are related by h(a).
  inline Inflation inflate(Representation const&        rep,
                           std::span<std::size_t const> fibers) {
    if (fibers.size() != rep.base_size()) {
      throw Error(ErrorKind::invalid_argument,
                  "one fiber size per base point is required");
    }
    std::vector<Point> proj;
    for (Point x = 0; x < fibers.size(); ++x) {
      if (fibers[x] == 0) {
        throw Error(ErrorKind::invalid_argument, "fiber sizes must be positive");
      }
      proj.insert(proj.end(), fibers[x], x);
    }
    if (proj.size() > max_base_size) {
      throw Error(ErrorKind::cap_exceeded, "inflated base too large");
    }
    std::size_t const     m2 = proj.size();
    std::vector<Relation> images;
    for (auto const& r : rep.images()) {
      Relation s(m2);
      for (Point u = 0; u < m2; ++u) {
        Relation::Row row = 0;
        for (Point v = 0; v < m2; ++v) {
          if (r.contains(proj[u], proj[v])) {
            row |= Relation::Row(1) << v;
          }
        }
        s.set_row(u, row);
      }
      images.push_back(s);
    }
    return {rep.with_images(m2, std::move(images)), std::move(proj)};
  }

  inline Inflation inflate(Representation const&              rep,
                           std::initializer_list<std::size_t> fibers) {
    return inflate(rep, std::span<std::size_t const>(fibers.begin(), fibers.size()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotient by e acting universally
  ////////////////////////////////////////////////////////////////////////

  struct Quotient {
    Representation     rep;
    std::vector<Point> class_of;         // old point -> class
    std::vector<Point> representatives;  // class -> least old point
  };

  // Collapses x and y whenever h(e) is universal on {x, y}. Requires that h
  // preserves composition; e need not be represented correctly.
  inline Quotient quotient(Representation const& rep) {
    auto const& alg = rep.algebra();
    if (!alg.e()) {
      throw Error(ErrorKind::unavailable, "quotient needs the constant e");
    }
    auto const cc = detail::check_compose(rep);
    if (!cc.ok) {
      auto const& w = cc.witness->elements;
      throw Error(ErrorKind::not_composition_preserving,
                  "h(" + alg.name(w[0]) + alg.name(w[1]) + ") != h("
                      + alg.name(w[0]) + ") h(" + alg.name(w[1]) + ")");
    }
    Relation const&   he = rep(*alg.e());
    std::size_t const m  = rep.base_size();
    auto sim = [&](Point x, Point y) {
      return x == y || acts_universally(he, {x, y});
    };
    // composition forces h(e) to be transitive, so sim is already closed
    for (Point x = 0; x < m; ++x) {
      for (Point y = 0; y < m; ++y) {
        if (!sim(x, y)) {
          continue;
        }
        for (Point z = 0; z < m; ++z) {
          if (sim(y, z) && !sim(x, z)) {
            throw Error(ErrorKind::internal,
                        "e-equivalence not transitive at points "
                            + std::to_string(x) + "," + std::to_string(y) + ","
                            + std::to_string(z));
          }
        }
      }
    }
    std::vector<Point> class_of(m);
    std::vector<Point> reps;
    for (Point x = 0; x < m; ++x) {
      Point y = 0;
      while (!sim(y, x)) {
        ++y;
      }
      if (y == x) {
        class_of[x] = static_cast<Point>(reps.size());
        reps.push_back(x);
      } else {
        class_of[x] = class_of[y];
      }
    }
    std::vector<Relation> images;
    for (auto const& r : rep.images()) {
      Relation s(reps.size());
      for (auto [x, y] : r.pairs()) {
        s.insert(class_of[x], class_of[y]);
      }
      images.push_back(s);
    }
    return {rep.with_images(reps.size(), std::move(images)),
            std::move(class_of),
            std::move(reps)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Symmetric interior of top
  ////////////////////////////////////////////////////////////////////////

  // h(a) intersected with the symmetric interior of h(top), on the same base.
  inline Representation symmetric_interior(Representation const& rep) {
    auto const sig = rep.claimed_signature();
    if (!sig.contains(Symbol::meet) && !sig.contains(Symbol::order)) {
      throw Error(ErrorKind::precondition_failed,
                  "symmetric interior needs meet or order in the signature");
    }
    if (!sig.contains(Symbol::const_top) || !rep.algebra().top()) {
      throw Error(ErrorKind::missing_top, "top is not in the signature");
    }
    Relation const        w = symmetric_interior(rep(*rep.algebra().top()));
    std::vector<Relation> images;
    for (auto const& r : rep.images()) {
      images.push_back(meet_rel(r, w));
    }
    return rep.with_images(rep.base_size(), std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Injectivization pipeline
  ////////////////////////////////////////////////////////////////////////

  struct PipelineOptions {
    // Take the symmetric interior of top (valid for finite bases). When
    // false, top must already be an equivalence relation on its field.
    bool finite_base = true;
  };

  struct PipelineStage {
    std::string name;
    std::size_t base_size;
    std::string note;
  };

  struct PipelineReport {
    std::string                route;  // "lattice" or "complement"
    std::vector<PipelineStage> stages;
    Representation             output;
    VerificationReport         final_check;
    std::vector<Element>       i_elements;
    std::vector<Point>         origin;  // output point -> input point

    bool ok() const {
      return final_check.ok() && final_check.i_preserved == true
             && final_check.domran_preserved == true
             && final_check.top_is_equivalence == true;
    }
  };

  namespace detail {
    [[noreturn]] inline void pipeline_reject(std::string const& what) {
      throw Error(ErrorKind::precondition_failed, what);
    }

    inline std::string first_failure(VerificationReport const& v) {
      if (!v.faithful) {
        return "faithfulness";
      }
      for (auto const& c : v.symbols) {
        if (!c.ok) {
          return std::string(to_string(c.symbol));
        }
      }
      return "unknown";
    }
  }  // namespace detail

  // Turns a {compose, meet, join} or {compose, order, complement}
  // representation of a normal Boolean monoid into one where top is an
  // equivalence relation, every injective-function element is an injective
  // partial function, and domain/range equivalence is concrete.
  inline PipelineReport injectivize_pipeline(Representation const&  rep,
                                             PipelineOptions const& opts = {}) {
    auto const& alg = rep.algebra();
    auto const  sig = rep.claimed_signature();
    std::string route;
    Signature   route_sig;
    if (sig.contains(Symbol::meet) && sig.contains(Symbol::join)) {
      route     = "lattice";
      route_sig = Signature{Symbol::compose, Symbol::meet, Symbol::join};
    } else if (sig.contains(Symbol::order) && sig.contains(Symbol::complement)) {
      route     = "complement";
      route_sig = Signature{Symbol::compose, Symbol::order, Symbol::complement};
    } else {
      detail::pipeline_reject(
          "signature: need {compose,meet,join} or {compose,order,complement}");
    }
    if (!alg.e() || !alg.zero() || !alg.top()) {
      detail::pipeline_reject("constants: e, zero and top must be designated");
    }
    if (!(alg.has_complement() && alg.e()) && !alg.designated("div")) {
      detail::pipeline_reject("constants: div is neither derivable nor designated");
    }
    if (!alg.has_meet()) {
      detail::pipeline_reject("normality: the algebra has no meet table");
    }
    if (route == "complement"
        && !(alg.has_order() && alg.has_complement())) {
      detail::pipeline_reject("tables: order and complement tables required");
    }
    if (!normality_check(alg).normal) {
      detail::pipeline_reject("normality");
    }
    auto const input_check = verify_representation(rep.with_signature(route_sig));
    if (!input_check.ok()) {
      detail::pipeline_reject("representation: "
                              + detail::first_failure(input_check));
    }

    std::vector<PipelineStage> stages;
    stages.push_back({"input", rep.base_size(), "verified " + sig.to_string()});

    Representation current = rep;
    std::vector<Point> origin(rep.base_size());
    for (Point x = 0; x < origin.size(); ++x) {
      origin[x] = x;
    }
    if (opts.finite_base) {
      current = symmetric_interior(current);
      stages.push_back({"symmetric-interior", current.base_size(),
                        "images cut to the symmetric part of h(top)"});
    } else if (!is_equivalence_on_domain(current(*alg.top()))) {
      detail::pipeline_reject("top_equivalence");
    }
    Relation const  top   = current(*alg.top());
    PointSet const  field = top.domain() | top.range();
    if (field == 0) {
      detail::pipeline_reject("empty base: top is represented as empty");
    }
    {
      auto restricted = restrict_base(current, field);
      for (auto& p : restricted.kept) {
        p = origin[p];
      }
      origin  = std::move(restricted.kept);
      current = std::move(restricted.rep);
      stages.push_back({"restrict", current.base_size(),
                        "base cut to the field of h(top)"});
    }
    {
      auto q = quotient(current);
      std::vector<Point> o;
      for (auto p : q.representatives) {
        o.push_back(origin[p]);
      }
      origin  = std::move(o);
      current = std::move(q.rep);
      stages.push_back({"quotient", current.base_size(),
                        "points merged where h(e) is universal"});
    }

    VerifyOptions vo;
    vo.require_top_equiv = true;
    vo.check_i           = true;
    vo.check_domran      = true;
    auto final_check     = verify_representation(current, vo);
    std::vector<Element> is = route == "lattice" ? i_elements_via_meet(alg)
                                                 : i_elements_via_complement(alg);
    // the verifier picks the meet route when it can; make the chosen route
    // the one that is checked
    final_check.i_preserved = true;
    final_check.i_witness.reset();
    for (auto a : is) {
      if (!is_injective_partial_function(current(a))) {
        final_check.i_preserved = false;
        final_check.i_witness   = Witness{{a}, {}};
        break;
      }
    }
    return PipelineReport{route,
                          std::move(stages),
                          std::move(current),
                          std::move(final_check),
                          std::move(is),
                          std::move(origin)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixed points of idempotents
  ////////////////////////////////////////////////////////////////////////

  // A point fixed by h(f) but not by h(0), for a nonzero idempotent f. Starts
  // from a pair of h(f) outside h(0) and keeps splitting it through
  // composition witnesses until a witness point repeats; the repeated point
  // lies on a cycle of h(f) and is therefore fixed.
  inline Point find_idempotent_fixed_point(Representation const& rep, Element f) {
    auto const& alg = rep.algebra();
    if (!alg.zero()) {
      throw Error(ErrorKind::unavailable, "the algebra has no zero constant");
    }
    if (alg.compose(f, f) != f) {
      throw Error(ErrorKind::not_idempotent, alg.name(f) + " is not idempotent");
    }
    Relation const& hf = rep(f);
    Relation const& h0 = rep(*alg.zero());
    if (hf == h0) {
      throw Error(ErrorKind::no_distinction, "h(f) = h(0)");
    }
    auto const start = detail::first_pair_outside(hf, h0);
    if (start.empty()) {
      // h(f) is strictly inside h(0): order is not preserved
      throw Error(ErrorKind::precondition_failed, "h(0) is not the least image");
    }
    Point const x = start[0];
    Point       z = start[1];
    if (x == z) {
      return x;
    }
    std::size_t const m = rep.base_size();
    std::vector<bool> seen(m, false);
    seen[z] = true;
    while (true) {
      // witness w with (x, w) and (w, z) in h(f)
      Relation::Row cand = hf.row(x);
      Point         w    = static_cast<Point>(m);
      while (cand != 0) {
        auto p = static_cast<Point>(std::countr_zero(cand));
        if (hf.contains(p, z)) {
          w = p;
          break;
        }
        cand &= cand - 1;
      }
      if (w == m) {
        throw Error(ErrorKind::not_composition_preserving,
                    "h(f) is not contained in h(f) h(f)");
      }
      if (seen[w]) {
        if (!hf.contains(w, w) || h0.contains(w, w)) {
          throw Error(ErrorKind::precondition_failed,
                      "witness cycle does not yield a fixed point");
        }
        return w;
      }
      seen[w] = true;
      z       = w;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal complement forces top
  ////////////////////////////////////////////////////////////////////////

  // Every idempotent f whose complement g is idempotent with f g = g = g f
  // must be the full square. Returns the f that are not.
  inline std::vector<Element> check_strong_complement(ConcreteAlgebra const& c) {
    if (c.semantics != Semantics::universal) {
      throw Error(ErrorKind::wrong_semantics,
                  "strong complement check needs universal complementation");
    }
    auto const& alg = c.algebra;
    if (!alg.has_complement()) {
      throw Error(ErrorKind::unavailable, "the algebra has no complement table");
    }
    auto const           full = Relation::full(c.base_size);
    std::vector<Element> out;
    for (Element f = 0; f < alg.size(); ++f) {
      Element const g = alg.complement(f);
      if (alg.compose(f, f) == f && alg.compose(g, g) == g
          && alg.compose(f, g) == g && alg.compose(g, f) == g
          && c.relations[f] != full) {
        out.push_back(f);
      }
    }
    return out;
  }

}  // namespace relrep

#endif  // RELREP_REPRESENTATION_HPP_
