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

#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "relrep/representation.hpp"

using namespace relrep;

namespace {

  Signature const lattice_sig{Symbol::compose, Symbol::meet, Symbol::join,
                              Symbol::const_e, Symbol::const_zero, Symbol::const_top};

  Representation full16() {
    return identity_representation(full_relation_algebra(2));
  }

  std::vector<Point> compose_maps(std::vector<Point> const& first, std::vector<Point> const& second) {
    std::vector<Point> out;
    for (auto p : first) {
      out.push_back(second[p]);
    }
    return out;
  }

}  // namespace

TEST_CASE("verify_representation on the full algebra", "[representation]") {
  auto const rep = full16();
  auto const v   = verify_representation(rep);
  CHECK(v.ok());
  CHECK(v.faithful);
  CHECK(v.symbols.size() == 8);
  CHECK(v.top_is_equivalence == true);
}

TEST_CASE("verify_representation reports collisions and failures", "[representation]") {
  auto const rep    = full16();
  auto       images = rep.images();
  images[3]         = images[5];
  auto const v      = verify_representation(rep.with_images(2, images));
  CHECK_FALSE(v.faithful);
  REQUIRE(v.collision);
  CHECK(v.collision->elements == std::vector<Element>{3, 5});

  // map to the converse: meet, join, constants survive, compose does not
  std::vector<Relation> conv;
  for (auto const& r : rep.images()) {
    conv.push_back(converse_rel(r));
  }
  auto const w = verify_representation(rep.with_images(2, conv));
  CHECK(w.faithful);
  CHECK(w.preserves(Symbol::meet) == true);
  CHECK(w.preserves(Symbol::compose) == false);
  auto const& c = *std::find_if(w.symbols.begin(), w.symbols.end(),
                                [](auto const& s) { return s.symbol == Symbol::compose; });
  REQUIRE(c.witness);
  auto const a = c.witness->elements[0], b = c.witness->elements[1];
  CHECK(compose_rel(conv[a], conv[b]) != conv[rep.algebra().compose(a, b)]);
}

TEST_CASE("order must be reflected as well as preserved", "[representation]") {
  // images strictly inside one another while the algebra says incomparable
  FiniteAlgebra alg({"x", "y"}, {0, 1, 1, 1});
  alg.set_order({1, 0, 0, 1});
  auto       ptr = std::make_shared<FiniteAlgebra const>(alg);
  Representation rep(ptr, 1, {Relation::empty(1), Relation::full(1)},
                     Signature{Symbol::order}, Semantics::universal);
  auto const v = verify_representation(rep);
  CHECK(v.preserves(Symbol::order) == false);
}

TEST_CASE("quotient examples", "[representation]") {
  auto const rep = full16();
  auto const q   = quotient(rep);
  CHECK(q.rep.base_size() == 2);
  CHECK(isomorphic_via(q.rep, rep, std::vector<Point>{0, 1}));

  auto const inf = inflate(rep, {2, 1});
  CHECK(inf.rep.base_size() == 3);
  CHECK(acts_universally(inf.rep(*rep.algebra().e()), {0, 1}));
  CHECK(inf.rep(*rep.algebra().e()).contains(2, 2));
  auto const qi = quotient(inf.rep);
  CHECK(qi.class_of == std::vector<Point>{0, 0, 1});
  CHECK(qi.representatives == std::vector<Point>{0, 2});
  CHECK(isomorphic_via(qi.rep, rep, compose_maps(qi.representatives, inf.projection)));
  CHECK(verify_representation(qi.rep).ok());

  auto const again = quotient(qi.rep);
  CHECK(again.rep.base_size() == qi.rep.base_size());
}

TEST_CASE("quotient requires composition to be preserved", "[representation]") {
  auto const            rep = full16();
  std::vector<Relation> conv;
  for (auto const& r : rep.images()) {
    conv.push_back(converse_rel(r));
  }
  try {
    quotient(rep.with_images(2, conv));
    FAIL("expected NotCompositionPreserving");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_composition_preserving);
  }
}

TEST_CASE("inflate with unit fibers is a copy", "[representation]") {
  auto const rep = full16();
  auto const inf = inflate(rep, {1, 1});
  CHECK(inf.rep.images() == rep.images());
  CHECK_THROWS_AS(inflate(rep, {1}), Error);
  CHECK_THROWS_AS(inflate(rep, {0, 1}), Error);
}

TEST_CASE("symmetric interior examples", "[representation]") {
  auto const rep = full16();
  CHECK(symmetric_interior(rep).images() == rep.images());

  auto const chain = oracle::chain_inflate(rep);
  auto const top   = chain(*rep.algebra().top());
  CHECK_FALSE(is_symmetric(top));
  auto const inner = symmetric_interior(chain);
  auto const itop  = inner(*rep.algebra().top());
  CHECK(is_symmetric(itop));
  CHECK(is_transitive(itop));
  for (Element a = 0; a < rep.algebra().size(); ++a) {
    CHECK(inner(a) == meet_rel(chain(a), symmetric_interior(top)));
  }

  auto const bare = rep.with_signature(Signature{Symbol::compose, Symbol::meet});
  try {
    symmetric_interior(bare);
    FAIL("expected MissingTop");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::missing_top);
  }
  try {
    symmetric_interior(rep.with_signature(Signature{Symbol::compose, Symbol::const_top}));
    FAIL("expected PreconditionFailed");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::precondition_failed);
  }
}

TEST_CASE("pipeline on the full algebra", "[representation][pipeline]") {
  auto const rep = full16().with_signature(lattice_sig);
  auto const p   = injectivize_pipeline(rep);
  CHECK(p.ok());
  CHECK(p.route == "lattice");
  CHECK(p.i_elements.size() == 7);
  CHECK(p.output.base_size() == 2);
  CHECK(isomorphic_via(p.output, rep, p.origin));
}

TEST_CASE("pipeline undoes inflation", "[representation][pipeline]") {
  auto const rep = full16().with_signature(lattice_sig);
  auto const inf = inflate(rep, {2, 2});
  auto const p   = injectivize_pipeline(inf.rep);
  CHECK(p.ok());
  CHECK(p.output.base_size() == 2);
  CHECK(isomorphic_via(p.output, rep, compose_maps(p.origin, inf.projection)));
}

TEST_CASE("pipeline through the ordered complemented route", "[representation][pipeline]") {
  Signature const sig{Symbol::compose, Symbol::order, Symbol::complement,
                      Symbol::const_e, Symbol::const_zero, Symbol::const_top};
  auto const rep = inflate(full16().with_signature(sig), {1, 3}).rep;
  auto const p   = injectivize_pipeline(rep);
  CHECK(p.ok());
  CHECK(p.route == "complement");
  for (auto a : p.i_elements) {
    CHECK(is_injective_partial_function(p.output(a)));
  }
}

TEST_CASE("pipeline takes the interior of a non-symmetric top", "[representation][pipeline]") {
  auto const chain = oracle::chain_inflate(full16().with_signature(lattice_sig));
  Signature const kept{Symbol::compose, Symbol::meet, Symbol::join, Symbol::const_zero,
                       Symbol::const_top};
  CHECK(verify_representation(chain.with_signature(kept)).ok());
  CHECK(verify_representation(chain).preserves(Symbol::const_e) == false);
  CHECK_FALSE(is_equivalence(chain(*chain.algebra().top())));
  auto const p = injectivize_pipeline(chain);
  CHECK(p.ok());
  CHECK(is_equivalence(p.output(*chain.algebra().top())));

  PipelineOptions keep;
  keep.finite_base = false;
  CHECK_THROWS_AS(injectivize_pipeline(chain, keep), Error);
}

TEST_CASE("pipeline rejects unmet hypotheses", "[representation][pipeline]") {
  FiniteAlgebra alg({"g", "e"}, {1, 0, 0, 1});
  alg.set_meet({0, 0, 0, 1}).set_join({0, 1, 1, 1}).set_order({1, 1, 0, 1});
  alg.set_e(1).set_zero(0).set_top(1).designate("div", 0);
  Representation rep(std::make_shared<FiniteAlgebra const>(alg), 1,
                     {Relation::empty(1), Relation::full(1)}, lattice_sig, Semantics::universal);
  try {
    injectivize_pipeline(rep);
    FAIL("expected PreconditionFailed");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::precondition_failed);
    CHECK(e.detail().find("normality") != std::string::npos);
  }
  try {
    injectivize_pipeline(full16().with_signature(Signature{Symbol::compose, Symbol::meet}));
    FAIL("expected PreconditionFailed");
  } catch (Error const& e) {
    CHECK(e.detail().find("signature") != std::string::npos);
  }
}

TEST_CASE("idempotent fixed points", "[representation]") {
  auto const  full = full_relation_algebra(2);
  auto const  rep  = identity_representation(full);
  auto const& alg  = full.algebra;
  CHECK(find_idempotent_fixed_point(rep, *alg.e()) < 2);
  CHECK(find_idempotent_fixed_point(rep, *full.index_of(Relation::from_pairs(2, {{0, 1}, {1, 1}}))) == 1);
  try {
    find_idempotent_fixed_point(rep, *alg.zero());
    FAIL("expected NoDistinction");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::no_distinction);
  }
  try {
    find_idempotent_fixed_point(rep, *full.index_of(Relation::from_pairs(2, {{0, 1}})));
    FAIL("expected NotIdempotent");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_idempotent);
  }
}

TEST_CASE("strong complement", "[representation]") {
  auto const full = full_relation_algebra(2);
  CHECK(check_strong_complement(full).empty());
  auto const f  = *full.index_of(Relation::from_pairs(2, {{0, 0}}));
  auto const nf = full.algebra.complement(f);
  CHECK(full.algebra.compose(nf, nf) != nf);
  try {
    check_strong_complement(full_relation_algebra(2, Semantics::relative));
    FAIL("expected WrongSemantics");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::wrong_semantics);
  }
}

TEST_CASE("restrict_base", "[representation]") {
  auto const inf = inflate(full16(), {2, 1});
  auto const r   = restrict_base(inf.rep, 0b101);
  CHECK(r.kept == std::vector<Point>{0, 2});
  CHECK(isomorphic_via(r.rep, full16(), std::vector<Point>{0, 1}));
  CHECK_THROWS_AS(restrict_base(inf.rep, 0), Error);
}

TEST_CASE("i and domain checks in verification", "[representation]") {
  VerifyOptions vo;
  vo.check_i      = true;
  vo.check_domran = true;
  auto const v    = verify_representation(full16(), vo);
  CHECK(v.i_preserved == true);
  CHECK(v.domran_preserved == true);

  // inflation keeps the operations but not injectivity of h(e)
  auto const w = verify_representation(inflate(full16(), {2, 1}).rep, vo);
  CHECK(w.i_preserved == false);
}

TEST_CASE("zero is empty when order and complement are preserved", "[representation][property]") {
  std::mt19937 rng(3);
  Signature const sig{Symbol::compose, Symbol::order, Symbol::complement, Symbol::const_zero};
  for (int round = 0; round < 30; ++round) {
    auto const c   = closure_generate({oracle::random_relation(3, rng)}, sig, Semantics::universal);
    auto const rep = inflate(identity_representation(c), {1, 2, 1}).rep;
    REQUIRE(verify_representation(rep).ok());
    CHECK(rep(*c.algebra.zero()).is_empty());
  }
}
