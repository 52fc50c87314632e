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
#include "relrep/algebra.hpp"
#include "relrep/concrete.hpp"

using namespace relrep;

namespace {

  Signature const boolean_monoid{Symbol::compose,    Symbol::meet,    Symbol::join,
                                 Symbol::complement, Symbol::const_e, Symbol::const_zero,
                                 Symbol::const_top};

  // Closure by repeated sweeps over the whole set until nothing changes.
  std::set<std::uint64_t> naive_closure(std::vector<Relation> const& gens,
                                        Signature const&             sig) {
    std::size_t const       m = gens.front().base_size();
    std::set<std::uint64_t> s;
    for (auto const& g : gens) {
      s.insert(g.code());
    }
    if (sig.contains(Symbol::const_e)) s.insert(Relation::identity(m).code());
    if (sig.contains(Symbol::const_zero)) s.insert(0);
    if (sig.contains(Symbol::const_top)) s.insert(Relation::full(m).code());
    bool grew = true;
    while (grew) {
      auto const before = s.size();
      std::vector<std::uint64_t> cur(s.begin(), s.end());
      for (auto a : cur) {
        auto const ra = Relation::from_code(m, a);
        if (sig.contains(Symbol::complement)) {
          s.insert(Relation::full(m).code() & ~a);
        }
        for (auto b : cur) {
          auto const rb = Relation::from_code(m, b);
          s.insert(oracle::to_relation(m, oracle::compose(oracle::pairs_of(ra), oracle::pairs_of(rb))).code());
          if (sig.contains(Symbol::meet)) s.insert(a & b);
          if (sig.contains(Symbol::join)) s.insert(a | b);
        }
      }
      grew = s.size() != before;
    }
    return s;
  }

}  // namespace

TEST_CASE("closure of the identity over two points", "[concrete]") {
  auto const c = closure_generate({Relation::identity(2)}, boolean_monoid, Semantics::universal);
  REQUIRE(c.relations.size() == 4);
  CHECK(c.relations[0] == Relation::empty(2));
  CHECK(c.relations[1] == Relation::from_pairs(2, {{0, 1}, {1, 0}}));
  CHECK(c.relations[2] == Relation::identity(2));
  CHECK(c.relations[3] == Relation::full(2));

  try {
    closure_generate({Relation::identity(2)}, boolean_monoid, Semantics::universal, 3);
    FAIL("expected CapExceeded");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::cap_exceeded);
  }
}

TEST_CASE("all sixteen relations are already closed", "[concrete]") {
  std::vector<Relation> all;
  for (std::uint64_t c = 0; c < 16; ++c) {
    all.push_back(Relation::from_code(2, c));
  }
  auto const c = closure_generate(all, Signature::full(), Semantics::universal);
  CHECK(c.relations.size() == 16);
  CHECK(c.algebra.compose_table() == full_relation_algebra(2).algebra.compose_table());
}

TEST_CASE("closure matches a naive fixpoint and validates", "[concrete][property]") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    std::size_t const     m = 2 + round % 2;
    std::vector<Relation> gens{oracle::random_relation(m, rng), oracle::random_relation(m, rng)};
    for (auto const& sig : {boolean_monoid, Signature{Symbol::compose, Symbol::meet, Symbol::join},
                            Signature{Symbol::compose, Symbol::const_e}}) {
      auto const c = closure_generate(gens, sig, Semantics::universal);
      std::set<std::uint64_t> codes;
      for (auto const& r : c.relations) {
        codes.insert(r.code());
      }
      CHECK(codes == naive_closure(gens, sig));
      CHECK(validate_algebra(c.algebra, sig).empty());
    }
  }
}

TEST_CASE("tables agree with direct computation", "[concrete]") {
  std::mt19937 rng(11);
  auto const   c = closure_generate({oracle::random_relation(3, rng), oracle::random_relation(3, rng)},
                                    Signature::full(), Semantics::universal);
  auto const& alg = c.algebra;
  for (Element a = 0; a < alg.size(); ++a) {
    auto const& ra = c.relations[a];
    CHECK(c.relations[alg.complement(a)] == complement_rel(ra, Relation::full(3)));
    for (Element b = 0; b < alg.size(); ++b) {
      auto const& rb = c.relations[b];
      CHECK(oracle::pairs_of(c.relations[alg.compose(a, b)])
            == oracle::compose(oracle::pairs_of(ra), oracle::pairs_of(rb)));
      CHECK(c.relations[alg.meet(a, b)] == meet_rel(ra, rb));
      CHECK(c.relations[alg.join(a, b)] == join_rel(ra, rb));
      CHECK(alg.order(a, b) == ra.is_subset_of(rb));
    }
  }
}

TEST_CASE("relative complement stays inside the union", "[concrete]") {
  Signature const sig{Symbol::compose, Symbol::complement};
  auto const c = closure_generate({Relation::from_pairs(2, {{0, 1}})}, sig, Semantics::relative);
  REQUIRE(c.relations.size() == 2);
  CHECK(c.universe() == Relation::from_pairs(2, {{0, 1}}));
  CHECK(c.relations[c.algebra.complement(1)] == Relation::empty(2));

  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    auto const rc = closure_generate({oracle::random_relation(3, rng, 0.25)},
                                     Signature{Symbol::compose, Symbol::meet, Symbol::complement,
                                               Symbol::const_top},
                                     Semantics::relative);
    auto const u = rc.universe();
    CHECK(rc.relations[*rc.algebra.top()] == u);
    for (Element a = 0; a < rc.algebra.size(); ++a) {
      CHECK(rc.algebra.complement(rc.algebra.complement(a)) == a);
      CHECK(rc.relations[rc.algebra.complement(a)] == complement_rel(rc.relations[a], u));
    }
  }
}

TEST_CASE("make_concrete_algebra rejects lists that are not closed", "[concrete]") {
  try {
    make_concrete_algebra({Relation::from_pairs(2, {{0, 1}})}, Signature{}, Semantics::universal);
    FAIL("expected Internal");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::internal);
  }
}

TEST_CASE("full relation algebras", "[concrete]") {
  auto const c = full_relation_algebra(2);
  CHECK(c.algebra.size() == 16);
  CHECK(c.algebra.name(9) == "r9");
  CHECK(*c.algebra.e() == 9);
  CHECK(*c.algebra.top() == 15);
  CHECK(full_relation_algebra(3).algebra.size() == 512);
  CHECK_THROWS_AS(full_relation_algebra(4), Error);
}
