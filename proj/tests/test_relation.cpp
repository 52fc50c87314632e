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
#include "relrep/relation.hpp"

using namespace relrep;

TEST_CASE("compose_rel examples", "[relation]") {
  auto const a = Relation::from_pairs(2, {{0, 1}});
  auto const b = Relation::from_pairs(2, {{1, 0}});
  CHECK(compose_rel(a, b) == Relation::from_pairs(2, {{0, 0}}));
  CHECK(compose_rel(a, Relation::identity(2)) == a);
  CHECK(compose_rel(a, Relation::empty(2)).is_empty());
  CHECK_THROWS_AS(compose_rel(a, Relation::identity(3)), Error);
}

TEST_CASE("boolean operations and converse", "[relation]") {
  auto const id   = Relation::identity(2);
  auto const full = Relation::full(2);
  CHECK(complement_rel(id, full) == Relation::from_pairs(2, {{0, 1}, {1, 0}}));
  auto const r = Relation::from_pairs(2, {{0, 1}, {1, 1}});
  CHECK(meet_rel(r, r) == r);
  CHECK(join_rel(r, id) == Relation::from_pairs(2, {{0, 0}, {0, 1}, {1, 1}}));
  CHECK(converse_rel(Relation::from_pairs(2, {{0, 1}})) == Relation::from_pairs(2, {{1, 0}}));

  try {
    complement_rel(full, id);
    FAIL("expected UniverseViolation");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::universe_violation);
  }
  try {
    meet_rel(id, Relation::identity(3));
    FAIL("expected BaseMismatch");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::base_mismatch);
  }
}

TEST_CASE("injective partial functions", "[relation]") {
  CHECK(is_injective_partial_function(Relation::identity(3)));
  CHECK_FALSE(is_injective_partial_function(Relation::from_pairs(2, {{0, 0}, {1, 0}})));
  CHECK(is_injective_partial_function(Relation::from_pairs(2, {{0, 1}, {1, 0}})));

  // agreement with the pointwise predicate on every relation over 3 points
  std::size_t count = 0;
  for (std::uint64_t c = 0; c < 512; ++c) {
    auto const r = Relation::from_code(3, c);
    bool const expected = oracle::injective_partial_function(oracle::pairs_of(r));
    CHECK(is_injective_partial_function(r) == expected);
    count += expected ? 1 : 0;
  }
  CHECK(count == oracle::count_injective_partial_functions(3));
}

TEST_CASE("equivalence predicates", "[relation]") {
  CHECK(is_equivalence(Relation::full(3)));
  auto const partial = Relation::from_pairs(3, {{0, 0}, {1, 1}});
  CHECK_FALSE(is_equivalence(partial));
  CHECK(is_equivalence_on_domain(partial));
  auto const arrow = Relation::from_pairs(3, {{0, 1}});
  CHECK_FALSE(is_equivalence(arrow));
  CHECK_FALSE(is_equivalence_on_domain(arrow));
}

TEST_CASE("acts_universally", "[relation]") {
  CHECK(acts_universally(Relation::full(3), {0, 2}));
  CHECK_FALSE(acts_universally(Relation::identity(3), {0, 1}));
  auto const block = Relation::from_pairs(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(acts_universally(block, {0, 1}));
  CHECK_FALSE(acts_universally(block, {1, 2}));
  CHECK_THROWS_AS(acts_universally(block, {0, 5}), Error);
}

TEST_CASE("symmetric interior of a relation", "[relation]") {
  auto const top = Relation::from_pairs(2, {{0, 1}, {0, 0}, {1, 1}});
  CHECK(symmetric_interior(top) == Relation::identity(2));
  CHECK(meet_rel(Relation::from_pairs(2, {{0, 1}}), symmetric_interior(top)).is_empty());
}

TEST_CASE("codes, pairs and ordering", "[relation]") {
  for (std::uint64_t c = 0; c < 16; ++c) {
    auto const r = Relation::from_code(2, c);
    CHECK(r.code() == c);
    CHECK(Relation::from_pairs(2, r.pairs()) == r);
  }
  // canonical order agrees with code order
  for (std::uint64_t c = 0; c + 1 < 512; ++c) {
    CHECK(Relation::from_code(3, c) < Relation::from_code(3, c + 1));
  }
  CHECK(Relation::from_pairs(2, {{1, 0}}).code() == 4);
  CHECK_THROWS_AS(Relation(0), Error);
  CHECK_THROWS_AS(Relation(33), Error);
  CHECK_THROWS_AS(Relation::identity(9).code(), Error);
  CHECK(Relation::full(32).count() == 1024);
}

TEST_CASE("randomized operation laws", "[relation][property]") {
  std::mt19937 rng(20261019);
  for (int round = 0; round < 300; ++round) {
    std::size_t const m = 1 + round % 5;
    auto const        r = oracle::random_relation(m, rng);
    auto const        s = oracle::random_relation(m, rng);
    auto const        t = oracle::random_relation(m, rng);
    CHECK(oracle::pairs_of(compose_rel(r, s)) == oracle::compose(oracle::pairs_of(r), oracle::pairs_of(s)));
    CHECK(compose_rel(compose_rel(r, s), t) == compose_rel(r, compose_rel(s, t)));
    CHECK(meet_rel(r, s) == meet_rel(s, r));
    CHECK(join_rel(r, s) == join_rel(s, r));
    CHECK(meet_rel(meet_rel(r, s), t) == meet_rel(r, meet_rel(s, t)));
    CHECK(join_rel(join_rel(r, s), t) == join_rel(r, join_rel(s, t)));
    CHECK(meet_rel(r, r) == r);
    CHECK(join_rel(r, r) == r);
    auto const full = Relation::full(m);
    CHECK(complement_rel(complement_rel(r, full), full) == r);
    auto const u = join_rel(r, s);
    CHECK(complement_rel(complement_rel(r, u), u) == r);
    CHECK(converse_rel(converse_rel(r)) == r);
    CHECK((r.domain() == 0) == r.is_empty());
  }
}
