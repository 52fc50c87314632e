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

#include "oracles.hpp"
#include "relrep/partial_group.hpp"

using namespace relrep;

namespace {

  constexpr Element U = undefined;

  // {e, g, h} with g.g = h and everything else involving h undefined.
  PartialGroup three_element(std::optional<std::vector<Element>> sqrt = std::vector<Element>{0, 1}) {
    return PartialGroup({"e", "g", "h"}, 0, {0, 1, U, 1, 2, U, U, U, U}, std::move(sqrt));
  }

  bool has_axiom(PartialGroupReport const& r, PgAxiom a) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](auto const& v) { return v.axiom == a; });
  }

}  // namespace

TEST_CASE("validate_partial_group examples", "[partial_group]") {
  auto const z2 = restrict_group(cyclic_group(2), {0, 1});
  auto const r  = validate_partial_group(PartialGroup(z2.names(), 0, z2.table()));
  CHECK(r.ok());
  REQUIRE(r.sqrt);
  CHECK(*r.sqrt == std::vector<Element>{0, 1});
  CHECK(r.sqrt_inferred);

  PartialGroup bad({"e", "a", "b", "c", "d"}, 0,
                   {0, 1, 2, 3, 4,
                    1, U, 4, 4, U,
                    2, U, U, U, U,
                    3, U, U, U, U,
                    4, U, U, U, U});
  auto const v = validate_partial_group(bad, 10);
  REQUIRE(has_axiom(v, PgAxiom::left_cancellation));
  auto const& lc = *std::find_if(v.violations.begin(), v.violations.end(),
                                 [](auto const& x) { return x.axiom == PgAxiom::left_cancellation; });
  CHECK(lc.witnesses == std::vector<Element>{1, 2, 3});

  auto const t = validate_partial_group(three_element());
  CHECK(t.ok());
}

TEST_CASE("squareness against a given or inferred root", "[partial_group]") {
  CHECK(validate_partial_group(three_element(std::vector<Element>{0})).violations.size() == 1);
  auto const inferred = validate_partial_group(three_element(std::nullopt));
  CHECK(inferred.ok());
  CHECK(*inferred.sqrt == std::vector<Element>{0, 1});

  std::vector<std::string> names;
  for (int i = 0; i < 13; ++i) {
    names.push_back("a" + std::to_string(i));
  }
  PartialGroup big(names, 0, std::vector<Element>(169, U));
  try {
    validate_partial_group(big);
    FAIL("expected CarrierTooLarge");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::carrier_too_large);
  }
}

TEST_CASE("identity and associativity violations", "[partial_group]") {
  PartialGroup id_bad({"e", "a"}, 0, {1, 1, 1, 0});
  CHECK(has_axiom(validate_partial_group(id_bad), PgAxiom::identity));

  // a.a = b, b.a = e, a.b = a: (a.a).a = e, a.(a.a) = a
  PartialGroup assoc_bad({"e", "a", "b"}, 0, {0, 1, 2, 1, 2, 1, 2, 0, U});
  CHECK(has_axiom(validate_partial_group(assoc_bad, 10), PgAxiom::associativity));
}

TEST_CASE("restrict_group", "[partial_group]") {
  auto const z4 = restrict_group(cyclic_group(4), {0, 1});
  CHECK(z4.size() == 3);
  CHECK(z4.table() == three_element().table());
  CHECK(*z4.sqrt() == std::vector<Element>{0, 1});

  auto const whole = restrict_group(cyclic_group(3), {0, 1, 2});
  CHECK(whole.table() == cyclic_group(3).table);

  auto const trivial = restrict_group(cyclic_group(2), {0});
  CHECK(trivial.size() == 1);
  CHECK(trivial.product(0, 0) == 0);

  CHECK_THROWS_AS(restrict_group(cyclic_group(4), {1, 2}), Error);
}

TEST_CASE("restrictions of small groups are valid", "[partial_group][property]") {
  std::vector<CayleyGroup> groups;
  for (std::size_t n = 1; n <= 6; ++n) {
    groups.push_back(cyclic_group(n));
  }
  groups.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  groups.push_back(symmetric_group(3));
  for (auto const& g : groups) {
    std::size_t const n = g.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (((mask >> g.identity) & 1u) == 0) {
        continue;
      }
      std::vector<Element> sqrt;
      for (Element a = 0; a < n; ++a) {
        if (((mask >> a) & 1u) != 0) {
          sqrt.push_back(a);
        }
      }
      CHECK(validate_partial_group(restrict_group(g, sqrt)).ok());
    }
  }
}

TEST_CASE("permutations", "[partial_group]") {
  auto const p = Permutation::from_images({1, 2, 0});
  auto const q = Permutation::from_images({1, 0, 2});
  CHECK((p * q).images() == std::vector<std::uint8_t>{2, 1, 0});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.cycle_type() == std::vector<std::size_t>{3});
  CHECK(Permutation::from_images({0, 3, 2, 1}).canonical_conjugate().images()
        == std::vector<std::uint8_t>{1, 0, 2, 3});
  CHECK_THROWS_AS(Permutation::from_images({0, 0}), Error);
  CHECK(symmetric_group(3).size() == 6);
}

TEST_CASE("embed_search examples", "[partial_group]") {
  auto const z2 = restrict_group(cyclic_group(2), {0, 1});
  auto const a  = embed_search(z2, 3);
  REQUIRE(a.status == EmbedStatus::found);
  CHECK(a.embedding->degree == 2);
  CHECK(a.embedding->images[1].images() == std::vector<std::uint8_t>{1, 0});

  auto const pg = three_element();
  auto const b  = embed_search(pg, 3);
  REQUIRE(b.status == EmbedStatus::found);
  CHECK(b.embedding->degree == 3);
  CHECK(check_embedding(pg, *b.embedding).ok);

  auto const c = embed_search(pg, 1);
  CHECK(c.status == EmbedStatus::not_found);
  CHECK(c.bound == 1);
  CHECK_FALSE(oracle::embeds_at_degree(pg, 1));
  CHECK_FALSE(oracle::embeds_at_degree(pg, 2));
  CHECK(oracle::embeds_at_degree(pg, 3));
}

TEST_CASE("check_embedding failures", "[partial_group]") {
  auto const pg  = three_element();
  auto       phi = *embed_search(pg, 3).embedding;

  auto collapsed      = phi;
  collapsed.images[2] = collapsed.images[1];
  auto const c        = check_embedding(pg, collapsed);
  CHECK_FALSE(c.ok);
  CHECK(c.failure == "injectivity");
  CHECK(c.witnesses == std::vector<Element>{1, 2});

  // replace h by a permutation that is new but not g.g
  auto perturbed = phi;
  for (auto const& img : oracle::all_permutations(3)) {
    auto const p = Permutation::from_images(img);
    if (p != phi.images[0] && p != phi.images[1] && p != phi.images[2]) {
      perturbed.images[2] = p;
      break;
    }
  }
  auto const d = check_embedding(pg, perturbed);
  CHECK_FALSE(d.ok);
  CHECK(d.failure == "product");
  CHECK(d.witnesses == std::vector<Element>{1, 1});
}

TEST_CASE("embed_search agrees with the map oracle", "[partial_group][property]") {
  // every valid partial group on at most three elements whose identity is
  // element 0 and whose products are defined on a root S x S
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
      std::vector<Element> root;
      for (Element a = 0; a < n; ++a) {
        if (((mask >> a) & 1u) != 0) {
          root.push_back(a);
        }
      }
      std::size_t const  r = root.size();
      std::vector<Element> values(r * r, 0);
      while (true) {
        std::vector<Element> table(n * n, U);
        for (std::size_t i = 0; i < r * r; ++i) {
          table[root[i / r] * n + root[i % r]] = values[i];
        }
        PartialGroup pg(oracle::element_names(n), 0, table, root);
        if (validate_partial_group(pg).ok()) {
          ++checked;
          bool expected = false;
          for (std::size_t k = 1; k <= 3; ++k) {
            expected = expected || oracle::embeds_at_degree(pg, k);
            CHECK((embed_search(pg, k).status == EmbedStatus::found) == expected);
          }
        }
        std::size_t i = 0;
        while (i < values.size() && ++values[i] == n) {
          values[i++] = 0;
        }
        if (i == values.size()) {
          break;
        }
      }
    }
  }
  // trivial, Z2, Z3, and {e, g, g*g} from the roots {0,1} and {0,2}
  CHECK(checked == 5);
}

TEST_CASE("embedding search node limit", "[partial_group]") {
  auto const g = restrict_group(symmetric_group(3), {0, 1, 2, 3, 4, 5});
  auto const o = embed_search(g, 6, 3);
  CHECK(o.status == EmbedStatus::resource_exhausted);
  CHECK_THROWS_AS(embed_search(g, 0), Error);
}
