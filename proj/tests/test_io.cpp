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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "relrep/concrete.hpp"
#include "relrep/io.hpp"

using namespace relrep;

namespace {

  std::filesystem::path const fixtures = RELREP_FIXTURES_DIR;

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string error_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.what();
    }
    return "";
  }

}  // namespace

TEST_CASE("minimal algebra parses", "[io]") {
  auto const f = load_algebra_file(fixtures / "minimal.alg.json");
  CHECK(f.algebra.size() == 1);
  CHECK(f.signature == Signature{});
}

TEST_CASE("unknown names are reported with their field", "[io]") {
  auto const msg = error_of([] { load_algebra_file(fixtures / "unknown-name.alg.json"); });
  CHECK(msg.find("ParseError") != std::string::npos);
  CHECK(msg.find("/compose/1/1") != std::string::npos);
  CHECK(msg.find("'c'") != std::string::npos);
}

TEST_CASE("syntax errors carry a line number", "[io]") {
  auto const msg = error_of([] { load_algebra_file(fixtures / "syntax-error.alg.json"); });
  CHECK(msg.find("line 4") != std::string::npos);
}

TEST_CASE("structural errors name the field", "[io]") {
  auto parse = [](char const* text) {
    return error_of([&] { algebra_from_json(json::parse(text)); });
  };
  CHECK(parse(R"({"compose": [["a"]]})").find("/elements: missing field") != std::string::npos);
  CHECK(parse(R"({"elements": ["a", "a"], "compose": []})").find("/elements/1") != std::string::npos);
  CHECK(parse(R"({"elements": ["a"], "compose": [["a", "a"]]})").find("/compose/0") != std::string::npos);
  CHECK(parse(R"({"elements": ["a"], "compose": [["a"]], "order": [[2]]})").find("/order/0/0") != std::string::npos);
  CHECK(parse(R"({"elements": ["a"], "compose": [["a"]], "signature": ["meet"]})").find("/signature") != std::string::npos);
  CHECK(parse(R"({"elements": ["a"], "compose": [["a"]], "constants": {"one": "a"}})").find("/constants/one") != std::string::npos);
  CHECK(parse(R"({"elements": [], "compose": []})").find("/elements") != std::string::npos);
}

TEST_CASE("full algebra fixture round-trips byte for byte", "[io]") {
  auto const path = fixtures / "full16.alg.json";
  auto const f    = load_algebra_file(path);
  auto const text = canonical_dump(algebra_to_json(f.algebra, f.signature));
  CHECK(text == slurp(path));
  auto const again = algebra_from_json(json::parse(text));
  CHECK(canonical_dump(algebra_to_json(again.algebra, again.signature)) == text);

  auto const full = full_relation_algebra(2);
  CHECK(f.algebra.compose_table() == full.algebra.compose_table());
  CHECK(f.algebra.complement_table() == full.algebra.complement_table());
  CHECK(f.algebra.order_matrix() == full.algebra.order_matrix());
}

TEST_CASE("representation files", "[io]") {
  auto const path = fixtures / "full16.rep.json";
  auto const f    = load_representation_file(path);
  CHECK(f.algebra_path == "full16.alg.json");
  CHECK(f.rep.base_size() == 2);
  CHECK(f.rep.semantics() == Semantics::universal);
  auto const full = full_relation_algebra(2);
  CHECK(f.rep.images() == full.relations);
  CHECK(canonical_dump(representation_to_json(f.rep, f.algebra_path)) == slurp(path));

  // inline algebra round trip
  auto const inl  = representation_to_json(f.rep, std::nullopt, f.algebra_signature);
  auto const back = representation_from_json(inl, fixtures);
  CHECK(back.rep.images() == f.rep.images());
  CHECK(back.rep.claimed_signature() == f.rep.claimed_signature());
  CHECK(canonical_dump(representation_to_json(back.rep, std::nullopt, back.algebra_signature))
        == canonical_dump(inl));
}

TEST_CASE("representation errors", "[io]") {
  auto base = json::parse(R"({"algebra": {"elements": ["u"], "compose": [["u"]]},
                              "base_size": 2, "map": {"u": [[0, 0]]}})");
  CHECK_NOTHROW(representation_from_json(base, fixtures));

  auto out_of_range       = base;
  out_of_range["map"]["u"] = json::parse("[[0, 2]]");
  CHECK(error_of([&] { representation_from_json(out_of_range, fixtures); }).find("/map/u/0")
        != std::string::npos);

  auto missing   = base;
  missing["map"] = json::object();
  CHECK(error_of([&] { representation_from_json(missing, fixtures); }).find("no image")
        != std::string::npos);

  auto unknown          = base;
  unknown["map"]["v"]   = json::array();
  CHECK(error_of([&] { representation_from_json(unknown, fixtures); }).find("/map/v")
        != std::string::npos);

  auto bad_sem         = base;
  bad_sem["semantics"] = "partial";
  CHECK(error_of([&] { representation_from_json(bad_sem, fixtures); }).find("/semantics")
        != std::string::npos);
}

TEST_CASE("partial group files", "[io]") {
  auto const path = fixtures / "z4-restriction.pg.json";
  auto const pg   = load_partial_group_file(path);
  CHECK(pg.size() == 3);
  CHECK_FALSE(pg.defined(1, 2));
  CHECK(pg.product(1, 1) == 2);
  CHECK(canonical_dump(partial_group_to_json(pg)) == slurp(path));

  auto const phi = *embed_search(pg, 3).embedding;
  auto const j   = embedding_to_json(pg, phi);
  CHECK(j["degree"] == 3);
  auto const back = embedding_from_json(pg, j);
  CHECK(back.images == phi.images);

  auto bad         = j;
  bad["map"]["g1"] = json::parse("[0, 0, 1]");
  CHECK(error_of([&] { embedding_from_json(pg, bad); }).find("/map/g1") != std::string::npos);
}
