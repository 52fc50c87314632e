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

// Regenerates the JSON fixtures under tests/fixtures from library
// constructions. Usage: make_fixtures <output-dir>

#include <filesystem>
#include <iostream>

#include "relrep/relrep.hpp"

namespace fs = std::filesystem;
using namespace relrep;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  fs::path const dir = argv[1];
  fs::create_directories(dir);

  auto const full = full_relation_algebra(2);
  auto const sig  = Signature::full();
  write_text_file(dir / "full16.alg.json", canonical_dump(algebra_to_json(full.algebra, sig)));

  auto const rep = identity_representation(full);
  write_text_file(dir / "full16.rep.json",
                  canonical_dump(representation_to_json(rep, "full16.alg.json")));

  // top stays the full square, so it is an equivalence; the duplicated
  // points give the quotient something to collapse
  Signature const lattice{Symbol::compose, Symbol::meet, Symbol::join,
                          Symbol::const_zero, Symbol::const_top};
  auto const lat = inflate(rep.with_signature(lattice), {2, 1}).rep;
  write_text_file(dir / "lattice.rep.json",
                  canonical_dump(representation_to_json(lat, "full16.alg.json")));

  Signature const ordered{Symbol::compose, Symbol::order, Symbol::complement,
                          Symbol::const_zero, Symbol::const_top};
  auto const oc = inflate(rep.with_signature(ordered), {1, 3}).rep;
  write_text_file(dir / "ordered-complemented.rep.json",
                  canonical_dump(representation_to_json(oc, "full16.alg.json")));

  auto const z4 = restrict_group(cyclic_group(4), {0, 1});
  write_text_file(dir / "z4-restriction.pg.json", canonical_dump(partial_group_to_json(z4)));
  return 0;
}
