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

// JSON file formats for algebras, representations and partial groups.
// Tables refer to elements by name. Parse errors name the offending field as
// a JSON pointer; syntax errors carry the line and column of the input.

#ifndef RELREP_IO_HPP_
#define RELREP_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "error.hpp"
#include "partial_group.hpp"
#include "relation.hpp"
#include "representation.hpp"
#include "signature.hpp"

namespace relrep {

  using json = nlohmann::json;

  namespace detail {
    [[noreturn]] inline void bad_field(std::string const& path, std::string const& msg) {
      throw Error(ErrorKind::parse_error, (path.empty() ? "/" : path) + ": " + msg);
    }

    inline std::string child(std::string const& path, std::string const& key) {
      return path + "/" + key;
    }

    inline std::string child(std::string const& path, std::size_t i) {
      return path + "/" + std::to_string(i);
    }

    inline json const& require(json const& obj, std::string const& path, char const* key) {
      if (!obj.is_object()) {
        bad_field(path, "expected an object");
      }
      auto it = obj.find(key);
      if (it == obj.end()) {
        bad_field(child(path, key), "missing field");
      }
      return *it;
    }

    inline json const* optional_field(json const& obj, char const* key) {
      auto it = obj.find(key);
      return it == obj.end() || it->is_null() ? nullptr : &*it;
    }

    inline json const& require_array(json const&        j,
                                     std::string const& path,
                                     std::size_t        size) {
      if (!j.is_array()) {
        bad_field(path, "expected an array");
      }
      if (j.size() != size) {
        bad_field(path, "expected " + std::to_string(size) + " entries, got "
                            + std::to_string(j.size()));
      }
      return j;
    }

    inline std::string as_string(json const& j, std::string const& path) {
      if (!j.is_string()) {
        bad_field(path, "expected a string");
      }
      return j.get<std::string>();
    }

    inline std::size_t as_count(json const& j, std::string const& path) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        bad_field(path, "expected a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    class NameIndex {
     public:
      explicit NameIndex(std::vector<std::string> const& names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
          _index.emplace(names[i], static_cast<Element>(i));
        }
      }

      Element operator()(json const& j, std::string const& path) const {
        auto nm = as_string(j, path);
        auto it = _index.find(nm);
        if (it == _index.end()) {
          bad_field(path, "unknown element '" + nm + "'");
        }
        return it->second;
      }

     private:
      std::map<std::string, Element> _index;
    };

    inline std::vector<std::string> parse_names(json const& j, std::string const& path) {
      if (!j.is_array() || j.empty()) {
        bad_field(path, "expected a nonempty array of names");
      }
      std::vector<std::string> names;
      std::map<std::string, std::size_t> seen;
      for (std::size_t i = 0; i < j.size(); ++i) {
        auto nm = as_string(j[i], child(path, i));
        if (!seen.emplace(nm, i).second) {
          bad_field(child(path, i), "duplicate element '" + nm + "'");
        }
        names.push_back(std::move(nm));
      }
      return names;
    }

    inline std::vector<Element> parse_binary_table(json const&        j,
                                                   std::string const& path,
                                                   NameIndex const&   idx,
                                                   std::size_t        n) {
      require_array(j, path, n);
      std::vector<Element> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        auto const row = child(path, a);
        require_array(j[a], row, n);
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = idx(j[a][b], child(row, b));
        }
      }
      return t;
    }

    inline Signature parse_signature(json const& j, std::string const& path) {
      if (!j.is_array()) {
        bad_field(path, "expected an array of symbols");
      }
      Signature sig;
      for (std::size_t i = 0; i < j.size(); ++i) {
        auto s = symbol_from_string(as_string(j[i], child(path, i)));
        if (!s) {
          bad_field(child(path, i), "unknown symbol '" + j[i].get<std::string>() + "'");
        }
        sig = sig.with(*s);
      }
      return sig;
    }

    inline json signature_json(Signature const& sig) {
      json out = json::array();
      for (auto s : sig.symbols()) {
        out.push_back(std::string(to_string(s)));
      }
      return out;
    }

    inline Semantics parse_semantics(json const& j, std::string const& path) {
      auto s = semantics_from_string(as_string(j, path));
      if (!s) {
        bad_field(path, "expected \"relative\" or \"universal\"");
      }
      return *s;
    }

    template <typename T>
    T rethrow_positioned(std::string const& where, auto&& f) {
      try {
        return f();
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::parse_error) {
          throw Error(ErrorKind::parse_error, where + e.detail());
        }
        throw Error(ErrorKind::parse_error, where + e.what());
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Reading and writing JSON text
  ////////////////////////////////////////////////////////////////////////

  inline json parse_json_text(std::string const& text, std::string const& origin = "<input>") {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(ErrorKind::parse_error, origin + ": " + e.what());
    }
  }

  inline json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::parse_error, path.string() + ": cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path.string());
  }

  // Sorted keys, two-space indent, trailing newline.
  inline std::string canonical_dump(json const& j) {
    return j.dump(2) + "\n";
  }

  inline void write_text_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(ErrorKind::invalid_argument, path.string() + ": cannot write file");
    }
    out << text;
  }

  ////////////////////////////////////////////////////////////////////////
  // Algebras
  ////////////////////////////////////////////////////////////////////////

  struct AlgebraFile {
    FiniteAlgebra algebra;
    Signature     signature;  // declared, or everything the tables provide
  };

  inline AlgebraFile algebra_from_json(json const& j, std::string const& path = "") {
    using namespace detail;
    if (!j.is_object()) {
      bad_field(path, "expected an object");
    }
    auto names = parse_names(require(j, path, "elements"), child(path, "elements"));
    std::size_t const n = names.size();
    NameIndex const   idx(names);
    auto compose = parse_binary_table(require(j, path, "compose"), child(path, "compose"), idx, n);
    FiniteAlgebra alg(names, std::move(compose));
    if (auto t = optional_field(j, "meet")) {
      alg.set_meet(parse_binary_table(*t, child(path, "meet"), idx, n));
    }
    if (auto t = optional_field(j, "join")) {
      alg.set_join(parse_binary_table(*t, child(path, "join"), idx, n));
    }
    if (auto t = optional_field(j, "complement")) {
      auto const p = child(path, "complement");
      require_array(*t, p, n);
      std::vector<Element> c(n);
      for (std::size_t a = 0; a < n; ++a) {
        c[a] = idx((*t)[a], child(p, a));
      }
      alg.set_complement(std::move(c));
    }
    if (auto t = optional_field(j, "order")) {
      auto const p = child(path, "order");
      require_array(*t, p, n);
      std::vector<std::uint8_t> o(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        require_array((*t)[a], child(p, a), n);
        for (std::size_t b = 0; b < n; ++b) {
          auto const& v = (*t)[a][b];
          if (!v.is_number_integer() || (v != 0 && v != 1)) {
            bad_field(child(child(p, a), b), "expected 0 or 1");
          }
          o[a * n + b] = v.get<std::uint8_t>();
        }
      }
      alg.set_order(std::move(o));
    }
    if (auto c = optional_field(j, "constants")) {
      auto const p = child(path, "constants");
      if (!c->is_object()) {
        bad_field(p, "expected an object");
      }
      for (auto const& [key, val] : c->items()) {
        auto const vp = child(p, key);
        if (key == "e") {
          alg.set_e(idx(val, vp));
        } else if (key == "zero") {
          alg.set_zero(idx(val, vp));
        } else if (key == "top") {
          alg.set_top(idx(val, vp));
        } else {
          bad_field(vp, "unknown constant (expected e, zero or top)");
        }
      }
    }
    if (auto d = optional_field(j, "designated")) {
      auto const p = child(path, "designated");
      if (!d->is_object()) {
        bad_field(p, "expected an object");
      }
      for (auto const& [key, val] : d->items()) {
        alg.designate(key, idx(val, child(p, key)));
      }
    }
    Signature sig = alg.available_signature();
    if (auto s = optional_field(j, "signature")) {
      sig = parse_signature(*s, child(path, "signature"));
      for (auto sym : sig.symbols()) {
        if (!alg.provides(sym)) {
          bad_field(child(path, "signature"),
                    "symbol '" + std::string(to_string(sym)) + "' has no table");
        }
      }
    }
    return AlgebraFile{std::move(alg), sig};
  }

  inline json algebra_to_json(FiniteAlgebra const& alg, Signature const& sig) {
    std::size_t const n     = alg.size();
    auto const&       names = alg.names();
    auto binary = [&](std::vector<Element> const& t) {
      json rows = json::array();
      for (std::size_t a = 0; a < n; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < n; ++b) {
          row.push_back(names[t[a * n + b]]);
        }
        rows.push_back(std::move(row));
      }
      return rows;
    };
    json j;
    j["elements"]  = names;
    j["signature"] = detail::signature_json(sig);
    j["compose"]   = binary(alg.compose_table());
    if (alg.meet_table()) {
      j["meet"] = binary(*alg.meet_table());
    }
    if (alg.join_table()) {
      j["join"] = binary(*alg.join_table());
    }
    if (alg.complement_table()) {
      json c = json::array();
      for (auto x : *alg.complement_table()) {
        c.push_back(names[x]);
      }
      j["complement"] = std::move(c);
    }
    if (alg.order_matrix()) {
      json rows = json::array();
      for (std::size_t a = 0; a < n; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < n; ++b) {
          row.push_back(int((*alg.order_matrix())[a * n + b]));
        }
        rows.push_back(std::move(row));
      }
      j["order"] = std::move(rows);
    }
    json constants = json::object();
    if (alg.e()) {
      constants["e"] = names[*alg.e()];
    }
    if (alg.zero()) {
      constants["zero"] = names[*alg.zero()];
    }
    if (alg.top()) {
      constants["top"] = names[*alg.top()];
    }
    if (!constants.empty()) {
      j["constants"] = std::move(constants);
    }
    if (!alg.designated().empty()) {
      json d = json::object();
      for (auto const& [key, x] : alg.designated()) {
        d[key] = names[x];
      }
      j["designated"] = std::move(d);
    }
    return j;
  }

  inline AlgebraFile load_algebra_file(std::filesystem::path const& path) {
    auto const j = read_json_file(path);
    return detail::rethrow_positioned<AlgebraFile>(
        path.string() + ": ", [&] { return algebra_from_json(j); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations and representations
  ////////////////////////////////////////////////////////////////////////

  // Sorted pair list.
  inline json relation_to_json(Relation const& r) {
    json out = json::array();
    for (auto [x, y] : r.pairs()) {
      out.push_back(json::array({x, y}));
    }
    return out;
  }

  inline Relation relation_from_json(json const&        j,
                                     std::size_t        m,
                                     std::string const& path) {
    using namespace detail;
    if (!j.is_array()) {
      bad_field(path, "expected an array of pairs");
    }
    Relation r(m);
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto const p = child(path, i);
      require_array(j[i], p, 2);
      auto const x = as_count(j[i][0], child(p, 0));
      auto const y = as_count(j[i][1], child(p, 1));
      if (x >= m || y >= m) {
        bad_field(p, "point outside the base of size " + std::to_string(m));
      }
      r.insert(static_cast<Point>(x), static_cast<Point>(y));
    }
    return r;
  }

  struct RepresentationFile {
    Representation             rep;
    Signature                  algebra_signature;
    std::optional<std::string> algebra_path;  // as written in the file
  };

  // `algebra` is either an inline algebra object or a path resolved against
  // `base_dir`.
  inline RepresentationFile representation_from_json(json const&                  j,
                                                     std::filesystem::path const& base_dir,
                                                     std::string const&           path = "") {
    using namespace detail;
    if (!j.is_object()) {
      bad_field(path, "expected an object");
    }
    auto const&                algj = require(j, path, "algebra");
    std::optional<AlgebraFile> af;
    std::optional<std::string> alg_path;
    if (algj.is_string()) {
      alg_path = algj.get<std::string>();
      af       = load_algebra_file(base_dir / *alg_path);
    } else {
      af = algebra_from_json(algj, child(path, "algebra"));
    }
    auto const m = as_count(require(j, path, "base_size"), child(path, "base_size"));
    if (m == 0 || m > max_base_size) {
      bad_field(child(path, "base_size"),
                "base size must be in 1.." + std::to_string(max_base_size));
    }
    Semantics sem = Semantics::universal;
    if (auto s = optional_field(j, "semantics")) {
      sem = parse_semantics(*s, child(path, "semantics"));
    }
    Signature sig = af->signature;
    if (auto s = optional_field(j, "signature")) {
      sig = parse_signature(*s, child(path, "signature"));
    }
    auto const& mapj = require(j, path, "map");
    auto const  mp   = child(path, "map");
    if (!mapj.is_object()) {
      bad_field(mp, "expected an object keyed by element name");
    }
    auto const&                         names = af->algebra.names();
    std::vector<std::optional<Relation>> images(names.size());
    NameIndex const                     idx(names);
    for (auto const& [key, val] : mapj.items()) {
      auto const a = idx(json(key), child(mp, key));
      images[a]    = relation_from_json(val, m, child(mp, key));
    }
    std::vector<Relation> imgs;
    for (std::size_t a = 0; a < names.size(); ++a) {
      if (!images[a]) {
        bad_field(mp, "no image for element '" + names[a] + "'");
      }
      imgs.push_back(*images[a]);
    }
    auto alg = std::make_shared<FiniteAlgebra const>(af->algebra);
    return RepresentationFile{Representation(alg, m, std::move(imgs), sig, sem),
                              af->signature, alg_path};
  }

  // With `algebra_path` the algebra is referenced, otherwise inlined.
  inline json representation_to_json(Representation const&            rep,
                                     std::optional<std::string> const& algebra_path = std::nullopt,
                                     std::optional<Signature>          algebra_signature = std::nullopt) {
    json j;
    if (algebra_path) {
      j["algebra"] = *algebra_path;
    } else {
      j["algebra"] = algebra_to_json(rep.algebra(),
                                     algebra_signature.value_or(rep.algebra().available_signature()));
    }
    j["base_size"] = rep.base_size();
    j["semantics"] = std::string(to_string(rep.semantics()));
    j["signature"] = detail::signature_json(rep.claimed_signature());
    json map       = json::object();
    for (std::size_t a = 0; a < rep.algebra().size(); ++a) {
      map[rep.algebra().name(static_cast<Element>(a))] = relation_to_json(rep(static_cast<Element>(a)));
    }
    j["map"] = std::move(map);
    return j;
  }

  inline RepresentationFile load_representation_file(std::filesystem::path const& path) {
    auto const j = read_json_file(path);
    return detail::rethrow_positioned<RepresentationFile>(path.string() + ": ", [&] {
      return representation_from_json(j, path.parent_path());
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial groups and embeddings
  ////////////////////////////////////////////////////////////////////////

  inline PartialGroup partial_group_from_json(json const& j, std::string const& path = "") {
    using namespace detail;
    if (!j.is_object()) {
      bad_field(path, "expected an object");
    }
    auto names = parse_names(require(j, path, "elements"), child(path, "elements"));
    std::size_t const n = names.size();
    NameIndex const   idx(names);
    Element const identity = idx(require(j, path, "identity"), child(path, "identity"));
    auto const&   tj       = require(j, path, "table");
    auto const    tp       = child(path, "table");
    require_array(tj, tp, n);
    std::vector<Element> table(n * n, undefined);
    for (std::size_t a = 0; a < n; ++a) {
      require_array(tj[a], child(tp, a), n);
      for (std::size_t b = 0; b < n; ++b) {
        if (!tj[a][b].is_null()) {
          table[a * n + b] = idx(tj[a][b], child(child(tp, a), b));
        }
      }
    }
    std::optional<std::vector<Element>> sqrt;
    if (auto s = optional_field(j, "sqrt")) {
      auto const sp = child(path, "sqrt");
      if (!s->is_array()) {
        bad_field(sp, "expected an array of names");
      }
      sqrt.emplace();
      for (std::size_t i = 0; i < s->size(); ++i) {
        sqrt->push_back(idx((*s)[i], child(sp, i)));
      }
    }
    return PartialGroup(std::move(names), identity, std::move(table), std::move(sqrt));
  }

  inline json partial_group_to_json(PartialGroup const& pg) {
    std::size_t const n = pg.size();
    json              j;
    j["elements"] = pg.names();
    j["identity"] = pg.name(pg.identity());
    json rows     = json::array();
    for (Element a = 0; a < n; ++a) {
      json row = json::array();
      for (Element b = 0; b < n; ++b) {
        row.push_back(pg.defined(a, b) ? json(pg.name(pg.product(a, b))) : json(nullptr));
      }
      rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    if (pg.sqrt()) {
      json s = json::array();
      for (auto a : *pg.sqrt()) {
        s.push_back(pg.name(a));
      }
      j["sqrt"] = std::move(s);
    }
    return j;
  }

  inline PartialGroup load_partial_group_file(std::filesystem::path const& path) {
    auto const j = read_json_file(path);
    return detail::rethrow_positioned<PartialGroup>(
        path.string() + ": ", [&] { return partial_group_from_json(j); });
  }

  // Element name -> one-line notation.
  inline json embedding_to_json(PartialGroup const& pg, Embedding const& phi) {
    json j;
    j["degree"] = phi.degree;
    json map    = json::object();
    for (Element a = 0; a < pg.size(); ++a) {
      map[pg.name(a)] = phi.images[a].images();
    }
    j["map"] = std::move(map);
    return j;
  }

  inline Embedding embedding_from_json(PartialGroup const& pg,
                                       json const&         j,
                                       std::string const&  path = "") {
    using namespace detail;
    Embedding phi;
    phi.degree        = as_count(require(j, path, "degree"), child(path, "degree"));
    auto const& mapj  = require(j, path, "map");
    auto const  mp    = child(path, "map");
    for (Element a = 0; a < pg.size(); ++a) {
      auto const& v  = require(mapj, mp, pg.name(a).c_str());
      auto const  vp = child(mp, pg.name(a));
      require_array(v, vp, phi.degree);
      std::vector<std::uint8_t> img;
      for (std::size_t i = 0; i < v.size(); ++i) {
        img.push_back(static_cast<std::uint8_t>(as_count(v[i], child(vp, i))));
      }
      try {
        phi.images.push_back(Permutation::from_images(std::move(img)));
      } catch (Error const& e) {
        bad_field(vp, e.detail());
      }
    }
    return phi;
  }

}  // namespace relrep

#endif  // RELREP_IO_HPP_
