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

// The relrep command-line tool. Exit status: 0 when every check passes or
// the searched object is found, 1 when a check fails or nothing is found
// within the bounds, 2 on input or usage errors.

#ifndef RELREP_CLI_HPP_
#define RELREP_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "algebra.hpp"
#include "error.hpp"
#include "io.hpp"
#include "partial_group.hpp"
#include "representation.hpp"
#include "repsearch.hpp"
#include "signature.hpp"

namespace relrep {

  inline constexpr std::string_view version = "0.1.0";

  namespace cli {

    enum Exit : int { pass = 0, fail = 1, usage = 2 };

    struct Options {
      std::string   command;
      std::string   input;
      std::string   signature;
      std::string   complement;
      bool          require_top_equiv = false;
      bool          skip_interior     = false;
      std::size_t   max_base          = 4;
      std::size_t   max_degree        = 6;
      std::uint64_t node_limit        = 10'000'000;
      std::string   output;
      bool          json = false;
    };

    ////////////////////////////////////////////////////////////////////
    // Rendering helpers
    ////////////////////////////////////////////////////////////////////

    template <typename Names>
    json element_names(Names const& names, std::vector<Element> const& xs) {
      json out = json::array();
      for (auto x : xs) {
        out.push_back(names[x]);
      }
      return out;
    }

    template <typename Names>
    std::string join_names(Names const& names, std::vector<Element> const& xs) {
      std::string s;
      for (auto x : xs) {
        s += (s.empty() ? "" : ", ") + names[x];
      }
      return s;
    }

    inline std::string join_points(std::vector<Point> const& ps) {
      std::string s;
      for (auto p : ps) {
        s += (s.empty() ? "" : ", ") + std::to_string(p);
      }
      return s;
    }

    inline json witness_json(FiniteAlgebra const& alg, Witness const& w) {
      return json{{"elements", element_names(alg.names(), w.elements)}, {"points", w.points}};
    }

    inline std::string witness_text(FiniteAlgebra const& alg, Witness const& w) {
      std::string s = "elements [" + join_names(alg.names(), w.elements) + "]";
      if (!w.points.empty()) {
        s += " points [" + join_points(w.points) + "]";
      }
      return s;
    }

    inline json partition_json(FiniteAlgebra const& alg, Partition const& p) {
      json out = json::array();
      for (auto const& cls : p) {
        out.push_back(element_names(alg.names(), cls));
      }
      return out;
    }

    inline json violations_json(FiniteAlgebra const& alg, std::vector<Violation> const& vs) {
      json out = json::array();
      for (auto const& v : vs) {
        out.push_back({{"law", std::string(to_string(v.law))},
                       {"witnesses", element_names(alg.names(), v.witnesses)}});
      }
      return out;
    }

    inline void violations_text(std::ostream&                 out,
                                FiniteAlgebra const&          alg,
                                std::vector<Violation> const& vs,
                                char const*                   label) {
      for (auto const& v : vs) {
        out << label << ": " << to_string(v.law) << " at ("
            << join_names(alg.names(), v.witnesses) << ")\n";
      }
    }

    inline json verification_json(FiniteAlgebra const& alg, VerificationReport const& v) {
      json j;
      j["ok"]       = v.ok();
      j["faithful"] = v.faithful;
      if (v.collision) {
        j["collision"] = witness_json(alg, *v.collision);
      }
      json syms = json::object();
      for (auto const& c : v.symbols) {
        json s{{"ok", c.ok}};
        if (c.witness) {
          s["witness"] = witness_json(alg, *c.witness);
        }
        syms[std::string(to_string(c.symbol))] = std::move(s);
      }
      j["symbols"] = std::move(syms);
      if (v.top_is_equivalence) {
        j["top_is_equivalence"] = *v.top_is_equivalence;
      }
      j["top_equivalence_required"] = v.top_equivalence_required;
      if (v.i_preserved) {
        j["i_preserved"] = *v.i_preserved;
        if (v.i_witness) {
          j["i_witness"] = witness_json(alg, *v.i_witness);
        }
      }
      if (v.domran_preserved) {
        j["domran_preserved"] = *v.domran_preserved;
        if (v.domran_witness) {
          j["domran_witness"] = witness_json(alg, *v.domran_witness);
        }
      }
      return j;
    }

    inline void verification_text(std::ostream&             out,
                                  FiniteAlgebra const&      alg,
                                  VerificationReport const& v) {
      auto yes = [](bool b) { return b ? "yes" : "NO"; };
      out << "faithful: " << yes(v.faithful);
      if (v.collision) {
        out << " (" << witness_text(alg, *v.collision) << ")";
      }
      out << "\n";
      for (auto const& c : v.symbols) {
        out << to_string(c.symbol) << ": " << (c.ok ? "ok" : "FAIL");
        if (c.witness) {
          out << " (" << witness_text(alg, *c.witness) << ")";
        }
        out << "\n";
      }
      if (v.top_is_equivalence) {
        out << "top is an equivalence: " << yes(*v.top_is_equivalence) << "\n";
      }
      if (v.i_preserved) {
        out << "i-elements injective: " << yes(*v.i_preserved) << "\n";
      }
      if (v.domran_preserved) {
        out << "domain/range classes concrete: " << yes(*v.domran_preserved) << "\n";
      }
    }

    ////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////

    class Runner {
     public:
      Runner(Options opts, std::ostream& out, std::ostream& err)
          : _opts(std::move(opts)), _out(out), _err(err) {}

      int run() {
        auto const& c = _opts.command;
        if (c == "validate") return validate();
        if (c == "analyze") return analyze_cmd();
        if (c == "check-rep") return check_rep();
        if (c == "search-rep") return search_rep();
        if (c == "quotient") return quotient_cmd();
        if (c == "interior") return interior_cmd();
        if (c == "pipeline") return pipeline_cmd();
        if (c == "pg-validate") return pg_validate();
        if (c == "pg-embed") return pg_embed();
        throw Error(ErrorKind::invalid_argument, "unknown command '" + c + "'");
      }

     private:
      json config() const {
        json c{{"input", _opts.input}};
        if (!_opts.signature.empty()) {
          c["signature"] = _opts.signature;
        }
        if (!_opts.complement.empty()) {
          c["complement"] = _opts.complement;
        }
        auto const& cmd = _opts.command;
        if (cmd == "check-rep" || cmd == "search-rep") {
          c["require_top_equiv"] = _opts.require_top_equiv;
        }
        if (cmd == "search-rep") {
          c["max_base"] = _opts.max_base;
        }
        if (cmd == "search-rep" || cmd == "pg-embed") {
          c["node_limit"] = _opts.node_limit;
        }
        if (cmd == "pg-embed") {
          c["max_degree"] = _opts.max_degree;
        }
        if (cmd == "pipeline") {
          c["skip_interior"] = _opts.skip_interior;
        }
        return c;
      }

      int finish(json result, bool ok, std::string const& text) {
        if (_opts.json) {
          json j{{"tool", "relrep"},
                 {"version", std::string(version)},
                 {"command", _opts.command},
                 {"config", config()},
                 {"result", std::move(result)},
                 {"verdict", ok ? "pass" : "fail"}};
          _out << canonical_dump(j);
        } else {
          _out << text << "verdict: " << (ok ? "pass" : "fail") << "\n";
        }
        return ok ? pass : fail;
      }

      void write_output(json const& j) {
        if (!_opts.output.empty()) {
          write_text_file(_opts.output, canonical_dump(j));
        }
      }

      Signature signature_or(Signature fallback) const {
        return _opts.signature.empty() ? fallback : Signature::parse(_opts.signature);
      }

      std::optional<Semantics> semantics_flag() const {
        if (_opts.complement.empty()) {
          return std::nullopt;
        }
        auto s = semantics_from_string(_opts.complement);
        if (!s) {
          throw Error(ErrorKind::invalid_argument,
                      "--complement must be relative or universal");
        }
        return s;
      }

      RepresentationFile load_rep() const {
        auto f = load_representation_file(_opts.input);
        if (!_opts.signature.empty()) {
          f.rep = f.rep.with_signature(Signature::parse(_opts.signature));
        }
        if (auto s = semantics_flag()) {
          f.rep = f.rep.with_semantics(*s);
        }
        for (auto sym : f.rep.claimed_signature().symbols()) {
          if (!f.rep.algebra().provides(sym)) {
            throw Error(ErrorKind::missing_table,
                        "signature symbol '" + std::string(to_string(sym))
                            + "' has no table in the algebra");
          }
        }
        return f;
      }

      int validate() {
        auto       f   = load_algebra_file(_opts.input);
        auto const sig = signature_or(f.signature);
        auto const vs  = validate_algebra(f.algebra, sig, 8);
        auto const ws  = representability_warnings(f.algebra);
        std::ostringstream text;
        text << "elements: " << f.algebra.size() << "\nsignature: " << sig.to_string() << "\n";
        violations_text(text, f.algebra, vs, "violation");
        violations_text(text, f.algebra, ws, "warning");
        json r{{"elements", f.algebra.size()},
               {"signature", sig.to_string()},
               {"violations", violations_json(f.algebra, vs)},
               {"warnings", violations_json(f.algebra, ws)}};
        return finish(std::move(r), vs.empty(), text.str());
      }

      int analyze_cmd() {
        auto        f   = load_algebra_file(_opts.input);
        auto const& alg = f.algebra;
        auto const  a   = analyze(alg);
        auto const& nm  = alg.names();
        std::ostringstream text;
        json r;
        r["elements"]    = alg.size();
        r["signature"]   = alg.available_signature().to_string();
        r["idempotents"] = element_names(nm, a.idempotents);
        text << "elements: " << alg.size() << "\n"
             << "idempotents: " << join_names(nm, a.idempotents) << "\n";
        if (a.i_elements) {
          r["i_elements"] = element_names(nm, *a.i_elements);
          text << "i-elements: " << join_names(nm, *a.i_elements) << "\n";
        }
        if (a.normal) {
          r["normal"]              = *a.normal;
          r["normality_witnesses"] = element_names(nm, a.normality_witnesses);
          text << "normal: " << (*a.normal ? "yes" : "no");
          if (!*a.normal) {
            text << " (" << join_names(nm, a.normality_witnesses) << ")";
          }
          text << "\n";
        }
        auto classes_text = [&](char const* label, Partition const& p) {
          text << label << ":";
          for (auto const& cls : p) {
            text << " {" << join_names(nm, cls) << "}";
          }
          text << "\n";
        };
        if (a.dom_classes) {
          r["domain_classes"] = partition_json(alg, *a.dom_classes);
          classes_text("domain classes", *a.dom_classes);
        }
        if (a.ran_classes) {
          r["range_classes"] = partition_json(alg, *a.ran_classes);
          classes_text("range classes", *a.ran_classes);
        }
        r["violations"] = violations_json(alg, a.violations);
        r["warnings"]   = violations_json(alg, a.warnings);
        violations_text(text, alg, a.violations, "violation");
        violations_text(text, alg, a.warnings, "warning");
        return finish(std::move(r), a.violations.empty(), text.str());
      }

      VerifyOptions verify_options() const {
        VerifyOptions vo;
        vo.require_top_equiv = _opts.require_top_equiv;
        return vo;
      }

      int check_rep() {
        auto       f = load_rep();
        auto const v = verify_representation(f.rep, verify_options());
        // echoed with the algebra inlined so it stands alone
        auto const echoed = representation_to_json(f.rep, std::nullopt, f.algebra_signature);
        write_output(echoed);
        std::ostringstream text;
        text << "base size: " << f.rep.base_size() << "\n"
             << "semantics: " << to_string(f.rep.semantics()) << "\n"
             << "signature: " << f.rep.claimed_signature().to_string() << "\n";
        verification_text(text, f.rep.algebra(), v);
        json r{{"verification", verification_json(f.rep.algebra(), v)},
               {"representation", echoed}};
        return finish(std::move(r), v.ok(), text.str());
      }

      int search_rep() {
        auto       f   = load_algebra_file(_opts.input);
        auto const sig = signature_or(f.signature);
        auto const vs  = validate_algebra(f.algebra, sig, 8);
        if (!vs.empty()) {
          std::ostringstream d;
          violations_text(d, f.algebra, vs, "violation");
          _err << d.str();
          throw Error(ErrorKind::precondition_failed,
                      "the algebra violates the laws of its signature");
        }
        SearchConfig cfg;
        cfg.max_base          = _opts.max_base;
        cfg.semantics         = semantics_flag().value_or(Semantics::universal);
        cfg.require_top_equiv = _opts.require_top_equiv;
        cfg.node_limit        = _opts.node_limit;
        auto const o          = search_representation(f.algebra, sig, cfg);

        std::ostringstream text;
        json               r;
        r["status"] = std::string(to_string(o.status));
        r["bound"]  = o.bound;
        r["nodes"]  = o.stats.nodes;
        json per    = json::array();
        for (auto const& b : o.stats.per_base) {
          per.push_back({{"base_size", b.base_size},
                         {"nodes", b.nodes},
                         {"status", std::string(to_string(b.status))}});
        }
        r["per_base"] = std::move(per);
        switch (o.status) {
          case SearchStatus::found:
            text << "found a representation on " << o.representation->base_size()
                 << " points\n";
            for (Element a = 0; a < f.algebra.size(); ++a) {
              text << "  " << f.algebra.name(a) << " -> "
                   << relation_to_json((*o.representation)(a)).dump() << "\n";
            }
            break;
          case SearchStatus::not_found:
            text << "no representation on at most " << o.bound << " points\n";
            break;
          case SearchStatus::resource_exhausted:
            text << "node limit reached while searching base size " << o.bound << "\n";
            break;
        }
        text << "nodes: " << o.stats.nodes << "\n";
        if (o.representation) {
          auto rj = representation_to_json(*o.representation, std::nullopt, f.signature);
          write_output(rj);
          r["representation"] = std::move(rj);
        }
        return finish(std::move(r), o.status == SearchStatus::found, text.str());
      }

      // Shared tail of the commands that transform a representation.
      int transformed(RepresentationFile const& f,
                      Representation const&     result,
                      json                      extra,
                      std::string const&        note) {
        auto const v  = verify_representation(result, verify_options());
        auto const rj = representation_to_json(result, std::nullopt, f.algebra_signature);
        write_output(rj);
        std::ostringstream text;
        text << note << "base size: " << f.rep.base_size() << " -> " << result.base_size() << "\n";
        verification_text(text, result.algebra(), v);
        extra["input_base_size"] = f.rep.base_size();
        extra["verification"]    = verification_json(result.algebra(), v);
        extra["representation"]  = rj;
        return finish(std::move(extra), v.ok(), text.str());
      }

      int quotient_cmd() {
        auto       f = load_rep();
        auto const q = quotient(f.rep);
        return transformed(f, q.rep,
                           json{{"class_of", q.class_of}, {"representatives", q.representatives}},
                           "");
      }

      int interior_cmd() {
        auto       f = load_rep();
        auto const r = symmetric_interior(f.rep);
        return transformed(f, r, json::object(), "");
      }

      int pipeline_cmd() {
        auto            f = load_rep();
        PipelineOptions po;
        po.finite_base    = !_opts.skip_interior;
        auto const  p     = injectivize_pipeline(f.rep, po);
        auto const& alg   = f.rep.algebra();
        auto const  rj    = representation_to_json(p.output, std::nullopt, f.algebra_signature);
        write_output(rj);
        std::ostringstream text;
        text << "route: " << p.route << "\n";
        json stages = json::array();
        for (auto const& s : p.stages) {
          text << "  " << s.name << ": " << s.base_size << " points; " << s.note << "\n";
          stages.push_back({{"name", s.name}, {"base_size", s.base_size}, {"note", s.note}});
        }
        text << "i-elements: " << join_names(alg.names(), p.i_elements) << "\n";
        verification_text(text, alg, p.final_check);
        json r{{"route", p.route},
               {"stages", std::move(stages)},
               {"i_elements", element_names(alg.names(), p.i_elements)},
               {"origin", p.origin},
               {"verification", verification_json(alg, p.final_check)},
               {"representation", rj}};
        return finish(std::move(r), p.ok(), text.str());
      }

      static json pg_violations_json(PartialGroup const& pg, PartialGroupReport const& rep) {
        json out = json::array();
        for (auto const& v : rep.violations) {
          out.push_back({{"axiom", std::string(to_string(v.axiom))},
                         {"witnesses", element_names(pg.names(), v.witnesses)}});
        }
        return out;
      }

      static void pg_violations_text(std::ostream&             out,
                                     PartialGroup const&       pg,
                                     PartialGroupReport const& rep) {
        for (auto const& v : rep.violations) {
          out << "violation: " << to_string(v.axiom) << " at ("
              << join_names(pg.names(), v.witnesses) << ")\n";
        }
      }

      int pg_validate() {
        auto const pg  = load_partial_group_file(_opts.input);
        auto const rep = validate_partial_group(pg, 8);
        std::ostringstream text;
        text << "elements: " << pg.size() << "\n";
        json r{{"elements", pg.size()}, {"violations", pg_violations_json(pg, rep)}};
        if (rep.sqrt) {
          r["sqrt"]          = element_names(pg.names(), *rep.sqrt);
          r["sqrt_inferred"] = rep.sqrt_inferred;
          text << "sqrt" << (rep.sqrt_inferred ? " (inferred)" : "") << ": "
               << join_names(pg.names(), *rep.sqrt) << "\n";
        }
        pg_violations_text(text, pg, rep);
        return finish(std::move(r), rep.ok(), text.str());
      }

      int pg_embed() {
        auto const pg  = load_partial_group_file(_opts.input);
        auto const rep = validate_partial_group(pg, 8);
        if (!rep.ok()) {
          std::ostringstream d;
          pg_violations_text(d, pg, rep);
          _err << d.str();
          throw Error(ErrorKind::precondition_failed,
                      "the partial group violates its axioms");
        }
        auto const o = embed_search(pg, _opts.max_degree, _opts.node_limit);
        std::ostringstream text;
        json r{{"status", std::string(to_string(o.status))},
               {"bound", o.bound},
               {"nodes", o.nodes}};
        switch (o.status) {
          case EmbedStatus::found: {
            auto ej = embedding_to_json(pg, *o.embedding);
            write_output(ej);
            text << "embedding into permutations of " << o.embedding->degree << " points\n";
            for (Element a = 0; a < pg.size(); ++a) {
              text << "  " << pg.name(a) << " -> "
                   << json(o.embedding->images[a].images()).dump() << "\n";
            }
            r["embedding"] = std::move(ej);
            break;
          }
          case EmbedStatus::not_found:
            text << "no embedding of degree at most " << o.bound << "\n";
            break;
          case EmbedStatus::resource_exhausted:
            text << "node limit reached at degree " << o.bound << "\n";
            break;
        }
        return finish(std::move(r), o.status == EmbedStatus::found, text.str());
      }

      Options       _opts;
      std::ostream& _out;
      std::ostream& _err;
    };

  }  // namespace cli

  // Runs the tool on `args` (without the program name).
  inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    cli::Options opts;
    CLI::App     app{"Representability checks for finite algebras of binary relations",
                     "relrep"};
    app.set_version_flag("--version", std::string(version));
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* sub, char const* what) {
      sub->add_option("input", opts.input, what)->required();
      sub->add_flag("--json", opts.json, "Print the machine-readable report");
    };
    auto add_signature = [&](CLI::App* sub) {
      sub->add_option("--signature", opts.signature,
                      "Comma-separated symbols: compose,meet,join,complement,order,e,zero,top");
    };
    auto add_complement = [&](CLI::App* sub) {
      sub->add_option("--complement", opts.complement, "Complement semantics")
          ->check(CLI::IsMember({"relative", "universal"}));
    };
    auto add_top_equiv = [&](CLI::App* sub) {
      sub->add_flag("--require-top-equiv", opts.require_top_equiv,
                    "Require top to be represented as an equivalence relation");
    };
    auto add_output = [&](CLI::App* sub, char const* what) {
      sub->add_option("-o,--output", opts.output, what);
    };

    auto* validate = app.add_subcommand("validate", "Check the laws of an algebra file");
    add_input(validate, "Algebra file");
    add_signature(validate);

    auto* analyze_cmd = app.add_subcommand("analyze", "Derived notions of an algebra file");
    add_input(analyze_cmd, "Algebra file");

    auto* check = app.add_subcommand("check-rep", "Verify a representation file");
    add_input(check, "Representation file");
    add_signature(check);
    add_complement(check);
    add_top_equiv(check);
    add_output(check, "Write the checked representation with its algebra inlined");

    auto* search = app.add_subcommand("search-rep", "Search for a representation on a small base");
    add_input(search, "Algebra file");
    add_signature(search);
    add_complement(search);
    add_top_equiv(search);
    search->add_option("--max-base", opts.max_base, "Largest base size tried")
        ->check(CLI::Range(std::size_t(1), max_base_size));
    search->add_option("--node-limit", opts.node_limit, "Search node budget")
        ->check(CLI::PositiveNumber);
    add_output(search, "Write the representation found");

    auto* quot = app.add_subcommand("quotient", "Collapse points where the identity is universal");
    add_input(quot, "Representation file");
    add_signature(quot);
    add_complement(quot);
    add_output(quot, "Write the quotient representation");

    auto* inter = app.add_subcommand("interior", "Cut images to the symmetric part of top");
    add_input(inter, "Representation file");
    add_signature(inter);
    add_complement(inter);
    add_output(inter, "Write the resulting representation");

    auto* pipe = app.add_subcommand(
        "pipeline", "Make top an equivalence and injective-function elements injective");
    add_input(pipe, "Representation file");
    add_signature(pipe);
    add_complement(pipe);
    pipe->add_flag("--skip-interior", opts.skip_interior,
                   "Require top to be an equivalence already instead of taking its interior");
    add_output(pipe, "Write the output representation");

    auto* pgv = app.add_subcommand("pg-validate", "Check the axioms of a partial group file");
    add_input(pgv, "Partial group file");

    auto* pge = app.add_subcommand("pg-embed", "Search for an embedding into a symmetric group");
    add_input(pge, "Partial group file");
    pge->add_option("--max-degree", opts.max_degree, "Largest permutation degree tried")
        ->check(CLI::Range(std::size_t(1), max_degree));
    pge->add_option("--node-limit", opts.node_limit, "Search node budget")
        ->check(CLI::PositiveNumber);
    add_output(pge, "Write the embedding found");

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForVersion const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return cli::usage;
    }
    opts.command = app.get_subcommands().front()->get_name();
    try {
      return cli::Runner(opts, out, err).run();
    } catch (Error const& e) {
      err << "relrep: " << e.what() << "\n";
      return cli::usage;
    } catch (nlohmann::json::exception const& e) {
      err << "relrep: ParseError: " << e.what() << "\n";
      return cli::usage;
    }
  }

}  // namespace relrep

#endif  // RELREP_CLI_HPP_
