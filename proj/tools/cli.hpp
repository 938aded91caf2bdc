/*  Copyright 2026 The rdfkit authors.

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License. */

/**
   @file cli.hpp
   The rdfkit command line, as a function over argument and stream objects.

   Exit codes: 0 success or predicate true, 1 predicate false, 2 usage or
   parse error, 3 step budget exhausted. Predicates print "true" or "false".
   A JSON config file named by $RDFKIT_CONFIG may set recognized_datatypes,
   prefixes and step_budget; flags override it.
*/

#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdfkit/rdfkit.hpp"

namespace rdfkit::cli {

enum ExitCode { kTrue = 0, kFalse = 1, kUsage = 2, kExhausted = 3 };

struct CliConfig {
  DatatypeSet recognized_datatypes = default_datatypes();
  PrefixMap default_prefixes = common_prefixes();
  std::uint64_t step_budget = 10'000'000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads the config named by $RDFKIT_CONFIG, if set.
inline CliConfig load_config() {
  CliConfig cfg;
  const char* path = std::getenv("RDFKIT_CONFIG");
  if (!path || !*path) return cfg;
  std::ifstream f(path);
  if (!f) throw UsageError(std::string("cannot open config ") + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string(path) + ": " + e.what());
  }
  try {
    if (j.contains("recognized_datatypes")) {
      DatatypeSet D;
      for (const auto& s : j.at("recognized_datatypes")) {
        const Iri iri(s.get<std::string>());
        auto dt = builtin_datatype(iri);
        if (!dt) throw UsageError(std::string(path) + ": no lexical mapping for datatype <" + iri.value() + ">");
        D.add(std::move(*dt));
      }
      if (!D.contains(vocab::xsd_string()) || !D.contains(vocab::rdf_lang_string())) {
        throw UsageError(std::string(path) + ": recognized_datatypes must include xsd:string and rdf:langString");
      }
      cfg.recognized_datatypes = std::move(D);
    }
    if (j.contains("prefixes")) {
      for (const auto& [prefix, ns] : j.at("prefixes").items()) {
        cfg.default_prefixes.bind(prefix, Iri(ns.get<std::string>()));
      }
    }
    if (j.contains("step_budget")) {
      const auto b = j.at("step_budget").get<std::int64_t>();
      if (b <= 0) throw UsageError(std::string(path) + ": step_budget must be positive");
      cfg.step_budget = static_cast<std::uint64_t>(b);
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string(path) + ": " + e.what());
  } catch (const Error& e) {
    throw UsageError(std::string(path) + ": " + e.what());
  }
  return cfg;
}

enum class Format { Nt, Nq, Ttl, Trig };

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "nt") return Format::Nt;
  if (s == "nq") return Format::Nq;
  if (s == "ttl") return Format::Ttl;
  if (s == "trig") return Format::Trig;
  return std::nullopt;
}

inline Format format_for(const std::string& path, const std::string& flag) {
  if (!flag.empty()) {
    if (auto f = parse_format(flag)) return *f;
    throw UsageError("unknown format '" + flag + "' (nt, nq, ttl, trig)");
  }
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    if (auto f = parse_format(path.substr(dot + 1))) return *f;
  }
  throw UsageError("cannot infer the format of '" + path + "'; use --from/--to");
}

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& path, const ParseError& e)
      : std::runtime_error(path + ":" + e.what()) {}
};

inline std::string slurp(const std::string& path, Io& io) {
  if (path == "-") return {std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline StarDocument read_document(const std::string& path, const std::string& from, Io& io,
                                  bool allow_embedded = false) {
  const Format fmt = format_for(path, from);
  const std::string text = slurp(path, io);
  ParseOptions opts;
  opts.allow_embedded_triples = allow_embedded;
  try {
    StarDocument doc;
    switch (fmt) {
      case Format::Nt: doc.dataset.default_graph = parse_ntriples(text); break;
      case Format::Nq: doc.dataset = parse_nquads(text); break;
      case Format::Ttl: doc = parse_turtle_document(text, opts); break;
      case Format::Trig: doc = parse_trig_document(text, opts); break;
    }
    return doc;
  } catch (const ParseError& e) {
    throw InputError(path, e);
  }
}

inline Graph read_graph(const std::string& path, const std::string& from, Io& io) {
  StarDocument doc = read_document(path, from, io);
  if (!doc.dataset.named_graphs.empty()) throw UsageError(path + ": expected a graph, found named graphs");
  return std::move(doc.dataset.default_graph);
}

inline PrefixMap output_prefixes(const CliConfig& cfg, const PrefixMap& from_input = {}) {
  PrefixMap pm = cfg.default_prefixes;
  for (const auto& [p, ns] : from_input.bindings()) pm.bind(p, ns);
  return pm;
}

inline std::string render(const StarDocument& doc, Format fmt, const PrefixMap& pm) {
  const bool star = !doc.annotated.empty() || !doc.references.empty();
  const bool named = !doc.dataset.named_graphs.empty();
  if (star && fmt != Format::Ttl) throw UsageError("embedded triples can only be written as ttl");
  switch (fmt) {
    case Format::Nt:
      if (named) throw UsageError("named graphs cannot be written as nt; use nq or trig");
      return serialize_ntriples(doc.dataset.default_graph);
    case Format::Nq:
      return serialize_nquads(doc.dataset);
    case Format::Ttl:
      if (named) throw UsageError("named graphs cannot be written as ttl; use nq or trig");
      return star ? serialize_turtle(doc, pm) : serialize_turtle(doc.dataset.default_graph, pm);
    case Format::Trig:
      return serialize_trig(doc.dataset, pm);
  }
  return {};
}

inline void write_output(const std::string& text, const std::string& path, Io& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

inline StarDocument as_document(Graph g) {
  StarDocument doc;
  doc.dataset.default_graph = std::move(g);
  return doc;
}

inline int predicate(bool value, Io& io) {
  io.out << (value ? "true" : "false") << "\n";
  return value ? kTrue : kFalse;
}

inline int exhausted(Io& io) {
  io.out << "unknown\n";
  io.err << "step budget exhausted\n";
  return kExhausted;
}

inline std::string show(const Term& t) {
  std::string s;
  detail::write_term_nt(s, t);
  return s;
}

// Runs one command line. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"RDF 1.1 toolkit", "rdfkit"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--budget", budget_flag, "search step budget");

  std::string from, to, in_path = "-", out_path = "-";
  auto* convert = app.add_subcommand("convert", "convert between nt, nq, ttl and trig");
  convert->add_option("--from", from, "input format");
  convert->add_option("--to", to, "output format");
  convert->add_option("--in", in_path, "input path or -");
  convert->add_option("--out", out_path, "output path or -");

  std::string a, b;
  auto* iso = app.add_subcommand("isomorphic", "graph isomorphism");
  iso->add_option("A", a)->required();
  iso->add_option("B", b)->required();
  iso->add_option("--from", from, "input format");

  auto* dsiso = app.add_subcommand("dataset-isomorphic", "dataset isomorphism");
  dsiso->add_option("A", a)->required();
  dsiso->add_option("B", b)->required();
  dsiso->add_option("--from", from, "input format");

  auto* merge_cmd = app.add_subcommand("merge", "merge two graphs apart");
  merge_cmd->add_option("A", a)->required();
  merge_cmd->add_option("B", b)->required();
  merge_cmd->add_option("--out", out_path, "output path or -");
  merge_cmd->add_option("--from", from, "input format");
  merge_cmd->add_option("--to", to, "output format");

  std::string base;
  bool deterministic = false;
  auto* skolem_cmd = app.add_subcommand("skolemize", "replace blank nodes by genid IRIs");
  skolem_cmd->add_option("--base", base, "base IRI")->required();
  skolem_cmd->add_flag("--deterministic", deterministic, "ids b0, b1, ...");
  skolem_cmd->add_option("IN", in_path);
  skolem_cmd->add_option("--out", out_path, "output path or -");
  skolem_cmd->add_option("--from", from, "input format");
  skolem_cmd->add_option("--to", to, "output format");

  auto* lean_cmd = app.add_subcommand("lean", "is the graph lean");
  lean_cmd->add_option("IN", in_path)->required();
  lean_cmd->add_option("--from", from, "input format");

  auto* wb_cmd = app.add_subcommand("wellbehaved", "is the graph writable without blank labels");
  wb_cmd->add_option("IN", in_path)->required();
  wb_cmd->add_option("--from", from, "input format");

  std::string regime;
  auto* entails_cmd = app.add_subcommand("entails", "does G entail H");
  entails_cmd->add_option("--regime", regime, "simple, rdf or rdfs")
      ->required()
      ->check(CLI::IsMember({"simple", "rdf", "rdfs"}));
  entails_cmd->add_option("G", a)->required();
  entails_cmd->add_option("H", b)->required();
  entails_cmd->add_option("--from", from, "input format");

  auto* closure_cmd = app.add_subcommand("closure", "rule closure");
  closure_cmd->add_option("--regime", regime, "rdf or rdfs")->required()->check(CLI::IsMember({"rdf", "rdfs"}));
  closure_cmd->add_option("IN", in_path)->required();
  closure_cmd->add_option("--out", out_path, "output path or -");
  closure_cmd->add_option("--from", from, "input format");
  closure_cmd->add_option("--to", to, "output format");

  std::string scheme_name;
  auto* reify_cmd = app.add_subcommand("reify", "encode Turtle-star annotations");
  reify_cmd->add_option("--scheme", scheme_name, "sr, nr, rdr, sp or ng")
      ->required()
      ->check(CLI::IsMember({"sr", "nr", "rdr", "sp", "ng"}));
  reify_cmd->add_option("IN", in_path)->required();
  reify_cmd->add_option("--out", out_path, "output path or -");
  reify_cmd->add_option("--to", to, "output format");

  auto* unreify_cmd = app.add_subcommand("unreify", "decode to Turtle-star annotations");
  unreify_cmd->add_option("--scheme", scheme_name, "sr, nr, rdr, sp or ng")
      ->required()
      ->check(CLI::IsMember({"sr", "nr", "rdr", "sp", "ng"}));
  unreify_cmd->add_option("IN", in_path)->required();
  unreify_cmd->add_option("--out", out_path, "output path or -");
  unreify_cmd->add_option("--from", from, "input format");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "rdfkit: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const CliConfig cfg = load_config();
    const SearchBudget budget{budget_flag ? *budget_flag : cfg.step_budget};
    const DatatypeSet& D = cfg.recognized_datatypes;

    if (convert->parsed()) {
      if (in_path == "-" && from.empty()) throw UsageError("reading stdin needs --from");
      if (out_path == "-" && to.empty()) throw UsageError("writing stdout needs --to");
      StarDocument doc = read_document(in_path, from, io, true);
      write_output(render(doc, format_for(out_path, to), output_prefixes(cfg, doc.prefixes)), out_path, io);
      return kTrue;
    }
    if (iso->parsed()) {
      auto r = isomorphism(read_graph(a, from, io), read_graph(b, from, io), budget);
      if (r.exhausted()) return exhausted(io);
      return predicate(r.found(), io);
    }
    if (dsiso->parsed()) {
      auto r = dataset_isomorphism(read_document(a, from, io).dataset, read_document(b, from, io).dataset, budget);
      if (r.exhausted()) return exhausted(io);
      return predicate(r.found(), io);
    }
    if (merge_cmd->parsed()) {
      const Graph g = merge(read_graph(a, from, io), read_graph(b, from, io));
      const Format fmt = out_path == "-" && to.empty() ? Format::Nt : format_for(out_path, to);
      write_output(render(as_document(g), fmt, output_prefixes(cfg)), out_path, io);
      return kTrue;
    }
    if (skolem_cmd->parsed()) {
      SkolemPolicy policy{Iri(base), deterministic, std::nullopt};
      const Graph g = skolemize(read_graph(in_path, from, io), policy);
      const Format fmt = out_path == "-" && to.empty() ? Format::Nt : format_for(out_path, to);
      write_output(render(as_document(g), fmt, output_prefixes(cfg)), out_path, io);
      return kTrue;
    }
    if (lean_cmd->parsed()) {
      auto r = lean_check(read_graph(in_path, from, io), budget);
      if (r.exhausted()) return exhausted(io);
      const int code = predicate(r.lean(), io);
      if (r.witness) {
        for (const auto& [blank, image] : *r.witness) {
          if (Term(blank) != image) out << show(Term(blank)) << " -> " << show(image) << "\n";
        }
      }
      return code;
    }
    if (wb_cmd->parsed()) {
      return predicate(is_well_behaved(read_graph(in_path, from, io)), io);
    }
    if (entails_cmd->parsed()) {
      const EntailmentRegime r = regime == "simple" ? EntailmentRegime::Simple
                                 : regime == "rdf"  ? EntailmentRegime::Rdf
                                                    : EntailmentRegime::Rdfs;
      auto result = entailment(read_graph(a, from, io), read_graph(b, from, io), r, D, budget);
      if (result.exhausted()) return exhausted(io);
      return predicate(result.found(), io);
    }
    if (closure_cmd->parsed()) {
      const RuleSet rs = regime == "rdf" ? rdf_rules() : rdfs_rules();
      const Graph g = apply_rules(read_graph(in_path, from, io), rs, D);
      const Format fmt = out_path == "-" && to.empty() ? Format::Nt : format_for(out_path, to);
      write_output(render(as_document(g), fmt, output_prefixes(cfg)), out_path, io);
      return kTrue;
    }
    if (reify_cmd->parsed()) {
      const ReificationScheme scheme = *parse_scheme(scheme_name);
      StarDocument input = read_document(in_path, "ttl", io, true);
      if (!input.references.empty()) throw UsageError(in_path + ": embedded triples in object position are not statements");
      StarDocument encoded = encode(input.annotated, scheme);
      // Plain triples of the input pass through.
      for (const auto& t : input.dataset.default_graph) encoded.dataset.default_graph.insert(t);
      const Format fallback = scheme == ReificationScheme::Ng ? Format::Trig : Format::Ttl;
      const Format fmt = out_path == "-" && to.empty() ? fallback : format_for(out_path, to);
      write_output(render(encoded, fmt, output_prefixes(cfg, input.prefixes)), out_path, io);
      return kTrue;
    }
    if (unreify_cmd->parsed()) {
      const ReificationScheme scheme = *parse_scheme(scheme_name);
      StarDocument input = read_document(in_path, from, io, scheme == ReificationScheme::Rdr);
      Decoded d = decode(input, scheme);
      StarDocument doc;
      doc.dataset.default_graph = d.residual.default_graph;
      doc.annotated = d.statements;
      doc.references = d.references;
      std::string text = serialize_turtle(doc, output_prefixes(cfg, input.prefixes));
      for (const auto& [name, g] : d.residual.named_graphs) {
        text += show(to_term(name)) + " {\n";
        for (const auto& t : g) {
          text += "  " + show(t.subject()) + " " + show(Term(t.predicate())) + " " + show(t.object()) + " .\n";
        }
        text += "}\n";
      }
      write_output(text, out_path, io);
      return kTrue;
    }
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "rdfkit: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "rdfkit: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace rdfkit::cli
