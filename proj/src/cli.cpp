// Copyright 2026 The provrdf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "provrdf/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "provrdf/corpus.hpp"
#include "provrdf/errors.hpp"
#include "provrdf/evidence.hpp"
#include "provrdf/sparql.hpp"
#include "provrdf/turtle.hpp"
#include "provrdf/uniprot_xml.hpp"

namespace provrdf::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  using Error::Error;
};

/// SyntaxError annotated with the file it came from.
class FileSyntaxError : public Error {
 public:
  FileSyntaxError(const std::string& file, const SyntaxError& e) : Error(file + ":" + e.what()) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename F>
auto in_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const SyntaxError& e) {
    throw FileSyntaxError(path, e);
  }
}

/// Writes `content` to `path` through a temporary file in the same directory
/// and a rename, so a failed command never leaves a partial file behind.
void write_atomically(const std::string& path, const std::string& content) {
  const fs::path target(path);
  const fs::path tmp = target.parent_path() / ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into " + path);
  }
}

struct Globals {
  std::string prefixes_path;
  std::string policy_path;
  bool quiet = false;
};

class Session {
 public:
  Session(const Globals& g, std::ostream& out, std::ostream& err) : globals_(g), out_(out), err_(err) {}

  PrefixTable prefixes() const {
    PrefixTable table = PrefixTable::defaults();
    if (!globals_.prefixes_path.empty()) {
      const std::string text = read_file(globals_.prefixes_path);
      table.merge(in_file(globals_.prefixes_path, [&] { return parse_turtle(text, PrefixTable{}); }).prefixes);
    }
    return table;
  }

  ConversionPolicy policy(const PrefixTable& prefixes) const {
    if (globals_.policy_path.empty()) return ConversionPolicy::defaults(prefixes);
    const std::string text = read_file(globals_.policy_path);
    return in_file(globals_.policy_path, [&] { return ConversionPolicy::parse(text, prefixes); });
  }

  void warn(const std::string& message) const {
    if (!globals_.quiet) err_ << "warning: " << message << '\n';
  }

  void note(const std::string& message) const {
    if (!globals_.quiet) err_ << message << '\n';
  }

  void emit(const std::string& output_path, const std::string& content) const {
    if (output_path.empty()) {
      out_ << content;
    } else {
      write_atomically(output_path, content);
    }
  }

  TripleSet load(const std::vector<std::string>& paths, const PrefixTable& prefixes) const {
    TripleSet store;
    for (const std::string& path : paths) {
      const std::string text = read_file(path);
      TurtleDocument doc = in_file(path, [&] { return parse_turtle(text, prefixes); });
      for (const auto& w : doc.report.warnings) warn(path + ":" + w);
      if (doc.report.normalized > 0) {
        warn(path + ": normalized " + std::to_string(doc.report.normalized) +
             " capitalized rdf:Subject/Predicate/Object occurrence(s)");
      }
      if (paths.size() == 1) return std::move(doc.triples);
      store.merge_scoped(doc.triples);
    }
    return store;
  }

  std::ostream& out() const { return out_; }

 private:
  const Globals& globals_;
  std::ostream& out_;
  std::ostream& err_;
};

std::string summary(const ResolutionReport& r) {
  return std::to_string(r.resolved.size()) + " resolved, " + std::to_string(r.dangling.size()) + " dangling, " +
         std::to_string(r.unused.size()) + " unused";
}

std::string link_owner(const EntryDocument& doc, const EvidenceLink& link) {
  return link.on_container ? doc.containers[link.index].name : doc.values[link.index].path;
}

int cmd_convert(const Session& s, const std::vector<std::string>& inputs, const std::string& output) {
  const PrefixTable prefixes = s.prefixes();
  Converter converter(s.policy(prefixes), Vocabulary::from(prefixes));
  for (const std::string& path : inputs) {
    const std::string text = read_file(path);
    const auto docs = in_file(path, [&] { return parse_entries_xml(text); });
    for (const EntryDocument& doc : docs) {
      const ResolutionReport report = converter.add(doc);
      s.note(path + ": entry " + doc.accession + ": " + summary(report));
    }
  }
  for (const auto& w : converter.warnings()) s.warn(w);
  s.emit(output, serialize_turtle(converter.triples(), prefixes));
  return kSuccess;
}

int cmd_validate(const Session& s, const std::vector<std::string>& inputs) {
  bool dangling = false;
  for (const std::string& path : inputs) {
    const std::string text = read_file(path);
    const auto docs = in_file(path, [&] { return parse_entries_xml(text); });
    for (const EntryDocument& doc : docs) {
      const ResolutionReport report = resolve_evidence(doc);
      s.out() << path << ": entry " << doc.accession << ": " << summary(report) << '\n';
      for (const EvidenceLink& link : report.dangling) {
        s.out() << path << ": dangling evidence key " << link.key << " on " << link_owner(doc, link) << '\n';
        dangling = true;
      }
      for (const std::string& key : report.unused) {
        s.warn(path + ": unused evidence declaration " + key + " in entry " + doc.accession);
      }
    }
  }
  return dangling ? kDataError : kSuccess;
}

sparql::Query load_query(const Session& s, const std::string& path, const PrefixTable& prefixes) {
  const std::string text = read_file(path);
  sparql::Query q = in_file(path, [&] { return sparql::parse_query(text, prefixes); });
  for (const auto& w : q.warnings) s.warn(path + ": " + w);
  return q;
}

int cmd_query(const Session& s, const std::string& data, const std::string& query_path, bool strict_type) {
  const PrefixTable prefixes = s.prefixes();
  const sparql::Query query = load_query(s, query_path, prefixes);
  const TripleSet store = s.load({data}, prefixes);
  const auto expanded = sparql::expand_reification(query, {strict_type}, Vocabulary::from(prefixes));
  s.out() << sparql::to_tsv(sparql::evaluate(expanded, store), expanded.prefixes);
  return kSuccess;
}

int cmd_rewrite(const Session& s, const std::string& query_path, bool strict_type) {
  const PrefixTable prefixes = s.prefixes();
  const sparql::Query query = load_query(s, query_path, prefixes);
  s.out() << sparql::write_query(sparql::expand_reification(query, {strict_type}, Vocabulary::from(prefixes)));
  return kSuccess;
}

int cmd_stale(const Session& s, const std::vector<std::string>& data, const std::string& before) {
  const auto cutoff = Date::parse(before);
  if (!cutoff) throw IoError("--before expects YYYY-MM-DD, got '" + before + "'");
  const PrefixTable prefixes = s.prefixes();
  const Vocabulary vocab = Vocabulary::from(prefixes);
  const TripleSet store = s.load(data, prefixes);
  const StaleReport report = stale_attributions(store, *cutoff, vocab);
  s.out() << "?attribution\t?source\t?date\n";
  for (const auto& [node, date] : report.stale) {
    const auto sources = store.match(node, vocab.source, std::nullopt);
    if (sources.empty()) s.out() << prefixes.format(node) << "\t\t" << date.str() << '\n';
    for (const Triple& t : sources) {
      s.out() << prefixes.format(node) << '\t' << prefixes.format(t.object) << '\t' << date.str() << '\n';
    }
  }
  for (const auto& [node, value] : report.unparseable) {
    s.warn("unparseable date " + prefixes.format(value) + " on " + prefixes.format(node));
  }
  return kSuccess;
}

int cmd_gen(const Session& s, GenConfig cfg, const std::string& output) {
  const PrefixTable prefixes = s.prefixes();
  const Vocabulary vocab = Vocabulary::from(prefixes);
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw IoError(e.what());
  }
  std::ostringstream buf;
  const GenCounts counts = write_corpus(cfg, buf, prefixes, vocab);
  s.emit(output, buf.str());
  s.note("generated " + std::to_string(counts.total()) + " triples (" + std::to_string(counts.base) + " base, " +
         std::to_string(counts.metadata()) + " metadata)");
  return kSuccess;
}

int cmd_stats(const Session& s, const std::vector<std::string>& data) {
  const PrefixTable prefixes = s.prefixes();
  s.out() << format_stats(stats(s.load(data, prefixes), Vocabulary::from(prefixes)));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evidence-annotated XML to reified RDF, provenance queries and corpus statistics", "provrdf"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--prefixes", globals.prefixes_path, "Turtle file with @prefix directives (overrides defaults)");
  app.add_option("--policy", globals.policy_path, "Conversion policy file (key = value lines)");
  app.add_flag("--quiet", globals.quiet, "Suppress warnings and reports on the error stream");

  std::vector<std::string> inputs;
  std::string output, data, query_path, before, format = "tsv", config_path;
  bool strict_type = false;

  auto* convert = app.add_subcommand("convert", "Convert evidence-annotated XML to reified Turtle");
  convert->add_option("xml", inputs, "XML files")->required();
  convert->add_option("-o,--output", output, "Output Turtle file (default: standard output)");

  auto* validate = app.add_subcommand("validate", "Check evidence keys; exit 1 if any key dangles");
  validate->add_option("xml", inputs, "XML files")->required();

  auto* query = app.add_subcommand("query", "Evaluate a query over Turtle data and print TSV");
  query->add_option("data", data, "Turtle data file")->required();
  query->add_option("query", query_path, "Query file")->required();
  query->add_flag("--strict-statement-type", strict_type, "Expanded reification also requires rdf:type rdf:Statement");
  query->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv"}));

  auto* rewrite = app.add_subcommand("rewrite", "Print the query with reification(...) expanded");
  rewrite->add_option("query", query_path, "Query file")->required();
  rewrite->add_flag("--strict-statement-type", strict_type, "Also emit rdf:type rdf:Statement");

  auto* stale = app.add_subcommand("stale", "List attributions dated strictly before a cutoff");
  stale->add_option("data", inputs, "Turtle data files")->required();
  stale->add_option("--before", before, "Cutoff date YYYY-MM-DD")->required();

  GenConfig gen_cfg;
  std::string fraction_text;
  std::string start_text, end_text;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic reified corpus as Turtle");
  gen->add_option("--config", config_path, "Generator config file (key = value lines)");
  gen->add_option("--entries", gen_cfg.entries, "Number of entries");
  gen->add_option("--statements-per-entry", gen_cfg.statements_per_entry, "Base statements per entry");
  gen->add_option("--fraction", fraction_text, "Attributed fraction f, decimal or a/b");
  gen->add_option("--sources", gen_cfg.source_pool, "Source pool size");
  gen->add_option("--start", start_text, "First date YYYY-MM-DD");
  gen->add_option("--end", end_text, "Last date YYYY-MM-DD");
  gen->add_option("--seed", gen_cfg.seed, "Random seed");
  gen->add_flag("--entity-links", gen_cfg.entity_links, "Also link entities to attribution nodes");
  gen->add_option("-o,--output", output, "Output Turtle file (default: standard output)");

  auto* stats_cmd = app.add_subcommand("stats", "Report triple and metadata counts");
  stats_cmd->add_option("data", inputs, "Turtle data files")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Session session(globals, out, err);
  try {
    if (*convert) return cmd_convert(session, inputs, output);
    if (*validate) return cmd_validate(session, inputs);
    if (*query) return cmd_query(session, data, query_path, strict_type);
    if (*rewrite) return cmd_rewrite(session, query_path, strict_type);
    if (*stale) return cmd_stale(session, inputs, before);
    if (*stats_cmd) return cmd_stats(session, inputs);
    if (*gen) {
      // Precedence: defaults < config file < explicit flags.
      GenConfig cfg;
      if (!config_path.empty()) {
        const std::string text = read_file(config_path);
        cfg = in_file(config_path, [&] { return GenConfig::parse(text); });
      }
      if (gen->count("--entries")) cfg.entries = gen_cfg.entries;
      if (gen->count("--statements-per-entry")) cfg.statements_per_entry = gen_cfg.statements_per_entry;
      if (gen->count("--sources")) cfg.source_pool = gen_cfg.source_pool;
      if (gen->count("--seed")) cfg.seed = gen_cfg.seed;
      if (gen->count("--entity-links")) cfg.entity_links = gen_cfg.entity_links;
      if (!fraction_text.empty()) {
        auto f = parse_fraction(fraction_text);
        if (!f) throw IoError("--fraction expects a decimal or a/b, got '" + fraction_text + "'");
        cfg.attribution_fraction = *f;
      }
      for (auto [text, slot] : {std::pair{&start_text, &cfg.start}, std::pair{&end_text, &cfg.end}}) {
        if (text->empty()) continue;
        auto d = Date::parse(*text);
        if (!d) throw IoError("expected YYYY-MM-DD, got '" + *text + "'");
        *slot = *d;
      }
      return cmd_gen(session, cfg, output);
    }
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const FileSyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace provrdf::cli
