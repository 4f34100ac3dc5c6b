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

#include "provrdf/uniprot_xml.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "provrdf/errors.hpp"
#include "provrdf/xml.hpp"
#include "key_value.hpp"

namespace provrdf {
namespace {

using detail::trim;

std::vector<std::string> split_keys(std::string_view s) {
  std::vector<std::string> keys;
  std::istringstream in{std::string(s)};
  for (std::string k; in >> k;) keys.push_back(k);
  return keys;
}

bool has_element_children(const xml::Element& el) {
  for (const auto& c : el.children) {
    if (c.name != "evidence") return true;
  }
  return false;
}

std::vector<std::pair<std::string, std::string>> opaque_attributes(const xml::Element& el) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& a : el.attributes) {
    if (a.first != "evidence") out.push_back(a);
  }
  return out;
}

class EntryReader {
 public:
  EntryDocument read(const xml::Element& entry) {
    if (const std::string* acc = entry.attribute("accession")) doc_.accession = trim(*acc);
    walk(entry, std::nullopt, "");
    return std::move(doc_);
  }

 private:
  void declare(const xml::Element& el) {
    const std::string* key = el.attribute("key");
    if (key == nullptr || key->empty()) throw SyntaxError("evidence element without key", el.line, el.column);
    const std::string* date = el.attribute("date");
    if (date == nullptr) throw SyntaxError("evidence " + *key + " has no date", el.line, el.column);
    auto parsed = Date::parse(*date);
    if (!parsed) throw SyntaxError("evidence " + *key + " has malformed date '" + *date + "'", el.line, el.column);
    auto get = [&](const char* name) {
      const std::string* v = el.attribute(name);
      return v ? *v : std::string();
    };
    EvidenceDecl decl{*key, get("category"), get("type"), get("attribute"), *parsed, el.line};
    if (!doc_.evidence.emplace(*key, std::move(decl)).second) {
      throw DataError("duplicate evidence key " + *key + " at line " + std::to_string(el.line));
    }
  }

  void walk(const xml::Element& el, std::optional<std::size_t> parent, const std::string& prefix) {
    for (const xml::Element& child : el.children) {
      if (child.name == "evidence") {
        declare(child);
        continue;
      }
      if (!parent && prefix.empty() && child.name == "accession") {
        if (doc_.accession.empty()) doc_.accession = trim(child.text);
        continue;
      }
      const std::string* ev = child.attribute("evidence");
      auto keys = ev ? split_keys(*ev) : std::vector<std::string>{};
      const std::string path = prefix + child.name;
      if (has_element_children(child)) {
        doc_.containers.push_back({child.name, parent, opaque_attributes(child), std::move(keys)});
        walk(child, doc_.containers.size() - 1, path + "/");
        continue;
      }
      // Evidence declarations may sit inside an otherwise empty element.
      for (const xml::Element& grandchild : child.children) declare(grandchild);
      std::string text = trim(child.text);
      auto attrs = opaque_attributes(child);
      if (text.empty() && keys.empty() && attrs.empty()) continue;
      doc_.values.push_back({path, child.name, std::move(text), std::move(keys), parent, std::move(attrs)});
    }
  }

  EntryDocument doc_;
};

std::string resolve_namespace(const std::string& value, const PrefixTable& prefixes, std::size_t line) {
  if (value.size() >= 2 && value.front() == '<' && value.back() == '>') return value.substr(1, value.size() - 2);
  if (value.find("://") != std::string::npos || value.starts_with("urn:")) return value;
  const auto colon = value.find(':');
  if (colon != std::string::npos) {
    if (auto iri = prefixes.expand(value.substr(0, colon), value.substr(colon + 1))) return *iri;
  }
  throw SyntaxError("cannot resolve namespace '" + value + "'", line, 1);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::vector<EntryDocument> parse_entries_xml(std::string_view text) {
  const xml::Element root = xml::parse(text);
  std::vector<EntryDocument> docs;
  if (root.name == "entry") {
    docs.push_back(EntryReader().read(root));
    return docs;
  }
  for (const xml::Element& child : root.children) {
    if (child.name == "entry") docs.push_back(EntryReader().read(child));
  }
  return docs;
}

EntryDocument parse_entry_xml(std::string_view text) {
  auto docs = parse_entries_xml(text);
  if (docs.size() != 1) throw DataError("expected exactly one entry, found " + std::to_string(docs.size()));
  return std::move(docs.front());
}

ResolutionReport resolve_evidence(const EntryDocument& doc) {
  ResolutionReport report;
  std::set<std::string> referenced;
  auto check = [&](const std::vector<std::string>& keys, std::size_t index, bool on_container) {
    for (const std::string& key : keys) {
      referenced.insert(key);
      EvidenceLink link{key, index, on_container};
      (doc.evidence.contains(key) ? report.resolved : report.dangling).push_back(std::move(link));
    }
  };
  for (std::size_t i = 0; i < doc.containers.size(); ++i) check(doc.containers[i].evidence_keys, i, true);
  for (std::size_t i = 0; i < doc.values.size(); ++i) check(doc.values[i].evidence_keys, i, false);
  for (const auto& [key, decl] : doc.evidence) {
    if (!referenced.contains(key)) report.unused.push_back(key);
  }
  return report;
}

ConversionPolicy ConversionPolicy::defaults(const PrefixTable& prefixes) {
  ConversionPolicy p;
  if (auto hamap = prefixes.namespace_of("hamap")) p.type_namespaces["HAMAP"] = *hamap;
  p.entity_namespace = prefixes.namespace_of("protein").value_or("http://purl.uniprot.org/uniprot/");
  return p;
}

ConversionPolicy ConversionPolicy::parse(std::string_view text, const PrefixTable& prefixes) {
  ConversionPolicy p = defaults(prefixes);
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected 'key = value'", line_no, 1);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto bad = [&](const std::string& what) -> SyntaxError {
      return SyntaxError("bad value for " + key + ": " + what, line_no, eq + 2);
    };
    if (key == "strict") {
      if (value != "true" && value != "false") throw bad(value);
      p.strict = value == "true";
    } else if (key.starts_with("namespace.")) {
      p.type_namespaces[key.substr(10)] = resolve_namespace(value, prefixes, line_no);
    } else if (key.starts_with("category.")) {
      auto c = parse_source_category(value);
      if (!c) throw bad(value);
      p.categories[key.substr(9)] = *c;
    } else if (key.starts_with("source_rule.")) {
      auto c = parse_source_category(value);
      if (!c) throw bad(value);
      p.source_rules.emplace_back(resolve_namespace(key.substr(12), prefixes, line_no), *c);
    } else if (key == "attribution_scope") {
      if (value == "entry") p.attribution_scope = AttributionScope::Entry;
      else if (value == "run") p.attribution_scope = AttributionScope::Run;
      else throw bad(value);
    } else if (key == "node_style") {
      if (value == "blank") p.node_style = NodeStyle::Blank;
      else if (value == "iri") p.node_style = NodeStyle::Iri;
      else throw bad(value);
    } else if (key == "node_base") {
      p.node_base = resolve_namespace(value, prefixes, line_no);
    } else if (key == "entity_namespace") {
      p.entity_namespace = resolve_namespace(value, prefixes, line_no);
    } else if (key == "structured_names" || key == "transparent") {
      auto names = split_keys(value);
      (key == "transparent" ? p.transparent : p.structured_names) = {names.begin(), names.end()};
    } else {
      throw SyntaxError("unknown policy key '" + key + "'", line_no, 1);
    }
  }
  if (p.node_style == NodeStyle::Iri && p.node_base.empty()) {
    throw SyntaxError("node_style = iri requires node_base", line_no, 1);
  }
  return p;
}

Converter::Converter(ConversionPolicy policy, Vocabulary vocab)
    : policy_(std::move(policy)), vocab_(std::move(vocab)) {}

Term Converter::fresh_node(const std::string& accession, const char* kind, std::size_t& entry_counter) {
  if (policy_.node_style == NodeStyle::Blank) return Term::blank(std::to_string(blank_counter_++));
  return Term::iri(policy_.node_base + accession + "/" + kind + "/" + std::to_string(entry_counter++));
}

ResolutionReport Converter::add(const EntryDocument& doc) {
  ResolutionReport report = resolve_evidence(doc);
  std::vector<std::string> warnings;
  for (const EvidenceLink& link : report.dangling) {
    const std::string where = link.on_container ? doc.containers[link.index].name : doc.values[link.index].path;
    const std::string msg = "dangling evidence key " + link.key + " on " + where + " in entry " + doc.accession;
    if (policy_.strict) throw DataError(msg);
    warnings.push_back(msg + " (skipped)");
  }
  for (const std::string& key : report.unused) {
    warnings.push_back("unused evidence declaration " + key + " in entry " + doc.accession);
  }
  if (doc.accession.empty()) throw DataError("entry without accession");

  // Resolve every source up front so a failure leaves no partial output.
  std::map<std::string, Attribution> attributions;
  for (const EvidenceLink& link : report.resolved) {
    const EvidenceDecl& decl = doc.evidence.at(link.key);
    auto ns = policy_.type_namespaces.find(decl.type);
    if (ns == policy_.type_namespaces.end()) {
      throw DataError("evidence " + decl.key + " has type '" + decl.type + "' with no namespace mapping");
    }
    if (decl.attribute.empty()) throw DataError("evidence " + decl.key + " has no attribute");
    Attribution a{Term::iri(ns->second + decl.attribute), decl.date, std::nullopt, std::nullopt};
    if (auto c = policy_.categories.find(decl.category); c != policy_.categories.end()) {
      a.category = c->second;
    } else {
      a.category = classify_source(a.source, policy_.source_rules);
    }
    attributions.emplace(link.key, std::move(a));
  }

  const std::size_t saved_counter = blank_counter_;
  auto saved_run_attributions = run_attributions_;
  try {
    std::vector<Triple> out;
    std::size_t node_counter = 0, statement_counter = 0, attribution_counter = 0;
    std::map<std::string, Term> entry_attributions;
    const Term entity = Term::iri(policy_.entity_namespace + doc.accession);

    auto attribution_node = [&](const Attribution& a, bool& fresh) {
      std::string key = a.source.value() + '\x1f' + a.date.str() + '\x1f' +
                        (a.evidence ? std::string(to_string(*a.evidence)) : "") + '\x1f' +
                        (a.category ? std::string(to_string(*a.category)) : "");
      auto& cache = policy_.attribution_scope == AttributionScope::Run ? run_attributions_ : entry_attributions;
      auto it = cache.find(key);
      fresh = it == cache.end();
      if (!fresh) return it->second;
      Term node;
      if (policy_.node_style == NodeStyle::Iri && policy_.attribution_scope == AttributionScope::Run) {
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
        node = Term::iri(policy_.node_base + "attribution/" + hex);
      } else {
        node = fresh_node(doc.accession, "attribution", attribution_counter);
      }
      return cache.emplace(std::move(key), node).first->second;
    };

    auto annotate = [&](const Triple& base, const std::vector<std::string>& keys) {
      for (const std::string& key : keys) {
        auto a = attributions.find(key);
        if (a == attributions.end()) continue;  // dangling, already reported
        const Term stmt = fresh_node(doc.accession, "statement", statement_counter);
        bool fresh = false;
        const Term attr = attribution_node(a->second, fresh);
        for (const Triple& t : reify(base.subject, base.predicate, base.object, stmt, attr, vocab_)) out.push_back(t);
        out.push_back(attach_entity_attribution(entity, attr, vocab_));
        if (fresh) {
          for (const Triple& t : encode_attribution(a->second, attr, vocab_)) out.push_back(t);
        }
      }
    };

    std::vector<Term> container_node(doc.containers.size());
    auto owner = [&](std::optional<std::size_t> container) {
      return container ? container_node[*container] : entity;
    };
    for (std::size_t i = 0; i < doc.containers.size(); ++i) {
      const Container& c = doc.containers[i];
      const Term parent = owner(c.parent);
      if (policy_.transparent.contains(c.name)) {
        container_node[i] = parent;
        if (!c.evidence_keys.empty()) {
          warnings.push_back("evidence on transparent element " + c.name + " ignored in entry " + doc.accession);
        }
        continue;
      }
      container_node[i] = fresh_node(doc.accession, "node", node_counter);
      const Triple link{parent, vocab_.core(c.name), container_node[i]};
      out.push_back(link);
      if (policy_.structured_names.contains(c.name)) {
        out.push_back({container_node[i], vocab_.rdf_type, vocab_.structured_name});
      }
      annotate(link, c.evidence_keys);
    }
    for (const AnnotatedValue& v : doc.values) {
      const Triple base{owner(v.container), vocab_.core(v.name), Term::literal(v.text)};
      out.push_back(base);
      annotate(base, v.evidence_keys);
    }
    out_.insert_all(out);
  } catch (...) {
    blank_counter_ = saved_counter;
    run_attributions_ = std::move(saved_run_attributions);
    throw;
  }
  warnings_.insert(warnings_.end(), warnings.begin(), warnings.end());
  return report;
}

TripleSet xml_to_rdf(const EntryDocument& doc, const ConversionPolicy& policy, const Vocabulary& vocab) {
  Converter converter(policy, vocab);
  converter.add(doc);
  return converter.take();
}

}  // namespace provrdf
