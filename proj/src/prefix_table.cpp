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

#include "provrdf/prefix_table.hpp"

namespace provrdf {
namespace {

bool name_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '-' || c == '.' || u >= 0x80;
}

bool name_start(char c) { return name_char(c) && c != '-' && c != '.'; }

}  // namespace

bool is_valid_prefix_label(std::string_view label) {
  if (label.empty()) return true;
  if (!((label[0] >= 'A' && label[0] <= 'Z') || (label[0] >= 'a' && label[0] <= 'z'))) return false;
  for (char c : label) {
    if (!name_char(c)) return false;
  }
  return label.back() != '.';
}

bool is_valid_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (!name_start(local[0]) || local.back() == '.') return false;
  for (char c : local) {
    if (!name_char(c)) return false;
  }
  return true;
}

bool is_valid_blank_label(std::string_view label) {
  return !label.empty() && is_valid_local_name(label);
}

PrefixTable PrefixTable::defaults() {
  PrefixTable t;
  t.set("rdf", std::string(ns::rdf));
  t.set("", "http://purl.uniprot.org/core/");
  t.set("protein", "http://purl.uniprot.org/uniprot/");
  t.set("hamap", "http://purl.uniprot.org/hamap/");
  return t;
}

void PrefixTable::set(std::string label, std::string namespace_iri) {
  entries_[std::move(label)] = std::move(namespace_iri);
}

std::optional<std::string> PrefixTable::namespace_of(std::string_view label) const {
  auto it = entries_.find(std::string(label));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> PrefixTable::expand(std::string_view label, std::string_view local) const {
  auto ns = namespace_of(label);
  if (!ns) return std::nullopt;
  return *ns + std::string(local);
}

std::optional<std::string> PrefixTable::compact(std::string_view iri) const {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : entries_) {
    const std::string& ns = entry.second;
    if (ns.empty() || !iri.starts_with(ns) || !is_valid_local_name(iri.substr(ns.size()))) continue;
    if (best == nullptr || ns.size() > best->second.size()) best = &entry;
  }
  if (best == nullptr) return std::nullopt;
  return best->first + ":" + std::string(iri.substr(best->second.size()));
}

std::string PrefixTable::format(const Term& term) const {
  if (term.is_iri()) {
    if (auto c = compact(term.value())) return *c;
  }
  return to_ntriples(term);
}

void PrefixTable::merge(const PrefixTable& other) {
  for (const auto& [label, ns] : other.entries_) entries_[label] = ns;
}

}  // namespace provrdf
