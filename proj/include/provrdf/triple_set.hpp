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

#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "provrdf/term.hpp"

namespace provrdf {

using TermId = std::uint32_t;

struct IdTriple {
  TermId s;
  TermId p;
  TermId o;
  friend bool operator==(const IdTriple&, const IdTriple&) = default;
};

/// In-memory triple store.
///
/// Terms are dictionary-encoded; triples are kept in insertion order and
/// indexed by subject, predicate and object. Every index entry is a list of
/// positions into the insertion-ordered triple vector, so any filtered scan
/// yields triples in insertion order.
///
/// Any number of readers or one writer. A Reader holds the shared lock for
/// its lifetime; do not insert from a thread that holds a Reader.
class TripleSet {
 public:
  class Reader;

  TripleSet() = default;
  TripleSet(const TripleSet& other);
  TripleSet(TripleSet&& other) noexcept;
  TripleSet& operator=(const TripleSet& other);
  TripleSet& operator=(TripleSet&& other) noexcept;
  ~TripleSet() = default;

  /// Returns true iff the triple was not already present.
  /// Throws StructuralError for a literal subject or non-IRI predicate.
  bool insert(const Triple& triple);

  template <typename Range>
  std::size_t insert_all(const Range& triples) {
    std::size_t added = 0;
    for (const Triple& t : triples) added += insert(t) ? 1 : 0;
    return added;
  }

  /// Loads another document, renaming its blank labels with a suffix unique
  /// to this store so that labels from separately parsed documents never
  /// collide. Returns the number of triples added.
  std::size_t merge_scoped(const TripleSet& document);

  /// Triples agreeing with every bound position, in insertion order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  bool contains(const Triple& triple) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  /// All triples in insertion order.
  std::vector<Triple> triples() const;

  Reader read() const;

 private:
  struct IdTripleHash {
    std::size_t operator()(const IdTriple& t) const noexcept {
      return (static_cast<std::size_t>(t.s) * 0x9E3779B97F4A7C15ull) ^
             (static_cast<std::size_t>(t.p) * 0xC2B2AE3D27D4EB4Full) ^ t.o;
    }
  };

  struct Data {
    std::vector<Term> terms;
    std::unordered_map<Term, TermId, TermHash> ids;
    std::vector<IdTriple> triples;
    std::vector<std::vector<std::uint32_t>> by_subject;
    std::vector<std::vector<std::uint32_t>> by_predicate;
    std::vector<std::vector<std::uint32_t>> by_object;
    std::unordered_set<IdTriple, IdTripleHash> present;
    std::size_t documents = 0;

    TermId intern(const Term& term);
    bool insert(const Triple& triple);
  };

  mutable std::shared_mutex mutex_;
  Data data_;
};

/// Id-level read access under the shared lock.
class TripleSet::Reader {
 public:
  std::optional<TermId> find(const Term& term) const;
  const Term& term(TermId id) const { return data_->terms[id]; }
  std::size_t term_count() const { return data_->terms.size(); }
  std::span<const IdTriple> all() const { return data_->triples; }

  /// Calls f(const IdTriple&) for each triple agreeing with the bound ids,
  /// in insertion order. Scans the shortest index list among bound positions.
  template <typename F>
  void for_each_match(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o,
                      F&& f) const {
    const std::vector<std::uint32_t>* best = nullptr;
    auto consider = [&](std::optional<TermId> id, const std::vector<std::vector<std::uint32_t>>& index) {
      if (!id) return true;
      if (*id >= index.size()) return false;
      const auto& list = index[*id];
      if (best == nullptr || list.size() < best->size()) best = &list;
      return true;
    };
    if (!consider(s, data_->by_subject) || !consider(p, data_->by_predicate) ||
        !consider(o, data_->by_object)) {
      return;
    }
    auto keep = [&](const IdTriple& t) {
      return (!s || t.s == *s) && (!p || t.p == *p) && (!o || t.o == *o);
    };
    if (best == nullptr) {
      for (const IdTriple& t : data_->triples) f(t);
      return;
    }
    for (std::uint32_t pos : *best) {
      const IdTriple& t = data_->triples[pos];
      if (keep(t)) f(t);
    }
  }

  std::size_t count(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o) const;

  /// Upper bound on count(): the length of the list for_each_match scans.
  std::size_t candidates(std::optional<TermId> s, std::optional<TermId> p, std::optional<TermId> o) const;

  Triple to_triple(const IdTriple& t) const { return {term(t.s), term(t.p), term(t.o)}; }

 private:
  friend class TripleSet;
  Reader(const TripleSet& set) : lock_(set.mutex_), data_(&set.data_) {}

  std::shared_lock<std::shared_mutex> lock_;
  const Data* data_;
};

}  // namespace provrdf
