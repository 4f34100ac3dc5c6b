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

#include "provrdf/triple_set.hpp"

#include <algorithm>
#include <limits>

#include "provrdf/errors.hpp"

namespace provrdf {

TermId TripleSet::Data::intern(const Term& term) {
  auto it = ids.find(term);
  if (it != ids.end()) return it->second;
  if (terms.size() >= std::numeric_limits<TermId>::max()) throw Error("term dictionary full");
  const auto id = static_cast<TermId>(terms.size());
  terms.push_back(term);
  ids.emplace(term, id);
  by_subject.emplace_back();
  by_predicate.emplace_back();
  by_object.emplace_back();
  return id;
}

bool TripleSet::Data::insert(const Triple& triple) {
  validate(triple);
  const IdTriple t{intern(triple.subject), intern(triple.predicate), intern(triple.object)};
  if (!present.insert(t).second) return false;
  const auto pos = static_cast<std::uint32_t>(triples.size());
  triples.push_back(t);
  by_subject[t.s].push_back(pos);
  by_predicate[t.p].push_back(pos);
  by_object[t.o].push_back(pos);
  return true;
}

TripleSet::TripleSet(const TripleSet& other) {
  std::shared_lock lock(other.mutex_);
  data_ = other.data_;
}

TripleSet::TripleSet(TripleSet&& other) noexcept {
  std::unique_lock lock(other.mutex_);
  data_ = std::move(other.data_);
  other.data_ = Data{};
}

TripleSet& TripleSet::operator=(const TripleSet& other) {
  if (this == &other) return *this;
  std::unique_lock mine(mutex_, std::defer_lock);
  std::shared_lock theirs(other.mutex_, std::defer_lock);
  std::lock(mine, theirs);
  data_ = other.data_;
  return *this;
}

TripleSet& TripleSet::operator=(TripleSet&& other) noexcept {
  if (this == &other) return *this;
  std::unique_lock mine(mutex_, std::defer_lock);
  std::unique_lock theirs(other.mutex_, std::defer_lock);
  std::lock(mine, theirs);
  data_ = std::move(other.data_);
  other.data_ = Data{};
  return *this;
}

bool TripleSet::insert(const Triple& triple) {
  std::unique_lock lock(mutex_);
  return data_.insert(triple);
}

std::size_t TripleSet::merge_scoped(const TripleSet& document) {
  if (&document == this) throw Error("cannot merge a store into itself");
  std::unique_lock mine(mutex_, std::defer_lock);
  std::shared_lock theirs(document.mutex_, std::defer_lock);
  std::lock(mine, theirs);

  // The suffix ends in the document number, so two different documents can
  // never map distinct labels onto the same renamed label.
  const std::string suffix = "_d" + std::to_string(++data_.documents);
  auto scoped = [&](const Term& term) {
    return term.is_blank() ? Term::blank(term.value() + suffix) : term;
  };
  std::size_t added = 0;
  for (const IdTriple& t : document.data_.triples) {
    const auto& terms = document.data_.terms;
    added += data_.insert({scoped(terms[t.s]), terms[t.p], scoped(terms[t.o])}) ? 1 : 0;
  }
  return added;
}

std::vector<Triple> TripleSet::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                     const std::optional<Term>& o) const {
  Reader reader = read();
  auto resolve = [&](const std::optional<Term>& term, std::optional<TermId>& out) {
    if (!term) return true;
    out = reader.find(*term);
    return out.has_value();
  };
  std::optional<TermId> si, pi, oi;
  std::vector<Triple> result;
  if (!resolve(s, si) || !resolve(p, pi) || !resolve(o, oi)) return result;
  result.reserve(reader.candidates(si, pi, oi));
  reader.for_each_match(si, pi, oi, [&](const IdTriple& t) { result.push_back(reader.to_triple(t)); });
  return result;
}

bool TripleSet::contains(const Triple& triple) const {
  std::shared_lock lock(mutex_);
  auto find = [&](const Term& term) -> std::optional<TermId> {
    auto it = data_.ids.find(term);
    if (it == data_.ids.end()) return std::nullopt;
    return it->second;
  };
  auto s = find(triple.subject), p = find(triple.predicate), o = find(triple.object);
  return s && p && o && data_.present.contains(IdTriple{*s, *p, *o});
}

std::size_t TripleSet::size() const {
  std::shared_lock lock(mutex_);
  return data_.triples.size();
}

std::vector<Triple> TripleSet::triples() const {
  return match(std::nullopt, std::nullopt, std::nullopt);
}

TripleSet::Reader TripleSet::read() const { return Reader(*this); }

std::optional<TermId> TripleSet::Reader::find(const Term& term) const {
  auto it = data_->ids.find(term);
  if (it == data_->ids.end()) return std::nullopt;
  return it->second;
}

std::size_t TripleSet::Reader::candidates(std::optional<TermId> s, std::optional<TermId> p,
                                          std::optional<TermId> o) const {
  std::size_t best = data_->triples.size();
  auto consider = [&](std::optional<TermId> id, const std::vector<std::vector<std::uint32_t>>& index) {
    if (id) best = std::min(best, *id < index.size() ? index[*id].size() : std::size_t{0});
  };
  consider(s, data_->by_subject);
  consider(p, data_->by_predicate);
  consider(o, data_->by_object);
  return best;
}

std::size_t TripleSet::Reader::count(std::optional<TermId> s, std::optional<TermId> p,
                                     std::optional<TermId> o) const {
  const int bound = (s ? 1 : 0) + (p ? 1 : 0) + (o ? 1 : 0);
  if (bound == 0) return data_->triples.size();
  if (bound == 1) {
    const auto& index = s ? data_->by_subject : p ? data_->by_predicate : data_->by_object;
    const TermId id = s ? *s : p ? *p : *o;
    return id < index.size() ? index[id].size() : 0;
  }
  std::size_t n = 0;
  for_each_match(s, p, o, [&](const IdTriple&) { ++n; });
  return n;
}

}  // namespace provrdf
