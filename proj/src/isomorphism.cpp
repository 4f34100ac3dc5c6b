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

#include "provrdf/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace provrdf {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  h *= 0xBF58476D1CE4E5B9ull;
  return h ^ (h >> 31);
}

std::uint64_t ground_hash(const Term& t) {
  return mix(static_cast<std::uint64_t>(t.kind()) + 1, std::hash<std::string>{}(t.value()));
}

struct Graph {
  std::vector<Triple> triples;
  std::vector<Term> blanks;
  std::unordered_map<Term, std::size_t, TermHash> blank_index;
  std::vector<std::vector<std::size_t>> incident;  // blank -> triple indices
  std::unordered_set<Triple, TripleHash> set;

  explicit Graph(const std::vector<Triple>& input) {
    for (const Triple& t : input) {
      if (set.insert(t).second) triples.push_back(t);
    }
    for (std::size_t i = 0; i < triples.size(); ++i) {
      for (const Term* term : {&triples[i].subject, &triples[i].object}) {
        if (!term->is_blank()) continue;
        auto [it, fresh] = blank_index.emplace(*term, blanks.size());
        if (fresh) {
          blanks.push_back(*term);
          incident.emplace_back();
        }
        auto& inc = incident[it->second];
        if (inc.empty() || inc.back() != i) inc.push_back(i);
      }
    }
  }

  std::vector<std::uint64_t> refine() const {
    std::vector<std::uint64_t> color(blanks.size(), 1);
    auto term_color = [&](const Term& t) {
      return t.is_blank() ? mix(7, color[blank_index.at(t)]) : ground_hash(t);
    };
    // Same round count on both sides keeps colours comparable; the
    // backtracking search does not depend on the partition being stable.
    const std::size_t rounds = std::min<std::size_t>(blanks.size(), 8);
    for (std::size_t round = 0; round < rounds; ++round) {
      std::vector<std::uint64_t> next(blanks.size());
      for (std::size_t b = 0; b < blanks.size(); ++b) {
        std::vector<std::uint64_t> sig;
        for (std::size_t ti : incident[b]) {
          const Triple& t = triples[ti];
          const bool as_subject = t.subject == blanks[b];
          const bool as_object = t.object == blanks[b];
          std::uint64_t h = mix(ground_hash(t.predicate), (as_subject ? 1 : 0) | (as_object ? 2 : 0));
          if (!as_subject) h = mix(h, term_color(t.subject));
          if (!as_object) h = mix(h, term_color(t.object));
          sig.push_back(h);
        }
        std::sort(sig.begin(), sig.end());
        std::uint64_t h = color[b];
        for (auto v : sig) h = mix(h, v);
        next[b] = h;
      }
      color = std::move(next);
    }
    return color;
  }
};

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<std::uint64_t> ca, std::vector<std::uint64_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        forward_(a.blanks.size(), kNone), used_(b.blanks.size(), false) {
    order_.resize(a.blanks.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::map<std::uint64_t, std::size_t> class_size;
    for (auto c : ca_) ++class_size[c];
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return class_size[ca_[x]] < class_size[ca_[y]];
    });
  }

  bool run() { return extend(0); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t x = order_[depth];
    for (std::size_t y = 0; y < b_.blanks.size(); ++y) {
      if (used_[y] || cb_[y] != ca_[x]) continue;
      if (b_.incident[y].size() != a_.incident[x].size()) continue;
      forward_[x] = y;
      used_[y] = true;
      if (consistent(x) && extend(depth + 1)) return true;
      forward_[x] = kNone;
      used_[y] = false;
    }
    return false;
  }

  // Every triple touching x whose blanks are all mapped must exist in b.
  bool consistent(std::size_t x) const {
    for (std::size_t ti : a_.incident[x]) {
      const Triple& t = a_.triples[ti];
      Triple mapped = t;
      bool complete = true;
      for (Term* term : {&mapped.subject, &mapped.object}) {
        if (!term->is_blank()) continue;
        const std::size_t src = a_.blank_index.at(*term);
        if (forward_[src] == kNone) {
          complete = false;
          break;
        }
        *term = b_.blanks[forward_[src]];
      }
      if (complete && !b_.set.contains(mapped)) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::uint64_t> ca_, cb_;
  std::vector<std::size_t> forward_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

}  // namespace

bool isomorphic(const std::vector<Triple>& a, const std::vector<Triple>& b) {
  const Graph ga(a), gb(b);
  if (ga.triples.size() != gb.triples.size() || ga.blanks.size() != gb.blanks.size()) return false;

  auto ground = [](const Triple& t) { return !t.subject.is_blank() && !t.object.is_blank(); };
  std::size_t ground_count = 0;
  for (const Triple& t : ga.triples) {
    if (!ground(t)) continue;
    ++ground_count;
    if (!gb.set.contains(t)) return false;
  }
  if (ground_count != static_cast<std::size_t>(std::count_if(gb.triples.begin(), gb.triples.end(), ground))) {
    return false;
  }
  if (ga.blanks.empty()) return true;

  auto ca = ga.refine();
  auto cb = gb.refine();
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return Matcher(ga, gb, std::move(ca), std::move(cb)).run();
}

bool isomorphic(const TripleSet& a, const TripleSet& b) { return isomorphic(a.triples(), b.triples()); }

}  // namespace provrdf
