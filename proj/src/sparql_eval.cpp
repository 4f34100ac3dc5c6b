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

#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "provrdf/errors.hpp"
#include "provrdf/sparql.hpp"

namespace provrdf::sparql {
namespace {

constexpr std::size_t kGround = std::numeric_limits<std::size_t>::max();

// A pattern slot after resolution: a variable slot index or a ground term id.
struct Slot {
  std::size_t var = kGround;
  TermId id = 0;
};

struct Compiled {
  Slot s, p, o;
};

class Evaluator {
 public:
  Evaluator(const TripleSet::Reader& reader, std::vector<Compiled> patterns, std::size_t var_count)
      : reader_(reader), patterns_(std::move(patterns)), bindings_(var_count) {}

  template <typename Emit>
  void run(const std::vector<std::size_t>& order, Emit&& emit) {
    order_ = &order;
    emit_ = [&](const std::vector<std::optional<TermId>>& b) { emit(b); };
    step(0);
  }

 private:
  std::optional<TermId> value(const Slot& slot) const {
    if (slot.var == kGround) return slot.id;
    return bindings_[slot.var];
  }

  void step(std::size_t depth) {
    if (depth == order_->size()) {
      emit_(bindings_);
      return;
    }
    const Compiled& pat = patterns_[(*order_)[depth]];
    reader_.for_each_match(value(pat.s), value(pat.p), value(pat.o), [&](const IdTriple& t) {
      // Bind this pattern's free variables; a variable repeated inside the
      // pattern must see the same id in each position.
      std::size_t bound[3];
      std::size_t n = 0;
      bool ok = true;
      for (auto [slot, id] : {std::pair{&pat.s, t.s}, std::pair{&pat.p, t.p}, std::pair{&pat.o, t.o}}) {
        if (slot->var == kGround) continue;
        auto& b = bindings_[slot->var];
        if (!b) {
          b = id;
          bound[n++] = slot->var;
        } else if (*b != id) {
          ok = false;
          break;
        }
      }
      if (ok) step(depth + 1);
      for (std::size_t i = 0; i < n; ++i) bindings_[bound[i]].reset();
    });
  }

  const TripleSet::Reader& reader_;
  std::vector<Compiled> patterns_;
  std::vector<std::optional<TermId>> bindings_;
  const std::vector<std::size_t>* order_ = nullptr;
  std::function<void(const std::vector<std::optional<TermId>>&)> emit_;
};

std::vector<std::size_t> plan(const TripleSet::Reader& reader, const std::vector<Compiled>& patterns,
                              JoinOrder order) {
  std::vector<std::size_t> result;
  if (order == JoinOrder::Textual) {
    for (std::size_t i = 0; i < patterns.size(); ++i) result.push_back(i);
    return result;
  }
  auto ground = [](const Slot& s) { return s.var == kGround ? std::optional<TermId>(s.id) : std::nullopt; };
  std::vector<std::size_t> cost;
  for (const Compiled& c : patterns) cost.push_back(reader.count(ground(c.s), ground(c.p), ground(c.o)));

  std::vector<bool> placed(patterns.size(), false);
  std::vector<bool> var_bound;
  auto connected = [&](const Compiled& c) {
    for (const Slot* s : {&c.s, &c.p, &c.o}) {
      if (s->var != kGround && s->var < var_bound.size() && var_bound[s->var]) return true;
    }
    return false;
  };
  for (std::size_t round = 0; round < patterns.size(); ++round) {
    std::size_t best = kGround;
    bool best_connected = false;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (placed[i]) continue;
      const bool conn = connected(patterns[i]);
      if (best == kGround || (conn && !best_connected) || (conn == best_connected && cost[i] < cost[best])) {
        best = i;
        best_connected = conn;
      }
    }
    placed[best] = true;
    result.push_back(best);
    for (const Slot* s : {&patterns[best].s, &patterns[best].p, &patterns[best].o}) {
      if (s->var == kGround) continue;
      if (var_bound.size() <= s->var) var_bound.resize(s->var + 1, false);
      var_bound[s->var] = true;
    }
  }
  return result;
}

}  // namespace

SolutionTable evaluate(const std::vector<TriplePattern>& patterns, const std::vector<std::string>& projection,
                       const TripleSet& store, const EvalOptions& options) {
  SolutionTable table;
  table.variables = projection;

  std::map<std::string, std::size_t> slots;
  auto reader = store.read();
  std::vector<Compiled> compiled;
  bool satisfiable = true;
  auto compile = [&](const PatternTerm& t) {
    Slot slot;
    if (t.is_var()) {
      slot.var = slots.emplace(t.var_name(), slots.size()).first->second;
    } else if (auto id = reader.find(t.term())) {
      slot.id = *id;
    } else {
      satisfiable = false;
    }
    return slot;
  };
  for (const TriplePattern& tp : patterns) {
    Compiled c;
    c.s = compile(tp.s);
    c.p = compile(tp.p);
    c.o = compile(tp.o);
    compiled.push_back(c);
  }
  if (!satisfiable) return table;

  std::vector<std::size_t> projected;
  for (const auto& v : projection) {
    auto it = slots.find(v);
    projected.push_back(it == slots.end() ? kGround : it->second);
  }

  const auto order = plan(reader, compiled, options.order);
  Evaluator eval(reader, std::move(compiled), slots.size());
  eval.run(order, [&](const std::vector<std::optional<TermId>>& bindings) {
    std::vector<std::optional<Term>> row;
    row.reserve(projected.size());
    for (std::size_t slot : projected) {
      if (slot == kGround || !bindings[slot]) {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(reader.term(*bindings[slot]));
      }
    }
    table.rows.push_back(std::move(row));
  });
  return table;
}

SolutionTable evaluate(const Query& query, const TripleSet& store, const EvalOptions& options) {
  if (query.reification_count() != 0) throw Error("evaluate: query still contains reification terms");
  return evaluate(query.triple_patterns(), query.projection, store, options);
}

std::string to_tsv(const SolutionTable& table, const PrefixTable& prefixes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.variables.size(); ++i) out << (i ? "\t" : "") << '?' << table.variables[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << '\t';
      if (row[i]) out << prefixes.format(*row[i]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace provrdf::sparql
