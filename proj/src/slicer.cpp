// Copyright 2026 The tddslicer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tddslicer/slicer.hpp"

#include <algorithm>
#include <stdexcept>

namespace tddslicer {

std::string to_string(const DeletionUnit& u) {
  return u.kind == UnitKind::kStatement ? "stmt#" + std::to_string(u.anchor)
                                        : "else#" + std::to_string(u.anchor);
}

const char* to_string(Strategy s) {
  return s == Strategy::kExhaustive ? "exhaustive" : "greedy";
}

namespace {

/// Each unit with the unit it is nested in (none for top-level statements).
struct UnitTree {
  std::vector<DeletionUnit> units;
  std::vector<std::optional<std::size_t>> parent;
};

void collect_units(const Block& block, std::optional<std::size_t> parent,
                   UnitTree& tree) {
  for (const Stmt& s : block) {
    const std::size_t self = tree.units.size();
    tree.units.push_back({s.id, UnitKind::kStatement});
    tree.parent.push_back(parent);
    if (const auto* i = std::get_if<If>(&s.node)) {
      collect_units(i->then_block, self, tree);
      if (!i->else_block.empty()) {
        const std::size_t else_unit = tree.units.size();
        tree.units.push_back({s.id, UnitKind::kElseClause});
        tree.parent.push_back(self);
        collect_units(i->else_block, else_unit, tree);
      }
    } else if (const auto* w = std::get_if<While>(&s.node)) {
      collect_units(w->body, self, tree);
    }
  }
}

UnitTree unit_tree(const Program& p) {
  UnitTree tree;
  collect_units(p.body, std::nullopt, tree);
  return tree;
}

Block delete_in(const Block& block, const std::set<DeletionUnit>& deleted) {
  Block out;
  for (const Stmt& s : block) {
    if (deleted.count({s.id, UnitKind::kStatement})) continue;
    Stmt copy{s.id, {}};
    if (const auto* i = std::get_if<If>(&s.node)) {
      If branch{i->cond, delete_in(i->then_block, deleted), {}};
      if (!deleted.count({s.id, UnitKind::kElseClause})) {
        branch.else_block = delete_in(i->else_block, deleted);
      }
      copy.node = std::move(branch);
    } else if (const auto* w = std::get_if<While>(&s.node)) {
      copy.node = While{w->cond, delete_in(w->body, deleted)};
    } else {
      copy.node = s.node;
    }
    out.push_back(std::move(copy));
  }
  return out;
}

// Embeds candidate blocks into original blocks as subsequences. Matching the
// leftmost compatible original statement is complete: whether a pair matches
// does not depend on how the other statements were matched.
class Embedder {
 public:
  bool block(const Block& cand, const Block& orig, SliceRelation& rel) {
    std::size_t j = 0;
    for (const Stmt& c : cand) {
      bool found = false;
      while (j < orig.size()) {
        const Stmt& o = orig[j++];
        SliceRelation trial;
        if (stmt(c, o, trial)) {
          rel.deleted.insert(trial.deleted.begin(), trial.deleted.end());
          rel.id_map.insert(trial.id_map.begin(), trial.id_map.end());
          found = true;
          break;
        }
        rel.deleted.insert({o.id, UnitKind::kStatement});
      }
      if (!found) return false;
    }
    for (; j < orig.size(); ++j) rel.deleted.insert({orig[j].id, UnitKind::kStatement});
    return true;
  }

 private:
  bool stmt(const Stmt& c, const Stmt& o, SliceRelation& rel) {
    if (c.node.index() != o.node.index()) return false;
    if (const auto* ca = std::get_if<Assign>(&c.node)) {
      const auto& oa = std::get<Assign>(o.node);
      if (ca->target != oa.target || !same_expr(ca->value, oa.value)) return false;
    } else if (const auto* ci = std::get_if<If>(&c.node)) {
      const auto& oi = std::get<If>(o.node);
      if (!same_expr(ci->cond, oi.cond)) return false;
      if (!block(ci->then_block, oi.then_block, rel)) return false;
      if (ci->else_block.empty() && !oi.else_block.empty()) {
        rel.deleted.insert({o.id, UnitKind::kElseClause});
      } else if (!block(ci->else_block, oi.else_block, rel)) {
        return false;
      }
    } else if (const auto* cw = std::get_if<While>(&c.node)) {
      const auto& ow = std::get<While>(o.node);
      if (!same_expr(cw->cond, ow.cond)) return false;
      if (!block(cw->body, ow.body, rel)) return false;
    }
    rel.id_map[c.id] = o.id;
    return true;
  }
};

/// Units not deleted themselves and not inside a deleted unit.
std::vector<bool> surviving(const UnitTree& tree, const std::vector<bool>& deleted) {
  std::vector<bool> alive(tree.units.size(), true);
  // Parents always precede children in tree order.
  for (std::size_t i = 0; i < tree.units.size(); ++i) {
    alive[i] = !deleted[i] && (!tree.parent[i] || alive[*tree.parent[i]]);
  }
  return alive;
}

SliceResult package(const Program& p, const UnitTree& tree,
                    const std::vector<bool>& retained_mask, Strategy strategy,
                    const Contract& c, const Domain& dom, Int budget) {
  SliceResult out;
  std::set<DeletionUnit> deleted;
  for (std::size_t i = 0; i < tree.units.size(); ++i) {
    if (retained_mask[i]) {
      out.retained.push_back(tree.units[i]);
    } else {
      out.deleted.push_back(tree.units[i]);
      deleted.insert(tree.units[i]);
    }
  }
  out.program = apply_deletion(p, deleted);
  out.strategy = strategy;
  out.minimal = strategy == Strategy::kExhaustive;
  out.verification = check(out.program, c, dom, budget);
  return out;
}

SliceResult slice_exhaustive(const Program& p, const Contract& c, const Domain& dom,
                             const SliceOptions& options, const UnitTree& tree) {
  const std::size_t n = tree.units.size();
  if (n > options.exhaustive_cap) {
    throw SliceError(SliceError::Reason::kTooManyUnits,
                     "exhaustive slicing refused: " + std::to_string(n) +
                         " deletable units exceed the cap of " +
                         std::to_string(options.exhaustive_cap) +
                         "; use the greedy strategy");
  }
  // Enumerate over units sorted by (stmt_id, kind) so that the first
  // success of each size is the lexicographically smallest retained set.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tree.units[a] < tree.units[b];
  });

  std::uint64_t checked = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      std::vector<bool> retained(n, false);
      for (std::size_t i : pick) retained[order[i]] = true;
      // Only parent-closed sets; any other set denotes the same program as
      // a smaller closed one that was already tried.
      bool closed = true;
      for (std::size_t u = 0; u < n && closed; ++u) {
        if (retained[u] && tree.parent[u] && !retained[*tree.parent[u]]) closed = false;
      }
      if (closed) {
        std::set<DeletionUnit> deleted;
        for (std::size_t u = 0; u < n; ++u) {
          if (!retained[u]) deleted.insert(tree.units[u]);
        }
        ++checked;
        if (check(apply_deletion(p, deleted), c, dom, options.step_budget).verified()) {
          SliceResult out = package(p, tree, retained, Strategy::kExhaustive, c, dom,
                                    options.step_budget);
          out.candidates_checked = checked;
          return out;
        }
      }
      // Next k-combination of [0, n) in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // Unreachable: the full program (k == n) is Verified.
  throw SliceError(SliceError::Reason::kOriginalNotVerified,
                   "no verified deletion set found");
}

SliceResult slice_greedy(const Program& p, const Contract& c, const Domain& dom,
                         const SliceOptions& options, const UnitTree& tree) {
  const std::size_t n = tree.units.size();
  std::vector<bool> deleted(n, false);
  std::uint64_t checked = 0;
  for (std::size_t idx = n; idx-- > 0;) {
    if (!surviving(tree, deleted)[idx]) continue;
    deleted[idx] = true;
    std::set<DeletionUnit> set;
    for (std::size_t u = 0; u < n; ++u) {
      if (deleted[u]) set.insert(tree.units[u]);
    }
    ++checked;
    if (!check(apply_deletion(p, set), c, dom, options.step_budget).verified()) {
      deleted[idx] = false;
    }
  }
  SliceResult out = package(p, tree, surviving(tree, deleted), Strategy::kGreedy, c,
                            dom, options.step_budget);
  out.candidates_checked = checked;
  return out;
}

}  // namespace

std::vector<DeletionUnit> deletable_units(const Program& p) { return unit_tree(p).units; }

Program apply_deletion(const Program& p, const std::set<DeletionUnit>& deleted) {
  if (!deleted.empty()) {
    const auto units = deletable_units(p);
    for (const auto& u : deleted) {
      if (std::find(units.begin(), units.end(), u) == units.end()) {
        throw std::invalid_argument("no deletable unit " + to_string(u) + " in '" +
                                    p.name + "'");
      }
    }
  }
  Program out = p;
  out.body = delete_in(p.body, deleted);
  return out;
}

SliceRelation is_slice_of(const Program& candidate, const Program& original,
                          bool require_same_signature) {
  SliceRelation rel;
  if (require_same_signature && !candidate.same_signature(original)) return rel;
  if (!std::includes(original.locals.begin(), original.locals.end(),
                     candidate.locals.begin(), candidate.locals.end())) {
    return rel;
  }
  Embedder embedder;
  if (!embedder.block(candidate.body, original.body, rel)) return SliceRelation{};
  // Keep only the outermost deletions: nested ones are implied.
  const UnitTree tree = unit_tree(original);
  std::set<DeletionUnit> minimal;
  for (std::size_t i = 0; i < tree.units.size(); ++i) {
    if (!rel.deleted.count(tree.units[i])) continue;
    bool nested = false;
    for (auto up = tree.parent[i]; up; up = tree.parent[*up]) {
      if (rel.deleted.count(tree.units[*up])) nested = true;
    }
    if (!nested) minimal.insert(tree.units[i]);
  }
  rel.deleted = std::move(minimal);
  rel.holds = true;
  return rel;
}

SliceResult slice(const Program& p, const Contract& c, const Domain& dom,
                  const SliceOptions& options) {
  VerificationResult original = check(p, c, dom, options.step_budget);
  if (original.verdict == Verdict::kVacuous) {
    throw SliceError(SliceError::Reason::kVacuous,
                     "refusing to slice: the precondition is unsatisfiable over " +
                         dom.to_string(),
                     original);
  }
  if (!original.verified()) {
    throw SliceError(SliceError::Reason::kOriginalNotVerified,
                     std::string("the original program does not satisfy the contract (") +
                         to_string(original.verdict) + ")",
                     original);
  }
  const UnitTree tree = unit_tree(p);
  return options.strategy == Strategy::kExhaustive
             ? slice_exhaustive(p, c, dom, options, tree)
             : slice_greedy(p, c, dom, options, tree);
}

ProjectionCheck check_projection(const Program& original, const Program& sliced,
                                 const State& inputs,
                                 const std::set<std::string>& vars, Int step_budget) {
  const SliceRelation rel = is_slice_of(sliced, original);
  if (!rel.holds) {
    throw std::invalid_argument("'" + sliced.name + "' is not a slice of '" +
                                original.name + "'");
  }
  const RunResult a = run(original, inputs, step_budget);
  const RunResult b = run(sliced, inputs, step_budget);
  ProjectionCheck out;
  out.original_status = a.status;
  out.sliced_status = b.status;
  out.original = project(a.trajectory, vars);
  out.sliced = project(b.trajectory, vars);
  for (auto& entry : out.sliced) entry.stmt_id = rel.id_map.at(entry.stmt_id);
  out.equal = out.original == out.sliced;
  return out;
}

}  // namespace tddslicer
