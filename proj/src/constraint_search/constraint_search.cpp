#include "schur6/constraint_search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

namespace schur6 {

namespace {

// Variable blocks over one conjugacy class. Symmetric: one block per inverse
// pair, ordered by the smaller rank. Asymmetric: one block per element, the
// representative of each pair directly followed by its inverse.
std::vector<ElementSet> make_blocks(const Group& G, const CycleType& cls, bool symmetric) {
  const ElementSet& members = G.whole_class(cls);
  std::vector<bool> seen(static_cast<std::size_t>(G.order()), false);
  std::vector<ElementSet> blocks;
  for (ElemRank r : members) {
    if (seen[r]) continue;
    ElemRank s = G.inv(r);
    seen[r] = true;
    if (s != r) seen[s] = true;
    if (symmetric) {
      ElementSet b{r};
      if (s != r) b.push_back(s);
      std::sort(b.begin(), b.end());
      blocks.push_back(std::move(b));
    } else {
      blocks.push_back({r});
      if (s != r) blocks.push_back({s});
    }
  }
  return blocks;
}

// Number of factor-class elements f with a*f landing in the target class;
// constant across the candidate class because it is a class function.
int element_row_sum(const Group& G, const CycleType& cls, const RestrictionEquation& eq) {
  if (!eq.factor_class) throw std::invalid_argument("linear condition needs a factor class");
  const ElementSet& factor = G.whole_class(*eq.factor_class);
  int target_id = G.class_id_of_type(eq.target_class);
  ElemRank a = G.whole_class(cls).front();
  int sum = 0;
  for (ElemRank f : factor)
    if (G.class_id_of(G.mult(a, f)) == target_id) ++sum;
  return sum;
}

std::vector<int> class_positions(const Group& G, const CycleType& t) {
  std::vector<int> pos(static_cast<std::size_t>(G.order()), -1);
  const ElementSet& members = G.whole_class(t);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
  return pos;
}

LinearTargetCondition compile_linear(const Group& G, const std::vector<ElementSet>& blocks,
                                     const RestrictionEquation& eq) {
  LinearTargetCondition cond;
  cond.name = eq.name;
  cond.factor_class = *eq.factor_class;
  cond.target_class = eq.target_class;
  cond.target = eq.target;
  const ElementSet& factor = G.whole_class(*eq.factor_class);
  std::vector<int> pos = class_positions(G, eq.target_class);
  std::size_t coords = G.whole_class(eq.target_class).size();
  cond.weight.assign(blocks.size(), std::vector<int>(coords, 0));
  for (std::size_t v = 0; v < blocks.size(); ++v)
    for (ElemRank a : blocks[v])
      for (ElemRank f : factor) {
        int p = pos[G.mult(a, f)];
        if (p >= 0) ++cond.weight[v][p];
      }
  return cond;
}

QuadraticCondition compile_quadratic(const Group& G, const std::vector<ElementSet>& blocks,
                                     const RestrictionEquation& eq) {
  QuadraticCondition cond;
  cond.name = eq.name;
  cond.factor_class = eq.factor_class;
  cond.target_class = eq.target_class;
  cond.scope = eq.scope;
  std::vector<int> pos = class_positions(G, eq.target_class);
  std::size_t coords = G.whole_class(eq.target_class).size();

  // row[z]: contribution of one ordered product landing on z, spread over the
  // coordinates after the optional central factor.
  std::vector<std::vector<int>> row(static_cast<std::size_t>(G.order()),
                                    std::vector<int>(coords, 0));
  if (eq.factor_class) {
    const ElementSet& factor = G.whole_class(*eq.factor_class);
    for (int z = 0; z < G.order(); ++z)
      for (ElemRank f : factor) {
        int p = pos[G.mult(static_cast<ElemRank>(z), f)];
        if (p >= 0) ++row[static_cast<std::size_t>(z)][static_cast<std::size_t>(p)];
      }
  } else {
    for (int z = 0; z < G.order(); ++z) {
      int p = pos[z];
      if (p >= 0) row[static_cast<std::size_t>(z)][static_cast<std::size_t>(p)] = 1;
    }
  }

  std::size_t n = blocks.size();
  cond.pair_weight.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    cond.pair_weight[i].resize(n - i, std::vector<int>(coords, 0));
    for (std::size_t j = i; j < n; ++j) {
      std::vector<int>& cell = cond.pair_weight[i][j - i];
      for (ElemRank a : blocks[i])
        for (ElemRank b : blocks[j]) {
          const std::vector<int>& r1 = row[G.mult(a, b)];
          for (std::size_t c = 0; c < coords; ++c) cell[c] += r1[c];
          if (j > i) {
            const std::vector<int>& r2 = row[G.mult(b, a)];
            for (std::size_t c = 0; c < coords; ++c) cell[c] += r2[c];
          }
        }
    }
  }
  return cond;
}

// Evaluates one quadratic condition on a complete assignment.
bool quadratic_satisfied(const Group& G, const BoolSystem& sys, const QuadraticCondition& cond,
                         const std::vector<std::uint8_t>& assign) {
  std::vector<int> chosen;
  for (int v = 0; v < sys.var_count; ++v)
    if (assign[static_cast<std::size_t>(v)]) chosen.push_back(v);
  std::size_t coords = cond.pair_weight.empty() ? 0 : cond.pair_weight[0][0].size();
  std::vector<long long> value(coords, 0);
  for (std::size_t x = 0; x < chosen.size(); ++x)
    for (std::size_t y = x; y < chosen.size(); ++y) {
      int i = chosen[x], j = chosen[y];
      const std::vector<int>& cell =
          cond.pair_weight[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i)];
      for (std::size_t c = 0; c < coords; ++c) value[c] += cell[c];
    }
  if (cond.scope == QuadraticScope::kWholeClass) {
    for (std::size_t c = 1; c < coords; ++c)
      if (value[c] != value[0]) return false;
    return true;
  }
  // Split by membership: one common value on coordinates whose element was
  // chosen, another on the rest.
  const ElementSet& members = G.whole_class(cond.target_class);
  long long in_value = -1, out_value = -1;
  std::vector<std::uint8_t> in_candidate(members.size(), 0);
  for (int v : chosen)
    for (ElemRank a : sys.var_blocks[static_cast<std::size_t>(v)]) {
      auto it = std::lower_bound(members.begin(), members.end(), a);
      if (it != members.end() && *it == a)
        in_candidate[static_cast<std::size_t>(it - members.begin())] = 1;
    }
  bool in_seen = false, out_seen = false;
  for (std::size_t c = 0; c < coords; ++c) {
    if (in_candidate[c]) {
      if (!in_seen) { in_value = value[c]; in_seen = true; }
      else if (value[c] != in_value) return false;
    } else {
      if (!out_seen) { out_value = value[c]; out_seen = true; }
      else if (value[c] != out_value) return false;
    }
  }
  return true;
}

// The linear part of a system flattened to one coordinate array. Coordinate 0
// carries the cardinality constraint (weight one on every variable); the rest
// are the per-element coordinates of the linear conditions in order.
struct FlatSystem {
  int n = 0;
  std::vector<int> target;
  std::vector<int> cond_of_coord;                            // index into names
  std::vector<std::string> names;                            // names[0] == "cardinality"
  std::vector<std::vector<std::pair<int, int>>> var_coords;  // v -> (coord, weight)
  std::vector<std::vector<std::pair<int, int>>> coord_vars;  // c -> (var, weight)
  std::vector<int> partner;                                  // exclusion partner, -1 if none
};

FlatSystem flatten(const BoolSystem& sys) {
  FlatSystem fs;
  fs.n = sys.var_count;
  fs.names.push_back("cardinality");
  fs.target.push_back(sys.cardinality);
  fs.cond_of_coord.push_back(0);
  fs.var_coords.assign(static_cast<std::size_t>(fs.n), {});
  for (int v = 0; v < fs.n; ++v) fs.var_coords[static_cast<std::size_t>(v)].push_back({0, 1});

  for (const LinearTargetCondition& cond : sys.linear) {
    int name_id = static_cast<int>(fs.names.size());
    fs.names.push_back(cond.name);
    int coords = cond.weight.empty() ? 0 : static_cast<int>(cond.weight[0].size());
    int base = static_cast<int>(fs.target.size());
    for (int c = 0; c < coords; ++c) {
      fs.target.push_back(cond.target);
      fs.cond_of_coord.push_back(name_id);
    }
    for (int v = 0; v < fs.n; ++v)
      for (int c = 0; c < coords; ++c)
        if (int w = cond.weight[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]; w > 0)
          fs.var_coords[static_cast<std::size_t>(v)].push_back({base + c, w});
  }

  fs.coord_vars.assign(fs.target.size(), {});
  for (int v = 0; v < fs.n; ++v)
    for (auto [c, w] : fs.var_coords[static_cast<std::size_t>(v)])
      fs.coord_vars[static_cast<std::size_t>(c)].push_back({v, w});

  fs.partner.assign(static_cast<std::size_t>(fs.n), -1);
  for (auto [i, j] : sys.exclusions) {
    if (fs.partner[static_cast<std::size_t>(i)] != -1 ||
        fs.partner[static_cast<std::size_t>(j)] != -1)
      throw std::logic_error("solver supports at most one exclusion per variable");
    fs.partner[static_cast<std::size_t>(i)] = j;
    fs.partner[static_cast<std::size_t>(j)] = i;
  }
  return fs;
}

// Complete enumeration by propagate-and-branch. Every coordinate must hit its
// target exactly, so a coordinate forces a variable to zero as soon as the
// weight would overshoot, and to one as soon as the remaining support is no
// longer enough without it. Branching picks a variable on the coordinate with
// the fewest undecided supporters. Solutions are emitted in search order and
// sorted lexicographically afterwards.
struct CpSolver {
  const BoolSystem& sys;
  const FlatSystem& fs;

  std::vector<std::int8_t> val;  // -1 undecided
  std::vector<int> cur;          // chosen weight per coord
  std::vector<int> avail;        // undecided weight per coord
  std::vector<int> trail;        // assigned variables in order

  struct Pending {
    int var;
    int value;
    int reason;  // index into fs.names, or -1 for "pair exclusion"
  };
  std::vector<Pending> queue;

  SolveStats stats;
  std::vector<std::vector<std::uint8_t>> out;

  // Frontier mode: stop each branch after this many decisions and emit the
  // trail snapshot instead of searching further.
  int frontier_decisions = -1;
  std::vector<std::vector<Pending>>* frontier = nullptr;

  explicit CpSolver(const BoolSystem& s, const FlatSystem& f) : sys(s), fs(f) {
    val.assign(static_cast<std::size_t>(fs.n), -1);
    cur.assign(fs.target.size(), 0);
    avail.assign(fs.target.size(), 0);
    for (std::size_t c = 0; c < fs.target.size(); ++c)
      for (auto [v, w] : fs.coord_vars[c]) {
        (void)v;
        avail[c] += w;
      }
  }

  void reject(int reason) {
    ++stats.rejected_by[reason < 0 ? "pair exclusion" : fs.names[static_cast<std::size_t>(reason)]];
  }

  // Enqueues the forcings visible on one coordinate; false on dead coordinate.
  bool scan_coord(int c) {
    int need = fs.target[static_cast<std::size_t>(c)] - cur[static_cast<std::size_t>(c)];
    if (need < 0) {
      reject(fs.cond_of_coord[static_cast<std::size_t>(c)]);
      return false;
    }
    int slack = avail[static_cast<std::size_t>(c)] - need;
    if (slack < 0) {
      reject(fs.cond_of_coord[static_cast<std::size_t>(c)]);
      return false;
    }
    for (auto [u, w] : fs.coord_vars[static_cast<std::size_t>(c)]) {
      if (val[static_cast<std::size_t>(u)] != -1) continue;
      if (w > need)
        queue.push_back({u, 0, fs.cond_of_coord[static_cast<std::size_t>(c)]});
      if (w > slack)
        queue.push_back({u, 1, fs.cond_of_coord[static_cast<std::size_t>(c)]});
    }
    return true;
  }

  bool apply(int v, int value, int reason) {
    std::int8_t& slot = val[static_cast<std::size_t>(v)];
    if (slot != -1) {
      if (slot == value) return true;
      reject(reason);
      return false;
    }
    slot = static_cast<std::int8_t>(value);
    trail.push_back(v);
    for (auto [c, w] : fs.var_coords[static_cast<std::size_t>(v)]) {
      avail[static_cast<std::size_t>(c)] -= w;
      if (value) cur[static_cast<std::size_t>(c)] += w;
    }
    int p = fs.partner[static_cast<std::size_t>(v)];
    if (value && p >= 0) {
      if (val[static_cast<std::size_t>(p)] == 1) {
        reject(-1);
        return false;
      }
      if (val[static_cast<std::size_t>(p)] == -1) queue.push_back({p, 0, -1});
    }
    for (auto [c, w] : fs.var_coords[static_cast<std::size_t>(v)]) {
      (void)w;
      if (!scan_coord(c)) return false;
    }
    return true;
  }

  bool propagate() {
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Pending p = queue[head];
      if (!apply(p.var, p.value, p.reason)) {
        queue.clear();
        return false;
      }
    }
    queue.clear();
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      int v = trail.back();
      trail.pop_back();
      int value = val[static_cast<std::size_t>(v)];
      val[static_cast<std::size_t>(v)] = -1;
      for (auto [c, w] : fs.var_coords[static_cast<std::size_t>(v)]) {
        avail[static_cast<std::size_t>(c)] += w;
        if (value) cur[static_cast<std::size_t>(c)] -= w;
      }
    }
  }

  // Coordinate still in play with the fewest undecided supporters.
  int pick_branch_var() const {
    int best_coord = -1;
    int best_support = -1;
    for (std::size_t c = 0; c < fs.target.size(); ++c) {
      if (fs.target[c] == cur[c]) continue;
      int support = 0;
      for (auto [u, w] : fs.coord_vars[c]) {
        (void)w;
        if (val[static_cast<std::size_t>(u)] == -1) ++support;
      }
      if (best_coord < 0 || support < best_support) {
        best_coord = static_cast<int>(c);
        best_support = support;
      }
    }
    if (best_coord < 0) return -1;
    for (auto [u, w] : fs.coord_vars[static_cast<std::size_t>(best_coord)]) {
      (void)w;
      if (val[static_cast<std::size_t>(u)] == -1) return u;
    }
    throw std::logic_error("open coordinate without undecided support");
  }

  void leaf() {
    ++stats.linear_complete;
    std::vector<std::uint8_t> assign(static_cast<std::size_t>(fs.n), 0);
    for (int v = 0; v < fs.n; ++v) assign[static_cast<std::size_t>(v)] =
        val[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
    const Group& G = group_of_degree(sys.degree);
    for (const QuadraticCondition& q : sys.quadratic)
      if (!quadratic_satisfied(G, sys, q, assign)) {
        ++stats.rejected_by[q.name];
        return;
      }
    out.push_back(std::move(assign));
  }

  void search(int decisions) {
    ++stats.nodes;
    if (static_cast<int>(trail.size()) == fs.n) {
      leaf();
      return;
    }
    if (frontier && decisions == frontier_decisions) {
      std::vector<Pending> snapshot;
      snapshot.reserve(trail.size());
      for (int v : trail)
        snapshot.push_back({v, val[static_cast<std::size_t>(v)], 0});
      frontier->push_back(std::move(snapshot));
      return;
    }
    int v = pick_branch_var();
    if (v < 0) {
      // Every coordinate is at target; any remaining one would overshoot the
      // cardinality coordinate, so close the assignment with zeros.
      std::size_t mark = trail.size();
      bool ok = true;
      for (int u = 0; u < fs.n && ok; ++u)
        if (val[static_cast<std::size_t>(u)] == -1) ok = apply(u, 0, 0);
      queue.clear();
      if (ok) leaf();
      undo_to(mark);
      return;
    }
    for (int value : {0, 1}) {
      std::size_t mark = trail.size();
      queue.push_back({v, value, 0});
      if (propagate()) search(decisions + 1);
      undo_to(mark);
    }
  }
};

void merge_stats(SolveStats& into, const SolveStats& from) {
  into.nodes += from.nodes;
  into.linear_complete += from.linear_complete;
  for (const auto& [k, v] : from.rejected_by) into.rejected_by[k] += v;
}

// Shared root setup: full initial scan plus the optional anchor.
bool root_propagate(CpSolver& solver, const std::optional<Anchor>& anchor) {
  for (std::size_t c = 0; c < solver.fs.target.size(); ++c)
    if (!solver.scan_coord(static_cast<int>(c))) {
      solver.queue.clear();
      return false;
    }
  if (anchor) solver.queue.push_back({anchor->variable, anchor->value, 0});
  return solver.propagate();
}

}  // namespace

BoolSystem build_system(const CycleType& candidate_class, int size, bool symmetric,
                        const std::vector<RestrictionEquation>& conditions) {
  const Group& G = group_of_degree(6);
  BoolSystem sys;
  sys.degree = 6;
  sys.candidate_class = candidate_class;
  sys.candidate_size = size;
  sys.symmetric = symmetric;
  sys.var_blocks = make_blocks(G, candidate_class, symmetric);
  sys.var_count = static_cast<int>(sys.var_blocks.size());

  std::size_t block_size = sys.var_blocks.front().size();
  for (const ElementSet& b : sys.var_blocks)
    if (b.size() != block_size)
      throw std::invalid_argument("class mixes block shapes; candidate size is ambiguous");
  int class_size = static_cast<int>(G.whole_class(candidate_class).size());
  if (size <= 0 || size > class_size || size % static_cast<int>(block_size) != 0)
    throw std::invalid_argument("candidate size inconsistent with the block shape");
  sys.cardinality = size / static_cast<int>(block_size);

  if (!symmetric) {
    // make_blocks emits each representative directly before its inverse.
    for (int v = 0; v + 1 < sys.var_count; v += 2)
      if (sys.var_blocks[static_cast<std::size_t>(v + 1)][0] ==
          G.inv(sys.var_blocks[static_cast<std::size_t>(v)][0]))
        sys.exclusions.push_back({v, v + 1});
  }

  for (const RestrictionEquation& eq : conditions) {
    if (eq.kind == RestrictionEquation::Kind::kLinear) {
      sys.linear.push_back(compile_linear(G, sys.var_blocks, eq));
    } else {
      if (eq.scope == QuadraticScope::kSplitByMembership && eq.target_class != candidate_class)
        throw std::invalid_argument(
            "membership-split conditions need the candidate class as target");
      sys.quadratic.push_back(compile_quadratic(G, sys.var_blocks, eq));
    }
  }
  return sys;
}

std::optional<int> forced_target(const CycleType& candidate_class, int size,
                                 const RestrictionEquation& eq) {
  if (eq.kind != RestrictionEquation::Kind::kLinear) return std::nullopt;
  const Group& G = group_of_degree(6);
  long long rhs = static_cast<long long>(size) * element_row_sum(G, candidate_class, eq);
  long long coords = static_cast<long long>(G.whole_class(eq.target_class).size());
  if (rhs % coords != 0) return std::nullopt;
  return static_cast<int>(rhs / coords);
}

std::vector<int> admissible_sizes(const CycleType& candidate_class,
                                  const std::vector<RestrictionEquation>& conditions) {
  const Group& G = group_of_degree(6);
  int class_size = static_cast<int>(G.whole_class(candidate_class).size());
  std::vector<int> sizes;
  for (int s = 1; s < class_size; ++s) {
    bool ok = true;
    for (const RestrictionEquation& eq : conditions) {
      if (eq.kind != RestrictionEquation::Kind::kLinear) continue;
      if (!forced_target(candidate_class, s, eq)) {
        ok = false;
        break;
      }
    }
    if (ok) sizes.push_back(s);
  }
  return sizes;
}

SolveResult solve(const BoolSystem& system, std::optional<Anchor> anchor, int jobs) {
  if (anchor && (anchor->variable < 0 || anchor->variable >= system.var_count))
    throw std::invalid_argument("anchor variable out of range");
  FlatSystem fs = flatten(system);

  SolveResult result;
  CpSolver root(system, fs);
  if (!root_propagate(root, anchor)) {
    result.stats = root.stats;
    return result;
  }

  if (jobs <= 1) {
    root.search(0);
    result.assignments = std::move(root.out);
    result.stats = root.stats;
  } else {
    // Split the tree at a fixed decision depth and hand the subtrees to a
    // small pool. The final sort makes the outcome independent of the split.
    std::vector<std::vector<CpSolver::Pending>> frontier;
    root.frontier_decisions = 8;
    root.frontier = &frontier;
    root.search(0);
    SolveStats total = root.stats;
    result.assignments = std::move(root.out);

    std::vector<std::vector<std::vector<std::uint8_t>>> outs(frontier.size());
    std::vector<SolveStats> stats(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      CpSolver s(system, fs);
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= frontier.size()) break;
        s.stats = SolveStats{};
        s.out.clear();
        s.undo_to(0);
        bool ok = root_propagate(s, anchor);
        for (const CpSolver::Pending& p : frontier[i]) {
          if (!ok) break;
          s.queue.push_back(p);
          ok = s.propagate();
        }
        if (ok) s.search(root.frontier_decisions);
        outs[i] = std::move(s.out);
        stats[i] = s.stats;
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      merge_stats(total, stats[i]);
      for (std::vector<std::uint8_t>& a : outs[i]) result.assignments.push_back(std::move(a));
    }
    // Entering a frontier node is counted by both passes; keep each node once.
    total.nodes -= static_cast<long long>(frontier.size());
    result.stats = std::move(total);
  }

  std::sort(result.assignments.begin(), result.assignments.end());
  return result;
}

ElementSet decode(const BoolSystem& system, const std::vector<std::uint8_t>& assignment) {
  ElementSet s;
  for (int v = 0; v < system.var_count; ++v)
    if (assignment[static_cast<std::size_t>(v)])
      for (ElemRank r : system.var_blocks[static_cast<std::size_t>(v)]) s.push_back(r);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<SolutionClass> classify_solutions(const Group& G,
                                              const std::vector<ElementSet>& sets) {
  std::map<ElementSet, SolutionClass> by_canon;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    ElementSet canon = G.canonical_set_form(sets[i]);
    auto [it, fresh] = by_canon.try_emplace(canon);
    if (fresh) {
      it->second.representative = sets[i];
      it->second.canonical_form = canon;
    }
    it->second.members.push_back(static_cast<int>(i));
  }
  std::vector<SolutionClass> classes;
  for (auto& [canon, cls] : by_canon) classes.push_back(std::move(cls));
  std::sort(classes.begin(), classes.end(), [](const SolutionClass& a, const SolutionClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.canonical_form < b.canonical_form;
  });
  return classes;
}

std::optional<std::string> algebra_recheck(const BoolSystem& system, const ElementSet& candidate) {
  const Group& G = group_of_degree(system.degree);
  if (static_cast<int>(candidate.size()) != system.candidate_size)
    return "candidate size mismatch";
  int cls_id = G.class_id_of_type(system.candidate_class);
  for (ElemRank r : candidate)
    if (G.class_id_of(r) != cls_id) return "candidate leaves its class";
  ElementSet inv = G.inverse_set(candidate);
  if (system.symmetric) {
    if (inv != candidate) return "candidate not inverse-closed";
  } else {
    if (!sets_disjoint(inv, candidate)) return "candidate meets its inverse set";
  }

  AlgebraElement x = AlgebraElement::indicator(system.degree, candidate);
  for (const LinearTargetCondition& cond : system.linear) {
    AlgebraElement product =
        multiply(x, AlgebraElement::class_sum(system.degree, cond.factor_class));
    AlgebraElement expected = AlgebraElement::class_sum(system.degree, cond.target_class);
    expected *= cond.target;
    if (product.restrict_to_class(cond.target_class) != expected) return cond.name;
  }
  for (const QuadraticCondition& cond : system.quadratic) {
    AlgebraElement square = multiply(x, x);
    if (cond.factor_class)
      square = multiply(square, AlgebraElement::class_sum(system.degree, *cond.factor_class));
    AlgebraElement restricted = square.restrict_to_class(cond.target_class);
    if (cond.scope == QuadraticScope::kWholeClass) {
      if (!restricted.constant_on(G.whole_class(cond.target_class))) return cond.name;
    } else {
      const ElementSet& members = G.whole_class(cond.target_class);
      if (!restricted.constant_on(candidate)) return cond.name;
      if (!restricted.constant_on(set_difference_of(members, candidate))) return cond.name;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Named case fixtures
// ---------------------------------------------------------------------------

namespace {

const CycleType kFiveCycle{5, 1};
const CycleType kSixCycle{6};
const CycleType kDoubleThree{3, 3};
const CycleType kTransposition{2, 1, 1, 1, 1};
const CycleType kThreeCycle{3, 1, 1, 1};
const CycleType kFourCycle{4, 1, 1};
const CycleType kDoubleTransposition{2, 2, 1, 1};
const CycleType kMixed{3, 2, 1};

RestrictionEquation linear_eq(std::string name, CycleType factor, CycleType target) {
  RestrictionEquation eq;
  eq.name = std::move(name);
  eq.kind = RestrictionEquation::Kind::kLinear;
  eq.factor_class = std::move(factor);
  eq.target_class = std::move(target);
  return eq;
}

RestrictionEquation quadratic_eq(std::string name, std::optional<CycleType> factor,
                                 CycleType target,
                                 QuadraticScope scope = QuadraticScope::kWholeClass) {
  RestrictionEquation eq;
  eq.name = std::move(name);
  eq.kind = RestrictionEquation::Kind::kQuadratic;
  eq.factor_class = std::move(factor);
  eq.target_class = std::move(target);
  eq.scope = scope;
  return eq;
}

std::vector<RestrictionEquation> five_cycle_conditions(bool with_four_cycle, bool with_square) {
  std::vector<RestrictionEquation> conds;
  conds.push_back(linear_eq("transposition product", kTransposition, kMixed));
  conds.push_back(linear_eq("three-cycle product", kThreeCycle, kThreeCycle));
  if (with_four_cycle)
    conds.push_back(linear_eq("four-cycle product", kFourCycle, kTransposition));
  if (with_square)
    conds.push_back(quadratic_eq("square restriction", std::nullopt, kThreeCycle));
  return conds;
}

std::vector<RestrictionEquation> six_cycle_conditions() {
  std::vector<RestrictionEquation> conds;
  conds.push_back(linear_eq("four-cycle product", kFourCycle, kThreeCycle));
  conds.push_back(linear_eq("five-cycle product", kFiveCycle, kTransposition));
  conds.push_back(linear_eq("mixed-cycle product", kMixed, kThreeCycle));
  conds.push_back(linear_eq("double-transposition product", kDoubleTransposition, kMixed));
  conds.push_back(quadratic_eq("square restriction", std::nullopt, kThreeCycle));
  conds.push_back(quadratic_eq("square double-transposition restriction", kDoubleTransposition,
                               kThreeCycle));
  return conds;
}

// In the branch under study the ring contains the transposition and three-cycle
// class sums, and those two generate the entire center of the group algebra.
// Every class sum therefore lies in the ring, so for every nontrivial class K
// and every class T kept whole by the branch, the product of the candidate sum
// with K restricted to T must be a constant multiple of T. Each pairing with a
// nonzero row sum yields one linear condition; pairings already covered by a
// stated condition are skipped.
std::vector<RestrictionEquation> derived_product_conditions(
    const CycleType& candidate, const std::vector<RestrictionEquation>& stated) {
  const Group& G = group_of_degree(6);
  const std::vector<CycleType> whole_targets = {kTransposition, kThreeCycle, kMixed};
  const ElemRank rep = G.class_members(G.class_id_of_type(candidate))[0];
  std::vector<RestrictionEquation> out;
  for (int k = 0; k < G.class_count(); ++k) {
    if (G.class_members(k).size() == 1) continue;
    for (const CycleType& target : whole_targets) {
      int row_sum = 0;
      for (ElemRank t : G.class_members(G.class_id_of_type(target)))
        if (G.class_id_of(G.mult(G.inv(rep), t)) == k) ++row_sum;
      if (row_sum == 0) continue;
      bool duplicate = false;
      for (const RestrictionEquation& st : stated)
        if (st.kind == RestrictionEquation::Kind::kLinear && st.factor_class &&
            *st.factor_class == G.class_type(k) && st.target_class == target)
          duplicate = true;
      if (duplicate) continue;
      out.push_back(linear_eq("derived " + format_cycle_type(G.class_type(k)) + "->" +
                                  format_cycle_type(target),
                              G.class_type(k), target));
    }
  }
  return out;
}

std::vector<RestrictionEquation> with_derived(const CycleType& candidate,
                                              std::vector<RestrictionEquation> stated) {
  for (RestrictionEquation& eq : derived_product_conditions(candidate, stated))
    stated.push_back(std::move(eq));
  return stated;
}

struct FixtureSpec {
  std::string id;
  CycleType cls;
  int size = 0;
  bool symmetric = true;
  bool anchor_first_out = false;  // fix the first variable to 0
  std::vector<RestrictionEquation> conditions;
  std::vector<RestrictionEquation> post_conditions;
};

std::vector<FixtureSpec> fixture_specs() {
  std::vector<FixtureSpec> specs;
  specs.push_back({"C51-case1-symmetric", kFiveCycle, 24, true, true,
                   with_derived(kFiveCycle, five_cycle_conditions(false, false)),
                   {quadratic_eq("square restriction", std::nullopt, kThreeCycle)}});
  specs.push_back({"C51-case1-asymmetric", kFiveCycle, 24, false, false,
                   five_cycle_conditions(false, false), {}});
  specs.push_back({"C51-case2-symmetric", kFiveCycle, 48, true, true,
                   with_derived(kFiveCycle, five_cycle_conditions(false, false)),
                   {quadratic_eq("square restriction", std::nullopt, kThreeCycle)}});
  specs.push_back({"C51-case3-symmetric", kFiveCycle, 72, true, true,
                   with_derived(kFiveCycle, five_cycle_conditions(true, true)), {}});
  specs.push_back({"C51-case3-asymmetric", kFiveCycle, 72, false, false,
                   with_derived(kFiveCycle, five_cycle_conditions(true, true)), {}});
  specs.push_back({"C6-case1-symmetric", kSixCycle, 20, true, true,
                   six_cycle_conditions(), {}});
  specs.push_back({"C6-case1-asymmetric", kSixCycle, 20, false, false,
                   six_cycle_conditions(), {}});
  specs.push_back({"C6-case2-symmetric", kSixCycle, 40, true, true,
                   with_derived(kSixCycle, six_cycle_conditions()), {}});
  specs.push_back({"C6-case2-asymmetric", kSixCycle, 40, false, false,
                   with_derived(kSixCycle, six_cycle_conditions()), {}});
  specs.push_back({"C6-case3-symmetric", kSixCycle, 60, true, true,
                   with_derived(kSixCycle, six_cycle_conditions()), {}});
  specs.push_back({"C6-case3-asymmetric", kSixCycle, 60, false, false,
                   with_derived(kSixCycle, six_cycle_conditions()), {}});
  specs.push_back({"C33-pairs", kDoubleThree, 20, true, false,
                   {quadratic_eq("two-level square restriction", std::nullopt, kDoubleThree,
                                 QuadraticScope::kSplitByMembership)},
                   {}});
  return specs;
}

// The two commuting 3-cycle constituents of a (3,3)-element.
std::pair<Perm, Perm> double_three_parts(const Perm& p) {
  std::vector<std::vector<int>> cycles = p.cycles();
  std::vector<int> images(6);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t k = 0; k < cycles[0].size(); ++k)
    images[static_cast<std::size_t>(cycles[0][k] - 1)] =
        cycles[0][(k + 1) % cycles[0].size()] - 1;
  Perm first = Perm::from_images(6, images);
  return {first, compose(p, inverse(first))};
}

// Sibling pair-variable exclusions for the (3,3) system: writing an element
// as a product a*b of its two 3-cycle constituents, the four elements
// ab, (a^-1)b, a(b^-1), (a^-1)(b^-1) form a quadruple holding two inverse
// pairs, and a candidate may use at most one pair per quadruple.
void add_quadruple_exclusions(const Group& G, BoolSystem& sys) {
  std::map<ElemRank, int> var_of;
  for (int v = 0; v < sys.var_count; ++v)
    for (ElemRank r : sys.var_blocks[static_cast<std::size_t>(v)]) var_of[r] = v;
  std::set<std::pair<int, int>> quadruple_pairs;
  for (const ElementSet& block : sys.var_blocks) {
    Perm p = G.element(block[0]);
    auto [a, b] = double_three_parts(p);
    ElemRank sibling = G.rank_of(compose(inverse(a), b));
    int v1 = var_of.at(block[0]);
    int v2 = var_of.at(sibling);
    if (v1 == v2) throw std::logic_error("quadruple collapsed to one inverse pair");
    quadruple_pairs.insert({std::min(v1, v2), std::max(v1, v2)});
  }
  for (const auto& [i, j] : quadruple_pairs) sys.exclusions.push_back({i, j});
  std::sort(sys.exclusions.begin(), sys.exclusions.end());
}

}  // namespace

std::vector<std::string> case_fixture_ids() {
  std::vector<std::string> ids;
  for (const FixtureSpec& spec : fixture_specs()) ids.push_back(spec.id);
  return ids;
}

CaseRun run_case_fixture(const std::string& id, int jobs) {
  const Group& G = group_of_degree(6);
  std::vector<FixtureSpec> specs = fixture_specs();
  auto it = std::find_if(specs.begin(), specs.end(),
                         [&](const FixtureSpec& s) { return s.id == id; });
  if (it == specs.end()) throw std::invalid_argument("unknown case fixture: " + id);
  FixtureSpec spec = *it;

  // Linear targets follow from the counting identity: the per-element row sum
  // times the candidate size must spread evenly over the target class.
  for (RestrictionEquation& eq : spec.conditions) {
    if (eq.kind != RestrictionEquation::Kind::kLinear) continue;
    std::optional<int> t = forced_target(spec.cls, spec.size, eq);
    if (!t) throw std::logic_error("fixture size fails the divisibility step: " + spec.id);
    eq.target = *t;
  }

  CaseRun run;
  run.id = spec.id;
  run.system = build_system(spec.cls, spec.size, spec.symmetric, spec.conditions);
  if (spec.id == "C33-pairs") {
    add_quadruple_exclusions(G, run.system);
    ElemRank anchor_elt = G.set_parse({"(1,2,3)(4,5,6)"})[0];
    for (int v = 0; v < run.system.var_count; ++v) {
      const ElementSet& b = run.system.var_blocks[static_cast<std::size_t>(v)];
      if (std::find(b.begin(), b.end(), anchor_elt) != b.end()) {
        run.anchor = Anchor{v, 1};
        break;
      }
    }
  } else if (spec.anchor_first_out) {
    run.anchor = Anchor{0, 0};
  }

  run.result = solve(run.system, run.anchor, jobs);
  for (const std::vector<std::uint8_t>& a : run.result.assignments)
    run.candidates.push_back(decode(run.system, a));
  run.classes = classify_solutions(G, run.candidates);

  if (!spec.post_conditions.empty()) {
    std::vector<QuadraticCondition> post;
    for (const RestrictionEquation& eq : spec.post_conditions) {
      if (eq.kind != RestrictionEquation::Kind::kQuadratic)
        throw std::logic_error("post conditions must be quadratic");
      run.post_condition_names.push_back(eq.name);
      post.push_back(compile_quadratic(G, run.system.var_blocks, eq));
    }
    std::vector<ElementSet> survivors;
    for (std::size_t i = 0; i < run.result.assignments.size(); ++i) {
      bool ok = true;
      for (const QuadraticCondition& q : post)
        if (!quadratic_satisfied(G, run.system, q, run.result.assignments[i])) {
          ok = false;
          break;
        }
      if (ok) {
        run.post_survivors.push_back(static_cast<int>(i));
        survivors.push_back(run.candidates[i]);
      }
    }
    run.post_classes = classify_solutions(G, survivors);
  }
  return run;
}

std::string CaseRun::to_json() const {
  const Group& G = group_of_degree(system.degree);
  nlohmann::json j;
  j["id"] = id;
  j["class"] = format_cycle_type(system.candidate_class);
  j["size"] = system.candidate_size;
  j["symmetric"] = system.symmetric;
  j["variables"] = system.var_count;
  j["cardinality"] = system.cardinality;
  j["exclusions"] = system.exclusions.size();
  if (anchor)
    j["anchor"] = {{"variable", anchor->variable}, {"value", anchor->value}};
  else
    j["anchor"] = nullptr;
  nlohmann::json conds = nlohmann::json::array();
  for (const LinearTargetCondition& c : system.linear)
    conds.push_back({{"name", c.name},
                     {"kind", "linear"},
                     {"factor", format_cycle_type(c.factor_class)},
                     {"restricted_to", format_cycle_type(c.target_class)},
                     {"target", c.target}});
  for (const QuadraticCondition& c : system.quadratic)
    conds.push_back(
        {{"name", c.name},
         {"kind", "quadratic"},
         {"factor", c.factor_class ? format_cycle_type(*c.factor_class) : ""},
         {"restricted_to", format_cycle_type(c.target_class)},
         {"scope",
          c.scope == QuadraticScope::kWholeClass ? "whole class" : "split by membership"}});
  j["conditions"] = conds;
  j["nodes"] = result.stats.nodes;
  j["linear_complete"] = result.stats.linear_complete;
  j["rejected_by"] = result.stats.rejected_by;
  j["solution_count"] = candidates.size();
  auto set_to_json = [&](const ElementSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (ElemRank r : s) arr.push_back(G.element(r).format());
    return arr;
  };
  nlohmann::json sols = nlohmann::json::array();
  for (const ElementSet& c : candidates) sols.push_back(set_to_json(c));
  j["solutions"] = sols;
  nlohmann::json cls = nlohmann::json::array();
  for (const SolutionClass& c : classes)
    cls.push_back({{"size", c.members.size()},
                   {"representative", set_to_json(c.representative)},
                   {"members", c.members}});
  j["classes"] = cls;
  if (!post_condition_names.empty()) {
    j["post_conditions"] = post_condition_names;
    j["post_survivors"] = post_survivors;
    nlohmann::json pc = nlohmann::json::array();
    for (const SolutionClass& c : post_classes)
      pc.push_back({{"size", c.members.size()},
                    {"representative", set_to_json(c.representative)},
                    {"members", c.members}});
    j["post_classes"] = pc;
  }
  return j.dump(2);
}

}  // namespace schur6
