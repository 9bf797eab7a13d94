#include "schur6/constraint_search.hpp"
#include "schur6/covers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace schur6 {

namespace {

constexpr int kSlots = 20;

struct SlotTable {
  std::vector<std::vector<SignRelation>> relations;  // per target slot
  int anchor_a = -1;  // slot of the triangle on the first three points
  int anchor_b = -1;  // slot of the triangle on the last three points
};

// Products of oriented triangles that land on a positively oriented triangle.
// Relations for the negatively oriented target of the same slot follow by the
// sign-covariant reading in sign_profile, so only one table is needed.
SlotTable build_table() {
  const Group& G = group_of_degree(6);
  std::vector<Triangle> triangles = all_triangles();
  if (static_cast<int>(triangles.size()) != kSlots)
    throw std::logic_error("expected twenty triangles");

  std::map<ElemRank, std::pair<int, int>> slot_of;  // rank -> (slot, sign)
  std::vector<ElemRank> positive(kSlots);
  for (int i = 0; i < kSlots; ++i)
    for (int sign : {+1, -1}) {
      ElemRank r = oriented_triangle_element(triangles[i], sign);
      slot_of[r] = {i, sign};
      if (sign > 0) positive[static_cast<std::size_t>(i)] = r;
    }

  SlotTable table;
  table.relations.assign(kSlots, {});
  for (const auto& [g, gs] : slot_of)
    for (const auto& [h, hs] : slot_of) {
      auto it = slot_of.find(G.mult(g, h));
      if (it == slot_of.end() || it->second.second < 0) continue;
      table.relations[static_cast<std::size_t>(it->second.first)].push_back(
          {gs.first, gs.second, hs.first, hs.second});
    }

  // Each positively oriented target z has exactly ten ordered factorisations
  // into oriented triangles: the square of its own inverse plus nine products
  // drawn from other slots. Conjugation by z permutes the factorisations,
  // fixing the first and splitting the other nine into three 3-orbits (z has
  // order three, so every orbit has size one or three).
  for (int i = 0; i < kSlots; ++i) {
    const std::vector<SignRelation>& rel = table.relations[static_cast<std::size_t>(i)];
    if (rel.size() != 10) throw std::logic_error("unexpected relation count");
    int diagonal = 0;
    for (const SignRelation& r : rel) {
      if (r.first_slot != i && r.second_slot != i) continue;
      ++diagonal;
      if (r.first_slot != i || r.second_slot != i || r.first_sign != -1 || r.second_sign != -1)
        throw std::logic_error("unexpected same-slot relation shape");
    }
    if (diagonal != 1) throw std::logic_error("expected one same-slot relation");

    ElemRank z = positive[static_cast<std::size_t>(i)];
    std::vector<std::pair<ElemRank, ElemRank>> pairs;
    for (const auto& entry : slot_of) {
      ElemRank g = entry.first;
      ElemRank h_rank = G.mult(G.inv(g), z);
      if (slot_of.find(h_rank) == slot_of.end()) continue;
      pairs.push_back({g, h_rank});
    }
    if (pairs.size() != rel.size()) throw std::logic_error("pair recovery mismatch");
    int fixed = 0;
    for (const auto& [g, h] : pairs) {
      ElemRank cg = G.conj(z, g);
      ElemRank ch = G.conj(z, h);
      if (G.mult(cg, ch) != z) throw std::logic_error("conjugation left the relation set");
      if (cg == g && ch == h) ++fixed;
    }
    if (fixed != 1) throw std::logic_error("conjugation should fix only the same-slot relation");
  }
  return table;
}

const SlotTable& slot_table() {
  static const SlotTable table = [] {
    SlotTable t = build_table();
    std::vector<Triangle> triangles = all_triangles();
    for (int i = 0; i < kSlots; ++i) {
      if (triangles[static_cast<std::size_t>(i)] == Triangle{1, 2, 3}) t.anchor_a = i;
      if (triangles[static_cast<std::size_t>(i)] == Triangle{4, 5, 6}) t.anchor_b = i;
    }
    if (t.anchor_a < 0 || t.anchor_b < 0) throw std::logic_error("anchor triangles missing");
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<std::vector<SignRelation>>& sign_relations() { return slot_table().relations; }

std::array<int, kSlots> sign_profile(const TriangleSigns& signs) {
  const std::vector<std::vector<SignRelation>>& relations = sign_relations();
  std::array<int, kSlots> profile{};
  for (int i = 0; i < kSlots; ++i) {
    int s = signs[static_cast<std::size_t>(i)];
    int count = 0;
    for (const SignRelation& r : relations[static_cast<std::size_t>(i)])
      if (signs[static_cast<std::size_t>(r.first_slot)] * r.first_sign == s &&
          signs[static_cast<std::size_t>(r.second_slot)] * r.second_sign == s)
        ++count;
    profile[static_cast<std::size_t>(i)] = count;
  }
  return profile;
}

SignSystemReport sign_system_c3() {
  const SlotTable& table = slot_table();
  std::vector<int> free_slots;
  for (int i = 0; i < kSlots; ++i)
    if (i != table.anchor_a && i != table.anchor_b) free_slots.push_back(i);

  SignSystemReport report;
  report.slot_count = kSlots;
  report.ordered_relations_per_slot = static_cast<int>(table.relations[0].size());
  // The same-slot factorisation pairs both orientations of the target's own
  // triangle, so it can never fire when each triangle carries one chosen
  // orientation; the remaining relations are the terms of the profile sum.
  report.active_relations_per_slot = report.ordered_relations_per_slot - 1;
  report.assignments_scanned = 1LL << free_slots.size();
  report.satisfiable = false;
  report.max_equal_slots = 0;

  TriangleSigns signs;
  signs.fill(+1);
  for (long long mask = 0; mask < report.assignments_scanned; ++mask) {
    for (std::size_t b = 0; b < free_slots.size(); ++b)
      signs[static_cast<std::size_t>(free_slots[b])] = (mask >> b) & 1 ? -1 : +1;
    std::array<int, kSlots> profile = sign_profile(signs);
    std::sort(profile.begin(), profile.end());
    int best = 1, run = 1;
    for (int i = 1; i < kSlots; ++i) {
      run = profile[static_cast<std::size_t>(i)] == profile[static_cast<std::size_t>(i - 1)]
                ? run + 1
                : 1;
      best = std::max(best, run);
    }
    report.max_equal_slots = std::max(report.max_equal_slots, best);
    if (best == kSlots) {
      report.satisfiable = true;
      ++report.satisfying_assignments;
    }
  }
  return report;
}

}  // namespace schur6
