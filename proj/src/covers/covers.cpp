#include "schur6/covers.hpp"

#include <algorithm>
#include <bit>

#include "schur6/checked.hpp"

namespace schur6 {
namespace {

constexpr int kEdges = 15;
constexpr int kTriangles = 20;

ElemRank three_cycle_rank(int a, int b, int c) {
  std::vector<int> img = {0, 1, 2, 3, 4, 5};
  img[a - 1] = b - 1;
  img[b - 1] = c - 1;
  img[c - 1] = a - 1;
  return static_cast<ElemRank>(Perm::from_images(6, img).rank());
}

ElemRank double_transposition_rank(int a, int b, int c, int d) {
  std::vector<int> img = {0, 1, 2, 3, 4, 5};
  std::swap(img[a - 1], img[b - 1]);
  std::swap(img[c - 1], img[d - 1]);
  return static_cast<ElemRank>(Perm::from_images(6, img).rank());
}

// Edge ids of a triangle, ascending.
std::array<int, 3> triangle_edges(const Triangle& t) {
  return {edge_id(t[0], t[1]), edge_id(t[0], t[2]), edge_id(t[1], t[2])};
}

}  // namespace

const std::vector<Triangle>& all_triangles() {
  static const std::vector<Triangle> triangles = [] {
    std::vector<Triangle> out;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) out.push_back({i, j, k});
    check(out.size() == kTriangles, "triangle census size");
    return out;
  }();
  return triangles;
}

int edge_id(int i, int j) {
  check(i >= 1 && i <= 6 && j >= 1 && j <= 6 && i != j, "edge_id: bad points");
  if (i > j) std::swap(i, j);
  // Lexicographic position of (i,j) among pairs 1 <= i < j <= 6.
  static const int row_start[6] = {0, 5, 9, 12, 14, 15};
  return row_start[i - 1] + (j - i - 1);
}

std::vector<std::vector<int>> triangle_covers(int lambda) {
  check(lambda >= 1 && lambda <= 4, "triangle_covers: lambda out of range");
  const auto& triangles = all_triangles();

  std::array<std::array<int, 3>, kTriangles> edges_of{};
  for (int t = 0; t < kTriangles; ++t) edges_of[t] = triangle_edges(triangles[t]);

  // suffix[t][e]: triangles with id >= t containing edge e.
  std::array<std::array<int, kEdges>, kTriangles + 1> suffix{};
  for (int t = kTriangles - 1; t >= 0; --t) {
    suffix[t] = suffix[t + 1];
    for (int e : edges_of[t]) ++suffix[t][e];
  }

  std::vector<std::vector<int>> covers;
  std::array<int, kEdges> count{};
  std::vector<int> chosen;

  auto dfs = [&](auto&& self, int t) -> void {
    for (int e = 0; e < kEdges; ++e)
      if (count[e] + suffix[t][e] < lambda) return;
    if (t == kTriangles) {
      covers.push_back(chosen);  // all edges exactly lambda by the check above
      return;
    }
    bool fits = true;
    for (int e : edges_of[t])
      if (count[e] == lambda) fits = false;
    if (fits) {
      for (int e : edges_of[t]) ++count[e];
      chosen.push_back(t);
      self(self, t + 1);
      chosen.pop_back();
      for (int e : edges_of[t]) --count[e];
    }
    self(self, t + 1);
  };
  dfs(dfs, 0);
  return covers;
}

ElementSet triangle_ids_to_elements(const std::vector<int>& triangle_ids) {
  const auto& triangles = all_triangles();
  ElementSet out;
  out.reserve(2 * triangle_ids.size());
  for (int id : triangle_ids) {
    const Triangle& t = triangles[static_cast<std::size_t>(id)];
    out.push_back(three_cycle_rank(t[0], t[1], t[2]));
    out.push_back(three_cycle_rank(t[0], t[2], t[1]));
  }
  std::sort(out.begin(), out.end());
  check(std::adjacent_find(out.begin(), out.end()) == out.end(),
        "triangle_ids_to_elements: repeated triangle");
  return out;
}

const std::vector<Triangle>& hemi_icosahedron() {
  static const std::vector<Triangle> faces = [] {
    std::vector<Triangle> out = {{1, 2, 3}, {1, 2, 4}, {2, 4, 5}, {1, 3, 5},
                                 {1, 5, 6}, {3, 4, 5}, {3, 4, 6}, {2, 5, 6},
                                 {2, 3, 6}, {1, 4, 6}};
    std::array<int, kEdges> count{};
    std::vector<Triangle> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    check(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "hemi_icosahedron: repeated face");
    for (const Triangle& t : out)
      for (int e : triangle_edges(t)) ++count[e];
    for (int e = 0; e < kEdges; ++e)
      check(count[e] == 2, "hemi_icosahedron: not a 2-cover");
    return out;
  }();
  return faces;
}

ElemRank oriented_triangle_element(const Triangle& t, int eps) {
  check(eps == 1 || eps == -1, "orientation must be +-1");
  return eps == 1 ? three_cycle_rank(t[0], t[1], t[2])
                  : three_cycle_rank(t[0], t[2], t[1]);
}

ElementSet oriented_hemi_set(const Orientation& eps) {
  const auto& faces = hemi_icosahedron();
  ElementSet out;
  out.reserve(10);
  for (int f = 0; f < 10; ++f)
    out.push_back(oriented_triangle_element(faces[static_cast<std::size_t>(f)], eps[static_cast<std::size_t>(f)]));
  std::sort(out.begin(), out.end());
  return out;
}

int opposite_edge_count(const Orientation& eps) {
  // For each edge, the direction induced by each incident face under the
  // listed (+1) orientation; true means low point -> high point.
  struct Incidence {
    int face;
    bool forward;
  };
  static const auto incidences = [] {
    std::array<std::vector<Incidence>, kEdges> out;
    const auto& fs = hemi_icosahedron();
    for (int f = 0; f < 10; ++f) {
      const Triangle& t = fs[static_cast<std::size_t>(f)];
      // +1 orientation directs t0->t1, t1->t2, t2->t0.
      out[static_cast<std::size_t>(edge_id(t[0], t[1]))].push_back({f, true});
      out[static_cast<std::size_t>(edge_id(t[1], t[2]))].push_back({f, true});
      out[static_cast<std::size_t>(edge_id(t[0], t[2]))].push_back({f, false});
    }
    for (const auto& inc : out) check(inc.size() == 2, "edge not on two faces");
    return out;
  }();

  int opposite = 0;
  for (int e = 0; e < kEdges; ++e) {
    const auto& inc = incidences[static_cast<std::size_t>(e)];
    bool d0 = inc[0].forward == (eps[static_cast<std::size_t>(inc[0].face)] == 1);
    bool d1 = inc[1].forward == (eps[static_cast<std::size_t>(inc[1].face)] == 1);
    if (d0 != d1) ++opposite;
  }
  return opposite;
}

std::vector<OrientationRecord> orientation_census() {
  std::vector<OrientationRecord> out;
  out.reserve(1024);
  for (unsigned mask = 0; mask < 1024; ++mask) {
    OrientationRecord rec;
    for (int f = 0; f < 10; ++f)
      rec.eps[static_cast<std::size_t>(f)] = (mask >> f) & 1u ? -1 : 1;
    rec.f_minus = std::popcount(mask);
    rec.opposite_edges = opposite_edge_count(rec.eps);
    out.push_back(rec);
  }
  return out;
}

namespace {

// Vertices are the 15 edges of K6; two are adjacent when disjoint.
struct DisjointnessGraph {
  std::array<std::pair<int, int>, kEdges> edge_points;
  std::array<std::vector<int>, kEdges> adj;
};

const DisjointnessGraph& disjointness_graph() {
  static const DisjointnessGraph g = [] {
    DisjointnessGraph out;
    int id = 0;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) out.edge_points[static_cast<std::size_t>(id++)] = {i, j};
    for (int u = 0; u < kEdges; ++u)
      for (int v = 0; v < kEdges; ++v) {
        if (u == v) continue;
        auto [a, b] = out.edge_points[static_cast<std::size_t>(u)];
        auto [c, d] = out.edge_points[static_cast<std::size_t>(v)];
        if (a != c && a != d && b != c && b != d) out.adj[static_cast<std::size_t>(u)].push_back(v);
      }
    for (const auto& n : out.adj) check(n.size() == 6, "disjointness graph degree");
    return out;
  }();
  return g;
}

}  // namespace

std::vector<ElementSet> edge_pair_two_factors() {
  const auto& g = disjointness_graph();
  std::vector<ElementSet> factors;
  std::array<int, kEdges> deg{};
  std::array<std::array<bool, kEdges>, kEdges> used{};
  std::vector<std::pair<int, int>> chosen;

  auto emit = [&] {
    ElementSet f;
    f.reserve(kEdges);
    for (auto [u, v] : chosen) {
      auto [a, b] = g.edge_points[static_cast<std::size_t>(u)];
      auto [c, d] = g.edge_points[static_cast<std::size_t>(v)];
      f.push_back(double_transposition_rank(a, b, c, d));
    }
    std::sort(f.begin(), f.end());
    factors.push_back(std::move(f));
  };

  auto add_edge = [&](int u, int v) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    chosen.emplace_back(u, v);
  };
  auto drop_edge = [&](int u, int v) {
    --deg[static_cast<std::size_t>(u)];
    --deg[static_cast<std::size_t>(v)];
    used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = false;
    chosen.pop_back();
  };

  auto dfs = [&](auto&& self) -> void {
    int v = -1;
    for (int u = 0; u < kEdges; ++u)
      if (deg[static_cast<std::size_t>(u)] < 2) {
        v = u;
        break;
      }
    if (v < 0) {
      emit();
      return;
    }
    std::vector<int> open;
    for (int u : g.adj[static_cast<std::size_t>(v)])
      if (deg[static_cast<std::size_t>(u)] < 2 && !used[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) open.push_back(u);
    if (deg[static_cast<std::size_t>(v)] == 1) {
      for (int u : open) {
        add_edge(v, u);
        self(self);
        drop_edge(v, u);
      }
    } else {
      // Fix v's full neighbourhood at once so each factor is built exactly
      // one way (the first deficient vertex is determined by the state).
      for (std::size_t i = 0; i < open.size(); ++i)
        for (std::size_t j = i + 1; j < open.size(); ++j) {
          add_edge(v, open[i]);
          add_edge(v, open[j]);
          self(self);
          drop_edge(v, open[j]);
          drop_edge(v, open[i]);
        }
    }
  };
  dfs(dfs);
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::vector<int> two_factor_cycle_lengths(const ElementSet& factor) {
  const Group& G = group_of_degree(6);
  check(factor.size() == kEdges, "two_factor_cycle_lengths: need 15 pairs");

  std::array<std::vector<int>, kEdges> adj;
  for (ElemRank r : factor) {
    auto cyc = G.element(r).cycles();
    check(cyc.size() == 2 && cyc[0].size() == 2 && cyc[1].size() == 2,
          "two_factor_cycle_lengths: member is not a double transposition");
    int u = edge_id(cyc[0][0], cyc[0][1]);
    int v = edge_id(cyc[1][0], cyc[1][1]);
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int u = 0; u < kEdges; ++u)
    check(adj[static_cast<std::size_t>(u)].size() == 2, "two_factor_cycle_lengths: not 2-regular");

  std::array<bool, kEdges> seen{};
  std::vector<int> lengths;
  for (int s = 0; s < kEdges; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0, prev = -1, cur = s;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      ++len;
      const auto& n = adj[static_cast<std::size_t>(cur)];
      int next = (n[0] == prev) ? n[1] : n[0];
      prev = cur;
      cur = next;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<ElementSet> all_triangle_two_factors() {
  std::vector<ElementSet> out;
  for (const ElementSet& f : edge_pair_two_factors()) {
    auto lens = two_factor_cycle_lengths(f);
    if (std::all_of(lens.begin(), lens.end(), [](int l) { return l == 3; }))
      out.push_back(f);
  }
  return out;
}

std::vector<ElementSet> conjugacy_class_reps(const std::vector<ElementSet>& sets) {
  const Group& G = group_of_degree(6);
  std::vector<ElementSet> reps;
  reps.reserve(sets.size());
  for (const ElementSet& s : sets) reps.push_back(G.canonical_set_form(s));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

}  // namespace schur6
